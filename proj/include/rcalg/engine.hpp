#pragma once

#include "rcalg/betti.hpp"
#include "rcalg/matrix.hpp"
#include "rcalg/ring.hpp"
#include "rcalg/series.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rcalg {

/// Enough to rebuild an ideal bit-identically: ring data, seed and construction steps.
struct Provenance
{
    uint64_t seed = 1;
    std::vector<std::string> recipe;
};

struct QuotientBasis;

struct GradedIdeal
{
    RingPtr ring;
    std::vector<HomogPoly> gens;
    Provenance provenance;
    /// Quotient data produced while constructing the ideal (colon, annihilator), if any.
    std::shared_ptr<const QuotientBasis> known_quotient;

    GradedIdeal() = default;
    GradedIdeal(RingPtr r, std::vector<HomogPoly> g, Provenance p = {});

    std::vector<int> degrees() const;
    bool is_unit() const;
    /// JSON with n, p, seed, recipe and the generators as text.
    std::string witness_json() const;
};

/// R/I degree by degree through the inverse system W_d = I_d^perp (divided-power pairing).
/// dual[d] is the RREF basis of W_d; its pivot columns are the chosen monomial
/// representatives of (R/I)_d.
struct QuotientBasis
{
    RingPtr ring;
    int cap = 0;
    std::vector<PrimeMatrix> dual;
    std::vector<std::vector<size_t>> pivots;
    /// contr[d][i]: coordinates of x_i o (rows of dual[d]) in dual[d-1], size h(d-1) x h(d)
    std::vector<std::vector<PrimeMatrix>> contr;

    size_t h(int d) const { return d < 0 || d > cap ? 0 : dual[d].rows(); }
    HilbertSeries hilbert() const;
    /// True when h vanishes at some degree <= cap (and so beyond).
    bool artinian() const;
    /// Multiplication by x_i as a map A_d -> A_{d+1}, size h(d+1) x h(d).
    PrimeMatrix mult(int d, int i) const;
};

/// -1 lets the builder stop once h vanishes (after the last generator degree).
std::shared_ptr<const QuotientBasis> quotient_basis(const GradedIdeal& I, int cap = -1);
/// From subspaces W_d closed under contraction (rows need not be reduced).
QuotientBasis quotient_from_dual(RingPtr ring, const std::vector<PrimeMatrix>& W);

/// Generators of the ideal with the given inverse system, degrees 0..max_degree.
std::vector<HomogPoly> extract_generators(const QuotientBasis& q, int max_degree);

HilbertSeries hilbert_function(const GradedIdeal& I, int cap);
/// Direct rank computation of I_d (Macaulay matrices); slow, used for cross-checks.
HilbertSeries hilbert_function_direct(const GradedIdeal& I, int cap);

/// (degree, count) pairs, count = dim I_d - dim R_1 I_{d-1}.
std::vector<std::pair<int, long long>> minimal_generators(const GradedIdeal& I, int cap = -1);

/// Koszul homology of R/I. Rows j - i <= cap - 1 are exact; the table is complete
/// (window -1) when R/I is Artinian within the cap.
BettiTable betti_numbers(const QuotientBasis& q);
BettiTable betti_numbers(const GradedIdeal& I, int cap = -1);

struct SocleProfile
{
    std::vector<std::pair<int, long long>> degrees;  ///< (degree, dimension), increasing
    bool is_level() const { return degrees.size() == 1; }
    bool is_gorenstein() const { return degrees.size() == 1 && degrees[0].second == 1; }
    /// s_1 <= ... <= s_t with repetition
    std::vector<int> list() const;
    int top() const { return degrees.empty() ? -1 : degrees.back().first; }
    std::string to_string() const;
};

SocleProfile socle(const QuotientBasis& q);
SocleProfile socle(const GradedIdeal& I, int cap = -1);

bool contains(const GradedIdeal& I, const GradedIdeal& c);

/// c : I. Default cap is the socle degree of R/c plus one.
GradedIdeal ideal_quotient(const GradedIdeal& c, const GradedIdeal& I, int cap = -1);

struct AnnihilatorResult
{
    GradedIdeal ideal;
    std::vector<std::string> warnings;
};
/// Ann(F_1, ..., F_c) for forms in the dual variables, x_i acting as d/dy_i.
AnnihilatorResult annihilator_ideal(RingPtr ring, const std::vector<HomogPoly>& forms);

/// Basis of [c_j]^perp for the differentiation pairing.
std::vector<HomogPoly> perp_basis(const GradedIdeal& c, int j);

/// A general element of I of degree e: sum_k g_k * (random form of degree e - deg g_k).
HomogPoly general_element(const GradedIdeal& I, int e, FieldRng& rng);

enum class BoundVerdict { MEETS_CONJECTURED_BOUND, BELOW_BOUND, EXCEEDS_BOUND };
const char* verdict_name(BoundVerdict v);

struct BoundComparison
{
    HilbertSeries bound;
    BoundVerdict verdict = BoundVerdict::MEETS_CONJECTURED_BOUND;
    std::vector<int> below;   ///< degrees where h < bound
    std::vector<int> above;   ///< degrees where h > bound
};

struct CompressionReport
{
    HilbertSeries hf;
    SocleProfile socle;
    BoundComparison liaison;
    BoundComparison min_bound;
    /// Operational verdict: the liaison comparison (maximal length is not certifiable).
    BoundVerdict verdict = BoundVerdict::MEETS_CONJECTURED_BOUND;
    std::string to_text() const;
};

CompressionReport is_relatively_compressed(const GradedIdeal& I, const GradedIdeal& c, int cap = -1);

} // namespace rcalg
