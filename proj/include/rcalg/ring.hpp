#pragma once

#include "rcalg/field.hpp"
#include "rcalg/matrix.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace rcalg {

using Exponents = std::vector<int>;

long long binomial(long long n, long long k);

/// Monomials of one degree in graded-lex order: x1^d first, then x1^(d-1) x2, ...
struct DegreeBasis
{
    int degree = 0;
    std::vector<Exponents> monomials;
    /// first variable with positive exponent, and index of m / x_that in degree-1
    std::vector<int> first_var;
    std::vector<uint32_t> first_quotient;
};

/// The graded ring k[x_1..x_n] over GF(p). The basis cache is filled on demand under
/// a lock; returned references stay valid for the lifetime of the context.
class RingCtx
{
public:
    RingCtx(int n, PrimeField field);

    int n() const { return n_; }
    const PrimeField& field() const { return field_; }

    /// C(d+n-1, n-1); zero for d < 0.
    size_t dim(int d) const;
    const DegreeBasis& basis(int d) const;
    void reserve(int max_degree) const;

    /// Position of an exponent vector in its degree basis (closed-form ranking).
    size_t index(const Exponents& e) const;
    size_t index(const int* e) const;

    std::string monomial_text(const Exponents& e, char var = 'x') const;

private:
    int n_;
    PrimeField field_;
    mutable std::mutex mu_;
    mutable std::vector<std::unique_ptr<DegreeBasis>> cache_;
};

using RingPtr = std::shared_ptr<const RingCtx>;

/// Homogeneous polynomial: coefficient vector over the degree basis.
struct HomogPoly
{
    int degree = 0;
    std::vector<uint32_t> coeffs;

    bool is_zero() const;
    size_t term_count() const;
    bool operator==(const HomogPoly& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

HomogPoly zero_poly(const RingCtx& R, int d);
HomogPoly monomial_poly(const RingCtx& R, const Exponents& e, uint32_t c = 1);
HomogPoly variable(const RingCtx& R, int i);
HomogPoly add(const RingCtx& R, const HomogPoly& f, const HomogPoly& g);
HomogPoly scale(const RingCtx& R, const HomogPoly& f, uint32_t c);
HomogPoly multiply(const RingCtx& R, const HomogPoly& f, const HomogPoly& g);

/// Column j is f times the j-th monomial of degree d.
PrimeMatrix mult_map(const RingCtx& R, const HomogPoly& f, int d);

struct ContractionMap
{
    PrimeMatrix matrix;               ///< rows: S_{s-d} basis, cols: R_d basis
    std::optional<std::string> warning;
};

/// Catalecticant R_d -> S_{s-d}, g |-> g o F with x_i acting as d/dy_i.
ContractionMap contraction_map(const RingCtx& R, const HomogPoly& F, int d);

/// Differentiation action g o F (result in degree deg F - deg g, zero if negative).
HomogPoly differentiate(const RingCtx& R, const HomogPoly& g, const HomogPoly& F);

/// Seeded uniform stream over GF(p). Draws are consumed in call order.
class FieldRng
{
public:
    explicit FieldRng(uint64_t seed) : eng_(seed), seed_(seed) {}
    uint32_t uniform(uint32_t p);
    uint32_t nonzero(uint32_t p);
    uint64_t seed() const { return seed_; }

private:
    std::mt19937_64 eng_;
    uint64_t seed_;
};

HomogPoly random_form(const RingCtx& R, int d, FieldRng& rng);

/// `c*x1^a1*...*xn^an` terms joined by ` + `; exponents 0 are omitted, "0" for zero.
std::string to_text(const RingCtx& R, const HomogPoly& f, char var = 'x');
/// Accepts the format above, optional coefficients, optional '-' signs, and any of
/// x1..xn / y1..yn as variable names. Throws ParseError on malformed or inhomogeneous input.
HomogPoly parse_poly(const RingCtx& R, const std::string& text);

} // namespace rcalg
