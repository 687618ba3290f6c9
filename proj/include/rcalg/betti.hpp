#pragma once

#include "rcalg/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rcalg {

/// ⊕ R(-t)^{m_t}; only positive multiplicities are stored.
struct FreeModule
{
    std::map<int, long long> twists;

    FreeModule() = default;
    FreeModule(std::initializer_list<std::pair<const int, long long>> l);

    void add(int twist, long long mult);
    long long at(int twist) const;
    long long rank() const;
    bool empty() const { return twists.empty(); }
    /// Summands in increasing twist order, e.g. "R(-6)^9 + R(-7)"; "0" when empty.
    std::string to_string() const;

    bool operator==(const FreeModule& o) const { return twists == o.twists; }
};

FreeModule direct_sum(const FreeModule& a, const FreeModule& b);
/// K_i(d) = wedge^i of ⊕ R(-d_j). RangeError if i > r.
FreeModule koszul_module(const std::vector<int>& degrees, int i);
FreeModule truncate_le(const FreeModule& F, int y);
/// F^∨(-e): twist t becomes e - t.
FreeModule dual_twist(const FreeModule& F, int e);

struct BettiTable;

/// F_0 = R, F_1, ..., F_len.
struct ResolutionShape
{
    std::vector<FreeModule> modules;
    std::vector<std::string> notices;

    int length() const { return static_cast<int>(modules.size()) - 1; }
    const FreeModule& at(int i) const;
    /// Euler polynomial sum_i (-1)^i sum_t m_{i,t} z^t, up to the largest twist.
    std::vector<long long> euler() const;
    BettiTable betti() const;
    /// "0 -> R(-14) -> ... -> R"
    std::string to_string() const;

    bool operator==(const ResolutionShape& o) const { return modules == o.modules; }
};

ResolutionShape koszul_shape(const std::vector<int>& degrees);
ResolutionShape shape_from_betti(const BettiTable& b);

/// True if the shape's Euler polynomial equals (1-z)^n H(z) in every degree.
bool euler_matches(const ResolutionShape& shape, const HilbertSeries& h, int n);
/// F_i = dual_twist(F_{len-i}, e) for 1 <= i <= len-1.
bool is_self_dual(const ResolutionShape& shape, int e);

struct BettiTable
{
    std::map<std::pair<int, int>, long long> beta;
    /// Rows j - i above `window` are unknown (non-Artinian computations); -1 means complete.
    int window = -1;

    long long at(int i, int j) const;
    void set(int i, int j, long long v);
    int length() const;     ///< largest i with a nonzero entry
    int max_row() const;    ///< largest j - i with a nonzero entry
    std::vector<long long> totals() const;
    std::vector<long long> euler() const;

    /// Diagram layout with a `total:` header, one row per j - i and "-" for zeros.
    std::string to_text() const;
    std::string to_json() const;
    static BettiTable from_json(const std::string& text);

    bool operator==(const BettiTable& o) const { return beta == o.beta; }
};

enum class GhostClass { KOSZUL, DUALITY_FORCED, NON_KOSZUL };
const char* ghost_class_name(GhostClass c);

struct GhostEntry
{
    int i = 0;  ///< the pair beta_{i,j}, beta_{i+1,j}
    int j = 0;
    long long mult_i = 0;
    long long mult_next = 0;
    GhostClass cls = GhostClass::NON_KOSZUL;
    /// beta_{i+1,j} beyond what Koszul syzygies among the generators can account for
    long long non_koszul_excess = 0;
};

struct GhostReport
{
    std::vector<GhostEntry> entries;
    bool duality_is_interpretation = false;

    const GhostEntry* find(int i, int j) const;
    long long count(GhostClass c) const;
    std::string to_text() const;
};

/// Number of k-element sub-multisets (by position) of `degrees` summing to j.
long long subset_sum_count(const std::vector<int>& degrees, int k, int j);

/// Classifies every twist occurring in two consecutive modules. `socle_twist` is the
/// twist of the last module of a Gorenstein resolution; n defaults to the table length.
GhostReport ghost_classify(const BettiTable& b, const std::vector<int>& gen_degrees,
                           std::optional<int> socle_twist = std::nullopt, std::optional<int> n = std::nullopt);

enum class SplitPolicy { NONE, GENERATOR, MIN_CONSISTENT };
SplitPolicy parse_split_policy(const std::string& s);
const char* split_policy_name(SplitPolicy p);

/// Resolution shape of c : I from the Koszul shape of c and a shape for R/I:
/// G_i = dual_twist(K_{n-i}, d) ⊕ dual_twist(F_{n-i+1}, d). MIN_CONSISTENT needs
/// `target` (the Hilbert series of the residual) and throws SplitError if the split
/// shape disagrees with it.
ResolutionShape mapping_cone_link(const ResolutionShape& res_ci, const ResolutionShape& res_I, int d,
                                  SplitPolicy split, const std::optional<HilbertSeries>& target = std::nullopt);

} // namespace rcalg
