#pragma once

#include <string>
#include <vector>

namespace rcalg {

/// Integer power series known up to degree `cap` inclusive.
struct HilbertSeries
{
    std::vector<long long> coeffs;

    HilbertSeries() = default;
    explicit HilbertSeries(std::vector<long long> c) : coeffs(std::move(c)) {}

    int cap() const { return static_cast<int>(coeffs.size()) - 1; }
    /// Coefficient at d, zero outside [0, cap].
    long long at(int d) const { return d < 0 || d > cap() ? 0 : coeffs[d]; }
    /// Last nonzero degree, -1 for the zero series.
    int top() const;
    long long total() const;
    /// Drops trailing zeros.
    HilbertSeries trimmed() const;
    /// Space separated coefficients through the last nonzero one.
    std::string to_string() const;

    bool operator==(const HilbertSeries& o) const;
};

/// Equality on the common window, trailing zeros implied.
bool same_prefix(const HilbertSeries& a, const HilbertSeries& b, int cap);

HilbertSeries froberg_truncate(const HilbertSeries& s);
/// Exact expansion of prod (1 - Z^{d_i}) / (1 - Z)^n up to cap.
HilbertSeries rational_series(const std::vector<int>& degrees, int n, int cap);
HilbertSeries froberg_prediction(const std::vector<int>& degrees, int n, int cap);

struct LiaisonBound
{
    HilbertSeries ci_part;        ///< series of R/c', c' = c + (s+1)-forms
    HilbertSeries residual_part;  ///< truncated series of the expected residual J'
    HilbertSeries bound;          ///< ci_part(j) - residual_part(e'-j)
    int e_prime = 0;
    std::vector<int> residual_degrees;  ///< e' - s_i
};

LiaisonBound rc_upper_bound_liaison(const std::vector<int>& ci_degrees, const std::vector<int>& socle_degrees,
                                    int n, int cap);

/// min{ dim (R/c)_t, c * dim (R/c)_{s-t} } for t <= s, zero above s.
HilbertSeries rc_min_bound(const std::vector<int>& ci_degrees, int n, int s, int c, int cap);
/// Non-level version: min{ dim (R/c)_t, sum_i dim (R/c)_{s_i - t} }.
HilbertSeries rc_min_bound_socle(const std::vector<int>& ci_degrees, int n, const std::vector<int>& socle_degrees,
                                 int cap);
HilbertSeries compressed_level_hf(int n, int s, int c, int cap);

/// h_J(j) = h_ci(j) - h_I(e - j); throws NotLinkedError on a negative coefficient.
HilbertSeries linkage_hf(const HilbertSeries& h_ci, const HilbertSeries& h_I, int e);

/// Coefficients of (1 - z)^n * H(z) up to cap.
std::vector<long long> euler_numerator(const HilbertSeries& h, int n, int cap);

} // namespace rcalg
