#include "rcalg/series.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/ring.hpp"

#include <algorithm>
#include <numeric>

namespace rcalg {

int HilbertSeries::top() const
{
    for (int d = cap(); d >= 0; --d)
        if (coeffs[d] != 0)
            return d;
    return -1;
}

long long HilbertSeries::total() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0LL); }

HilbertSeries HilbertSeries::trimmed() const
{
    return HilbertSeries(std::vector<long long>(coeffs.begin(), coeffs.begin() + (top() + 1)));
}

std::string HilbertSeries::to_string() const
{
    std::string s;
    int t = top();
    for (int d = 0; d <= t; ++d) {
        if (d)
            s += ' ';
        s += std::to_string(coeffs[d]);
    }
    return t < 0 ? "0" : s;
}

bool HilbertSeries::operator==(const HilbertSeries& o) const { return trimmed().coeffs == o.trimmed().coeffs; }

bool same_prefix(const HilbertSeries& a, const HilbertSeries& b, int cap)
{
    for (int d = 0; d <= cap; ++d)
        if (a.at(d) != b.at(d))
            return false;
    return true;
}

HilbertSeries froberg_truncate(const HilbertSeries& s)
{
    HilbertSeries out = s;
    bool dead = false;
    for (auto& c : out.coeffs) {
        if (c < 0)
            dead = true;
        if (dead)
            c = 0;
    }
    return out;
}

HilbertSeries rational_series(const std::vector<int>& degrees, int n, int cap)
{
    if (n < 1)
        throw ParamError("need at least one variable");
    if (cap < 0)
        return HilbertSeries();
    std::vector<long long> c(cap + 1, 0);
    for (int d = 0; d <= cap; ++d)
        c[d] = binomial(d + n - 1, n - 1);
    for (int e : degrees) {
        if (e < 1)
            throw ParamError("form degrees must be positive");
        for (int d = cap; d >= e; --d)
            c[d] -= c[d - e];
    }
    return HilbertSeries(std::move(c));
}

HilbertSeries froberg_prediction(const std::vector<int>& degrees, int n, int cap)
{
    return froberg_truncate(rational_series(degrees, n, cap));
}

LiaisonBound rc_upper_bound_liaison(const std::vector<int>& ci_degrees, const std::vector<int>& socle_degrees,
                                    int n, int cap)
{
    const int c = static_cast<int>(ci_degrees.size());
    if (c > n)
        throw ParamError("more complete-intersection forms than variables");
    if (socle_degrees.empty())
        throw ParamError("no socle degrees");
    const int s = *std::max_element(socle_degrees.begin(), socle_degrees.end());
    LiaisonBound out;
    out.e_prime = (n - c) * s - c;
    for (int d : ci_degrees)
        out.e_prime += d;
    std::vector<int> cdeg = ci_degrees;
    for (int k = c; k < n; ++k)
        cdeg.push_back(s + 1);
    const int window = std::max(cap, out.e_prime);
    out.ci_part = froberg_prediction(cdeg, n, window);
    std::vector<int> jdeg = cdeg;
    for (int si : socle_degrees) {
        out.residual_degrees.push_back(out.e_prime - si);
        jdeg.push_back(out.e_prime - si);
    }
    out.residual_part = froberg_prediction(jdeg, n, window);
    std::vector<long long> b(cap + 1, 0);
    for (int j = 0; j <= cap; ++j)
        b[j] = out.ci_part.at(j) - out.residual_part.at(out.e_prime - j);
    out.bound = HilbertSeries(std::move(b));
    return out;
}

HilbertSeries rc_min_bound_socle(const std::vector<int>& ci_degrees, int n, const std::vector<int>& socle_degrees,
                                 int cap)
{
    if (socle_degrees.empty())
        throw ParamError("no socle degrees");
    int s = 0;
    for (int si : socle_degrees) {
        if (si < 0)
            throw ParamError("negative socle degree");
        s = std::max(s, si);
    }
    HilbertSeries ci = rational_series(ci_degrees, n, std::max(cap, s));
    std::vector<long long> b(cap + 1, 0);
    for (int t = 0; t <= std::min(cap, s); ++t) {
        long long dual = 0;
        for (int si : socle_degrees)
            dual += ci.at(si - t);
        b[t] = std::min(ci.at(t), dual);
    }
    return HilbertSeries(std::move(b));
}

HilbertSeries rc_min_bound(const std::vector<int>& ci_degrees, int n, int s, int c, int cap)
{
    if (s < 0)
        throw ParamError("negative socle degree");
    if (c < 1)
        throw ParamError("socle dimension must be positive");
    return rc_min_bound_socle(ci_degrees, n, std::vector<int>(c, s), cap);
}

HilbertSeries compressed_level_hf(int n, int s, int c, int cap) { return rc_min_bound({}, n, s, c, cap); }

HilbertSeries linkage_hf(const HilbertSeries& h_ci, const HilbertSeries& h_I, int e)
{
    std::vector<long long> out(std::max(e, 0) + 1, 0);
    for (int j = 0; j <= e; ++j) {
        out[j] = h_ci.at(j) - h_I.at(e - j);
        if (out[j] < 0)
            throw NotLinkedError("negative linked Hilbert function at degree " + std::to_string(j));
    }
    return HilbertSeries(std::move(out));
}

std::vector<long long> euler_numerator(const HilbertSeries& h, int n, int cap)
{
    std::vector<long long> c(cap + 1, 0);
    for (int d = 0; d <= cap; ++d)
        c[d] = h.at(d);
    for (int k = 0; k < n; ++k)
        for (int d = cap; d >= 1; --d)
            c[d] -= c[d - 1];
    return c;
}

} // namespace rcalg
