#include "rcalg/shapes.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rcalg {

long long LinearExpr::evaluate(const std::map<std::string, long long>& values) const
{
    long long v = constant;
    for (const auto& [name, c] : coeffs) {
        auto it = values.find(name);
        if (it != values.end())
            v += c * it->second;
    }
    return v;
}

std::string LinearExpr::to_string() const
{
    std::string s = constant != 0 || coeffs.empty() ? std::to_string(constant) : "";
    for (const auto& [name, c] : coeffs) {
        if (c == 0)
            continue;
        if (!s.empty())
            s += c > 0 ? "+" : "-";
        else if (c < 0)
            s += "-";
        if (std::llabs(c) != 1)
            s += std::to_string(std::llabs(c));
        s += name;
    }
    return s;
}

ResolutionShape SymbolicShape::evaluate(const std::map<std::string, long long>& values) const
{
    ResolutionShape out = base;
    for (const Term& t : terms) {
        long long m = t.mult.evaluate(values);
        if (m < 0)
            throw InfeasibleError("multiplicity " + t.mult.to_string() + " of R(-" + std::to_string(t.twist) +
                                  ") in F" + std::to_string(t.i) + " is negative");
        if (t.i > out.length())
            out.modules.resize(t.i + 1);
        out.modules[t.i].add(t.twist, m);
    }
    return out;
}

std::string SymbolicShape::to_string() const
{
    int len = base.length();
    for (const Term& t : terms)
        len = std::max(len, t.i);
    std::string s = "0";
    for (int i = len; i >= 0; --i) {
        std::string mod;
        std::map<int, LinearExpr> sums;
        for (const auto& [tw, m] : base.at(i).twists)
            sums[tw].constant += m;
        for (const Term& t : terms) {
            if (t.i != i)
                continue;
            LinearExpr& acc = sums[t.twist];
            acc.constant += t.mult.constant;
            for (const auto& [name, c] : t.mult.coeffs)
                acc.coeffs[name] += c;
        }
        std::map<int, std::string> parts;
        for (auto& [tw, e] : sums) {
            for (auto it = e.coeffs.begin(); it != e.coeffs.end();)
                it = it->second == 0 ? e.coeffs.erase(it) : std::next(it);
            if (!(e.is_constant() && e.constant == 0))
                parts[tw] = e.to_string();
        }
        for (const auto& [tw, e] : parts) {
            if (!mod.empty())
                mod += " + ";
            mod += tw == 0 ? "R" : "R(" + std::to_string(-tw) + ")";
            if (e != "1")
                mod += "^" + (e.find_first_not_of("0123456789") == std::string::npos ? e : "(" + e + ")");
        }
        s += " -> " + (mod.empty() ? std::string("0") : mod);
    }
    return s;
}

namespace {

std::vector<int> normalize_ci(std::vector<int> ci, int t, int n, std::vector<std::string>& notices)
{
    std::sort(ci.begin(), ci.end());
    for (int d : ci)
        if (d < 1)
            throw ParamError("complete intersection degrees must be positive");
    std::vector<int> kept;
    for (int d : ci) {
        if (d <= t)
            kept.push_back(d);
        else
            notices.push_back("dropped complete-intersection degree " + std::to_string(d) + " > t = " +
                              std::to_string(t));
    }
    if (static_cast<int>(kept.size()) > n)
        throw ParamError("more complete-intersection forms than variables");
    return kept;
}

void require_socle_room(const std::vector<int>& d, int n, int socle)
{
    if (static_cast<int>(d.size()) < n)
        return;
    int top = 0;
    for (int x : d)
        top += x - 1;
    if (top < socle)
        throw InfeasibleError("R/c vanishes in degree " + std::to_string(socle) + " (its socle degree is " +
                              std::to_string(top) + ")");
}

FreeModule koszul_or_zero(const std::vector<int>& d, int i)
{
    if (i < 0 || i > static_cast<int>(d.size()))
        return FreeModule();
    return koszul_module(d, i);
}

/// N[t] - E[t] where N = (1-z)^n h and E is the Euler polynomial of `known`.
std::vector<long long> euler_defect(const ResolutionShape& known, const HilbertSeries& h, int n, int cap)
{
    std::vector<long long> want = euler_numerator(h, n, cap);
    std::vector<long long> e = known.euler();
    for (int d = 0; d <= cap; ++d)
        want[d] -= d < static_cast<int>(e.size()) ? e[d] : 0;
    return want;
}

long long sign(int i) { return i % 2 ? -1 : 1; }

ResolutionShape empty_shape(int n)
{
    ResolutionShape s;
    s.modules.resize(n + 1);
    s.modules[0].add(0, 1);
    return s;
}

} // namespace

long long compressed_gor_alpha(int n, int t, int i)
{
    return binomial(t + i - 1, i - 1) * binomial(t + n, n - i) -
           binomial(t - 1 + n - i, n - i) * binomial(t - 1 + n, i - 1);
}

ResolutionShape compressed_gor_even(int n, int t)
{
    if (n < 2 || t < 1)
        throw ParamError("compressed Gorenstein shape needs n >= 2 and t >= 1");
    ResolutionShape s = empty_shape(n);
    for (int i = 1; i < n; ++i)
        s.modules[i].add(t + i, compressed_gor_alpha(n, t, i));
    s.modules[n].add(2 * t + n, 1);
    return s;
}

ResolutionShape rc_gor_even(int n, int t, std::vector<int> ci_degrees)
{
    if (n < 1 || t < 0)
        throw ParamError("need n >= 1 and t >= 0");
    ResolutionShape s = empty_shape(n);
    const std::vector<int> d = normalize_ci(std::move(ci_degrees), t, n, s.notices);
    require_socle_room(d, n, 2 * t);
    const int e = 2 * t + n;
    for (int i = 1; i < n; ++i)
        s.modules[i] = direct_sum(truncate_le(koszul_or_zero(d, i), t + i - 1),
                                  dual_twist(truncate_le(koszul_or_zero(d, n - i), t + n - i - 1), e));
    s.modules[n].add(e, 1);
    const HilbertSeries h = rc_min_bound(d, n, 2 * t, 1, 2 * t);
    const std::vector<long long> defect = euler_defect(s, h, n, e);
    for (int i = 1; i < n; ++i) {
        long long a = sign(i) * defect[t + i];
        if (a < 0)
            throw InfeasibleError("alpha_" + std::to_string(i) + " = " + std::to_string(a) + " is negative");
        s.modules[i].add(t + i, a);
    }
    if (!euler_matches(s, h, n))
        throw InfeasibleError("Euler identity fails for the solved shape");
    return s;
}

SymbolicShape rc_gor_odd_shape(int n, int t, std::vector<int> ci_degrees)
{
    if (n < 2 || t < 0)
        throw ParamError("need n >= 2 and t >= 0");
    SymbolicShape out;
    out.base = empty_shape(n);
    const std::vector<int> d = normalize_ci(std::move(ci_degrees), t, n, out.notices);
    require_socle_room(d, n, 2 * t + 1);
    const int S = 2 * t + 1 + n;
    for (int i = 1; i < n; ++i)
        out.base.modules[i] = direct_sum(truncate_le(koszul_or_zero(d, i), t + i - 1),
                                         dual_twist(truncate_le(koszul_or_zero(d, n - i), t + n - i - 1), S));
    out.base.modules[n].add(S, 1);
    const HilbertSeries h = rc_min_bound(d, n, 2 * t + 1, 1, 2 * t + 1);
    const std::vector<long long> defect = euler_defect(out.base, h, n, S);
    std::vector<long long> D(n + 1, 0);
    for (int a = 1; a <= n; ++a)
        D[a] = sign(a) * defect[t + a];

    // u[a]: multiplicity of R(-t-a) in F_a; F_i also carries R(-t-i-1)^{u[n-i]}
    std::vector<LinearExpr> u(n + 1);
    if (D[1] < 0)
        throw InfeasibleError("number of degree t+1 generators is negative");
    if (D[n] != -D[1])
        throw InfeasibleError("Euler defect is not symmetric");
    u[1].constant = D[1];
    for (int a = 2; 2 * a <= n + 1; ++a) {
        const int b = n + 1 - a;
        const std::string y = "y" + std::to_string(a);
        out.params.push_back(y);
        if (a == b) {
            if (D[a] != 0)
                throw InfeasibleError("middle Euler defect is nonzero");
            u[a].coeffs[y] = 1;
            continue;
        }
        if (D[b] != -D[a])
            throw InfeasibleError("Euler defect is not symmetric");
        u[a].constant = std::max(D[a], 0LL);
        u[b].constant = std::max(-D[a], 0LL);
        u[a].coeffs[y] = 1;
        u[b].coeffs[y] = 1;
    }
    for (int i = 1; i < n; ++i) {
        out.terms.push_back({i, t + i, u[i]});
        out.terms.push_back({i, t + i + 1, u[n - i]});
    }
    return out;
}

ShapeCheck check_gor_odd(const ResolutionShape& shape, int n, int t, const std::vector<int>& ci_degrees)
{
    std::vector<std::string> ignored;
    const std::vector<int> d = normalize_ci(ci_degrees, t, n, ignored);
    ShapeCheck c;
    c.euler = euler_matches(shape, rc_min_bound(d, n, 2 * t + 1, 1, 2 * t + 1), n);
    c.duality = shape.length() == n && shape.at(n) == FreeModule({{2 * t + 1 + n, 1}}) &&
                is_self_dual(shape, 2 * t + 1 + n);
    return c;
}

PointsResolution quadric_points_resolution(int N)
{
    if (N < 1)
        throw ParamError("need at least one point");
    int i = 0;
    while ((i + 1) * (i + 1) < N)
        ++i;
    const int h = N - i * i;  // 0 < h <= 2i + 1
    PointsResolution out;
    for (int k = 0; k < i; ++k)
        out.hvector.push_back(2 * k + 1);
    out.hvector.push_back(h);
    ResolutionShape& s = out.shape;
    s = empty_shape(3);
    if (i <= 1) {
        // few points: the quadric is not a minimal generator, resolutions are classical
        switch (N) {
        case 1:
            s = koszul_shape({1, 1, 1});
            break;
        case 2:
            s = koszul_shape({1, 1, 2});
            break;
        case 3:
            s.modules[1] = FreeModule({{1, 1}, {2, 3}});
            s.modules[2] = FreeModule({{3, 5}});
            s.modules[3] = FreeModule({{4, 2}});
            break;
        default:
            s.modules[1] = FreeModule({{2, 6}});
            s.modules[2] = FreeModule({{3, 8}});
            s.modules[3] = FreeModule({{4, 3}});
            break;
        }
        return out;
    }
    // delta_m = third difference of the h-vector
    std::vector<long long> delta(i + 8, 0);
    for (int m = 0; m < static_cast<int>(delta.size()); ++m) {
        long long v = 0;
        for (int k = 0; k <= 3; ++k) {
            int idx = m - k;
            long long hv = idx >= 0 && idx < static_cast<int>(out.hvector.size()) ? out.hvector[idx] : 0;
            v += (k % 2 ? -1 : 1) * binomial(3, k) * hv;
        }
        delta[m] = v;
    }
    const long long d1 = delta[i + 1], d2 = delta[i + 2];
    s.modules[1].add(i, 2 * i + 1 - h);
    s.modules[1].add(i + 1, std::max(0LL, -d1));
    s.modules[1].add(2, 1);
    s.modules[2].add(i + 1, std::max(0LL, d1));
    s.modules[2].add(i + 2, std::max(0LL, d2));
    s.modules[3].add(i + 2, std::max(0LL, -d2));
    s.modules[3].add(i + 3, h);
    return out;
}

ResolutionShape rc_gor_odd_quadric(int t)
{
    if (t < 2)
        throw ParamError("t must be at least 2");
    const long long m = 2 * t + 3;
    ResolutionShape s = empty_shape(4);
    s.modules[1] = FreeModule({{t + 1, m}, {2, 1}});
    s.modules[2] = FreeModule({{t + 2, m}, {t + 3, m}});
    s.modules[3] = FreeModule({{t + 4, m}, {2 * t + 3, 1}});
    s.modules[4] = FreeModule({{2 * t + 5, 1}});
    return s;
}

ResolutionShape mrc_resolution(int n, std::vector<int> ci_degrees, int t)
{
    const int r = static_cast<int>(ci_degrees.size());
    if (r > n - 2)
        throw ParamError("the minimal resolution conjecture route needs r <= n - 2");
    int m = 1;
    for (int d : ci_degrees)
        m += d - 1;
    if (t < m)
        throw ParamError("t = " + std::to_string(t) + " is below the regularity " + std::to_string(m));
    SymbolicShape odd = rc_gor_odd_shape(n, t, ci_degrees);
    // complementarity: F_i may carry R(-t-i) only for i <= n/2
    for (const auto& term : odd.terms) {
        if (term.twist == term.i + t && 2 * term.i > n && term.mult.constant != 0)
            throw InfeasibleError("complementarity fails at F" + std::to_string(term.i));
    }
    ResolutionShape s = odd.evaluate();
    s.notices = odd.notices;
    s.notices.push_back("conditional on the minimal resolution conjecture for points on a complete intersection");
    return s;
}

AciResult aci_resolution(int n, const std::vector<int>& degrees)
{
    if (static_cast<int>(degrees.size()) != n + 1)
        throw ParamError("an almost complete intersection needs n + 1 degrees");
    if (!std::is_sorted(degrees.begin(), degrees.end()) || degrees.front() < 2)
        throw ParamError("degrees must be sorted and at least 2");
    const int d = std::accumulate(degrees.begin(), degrees.begin() + n, 0);
    if (degrees[n] > d - n)
        throw ParamError("last degree exceeds sum of the first n minus n");
    const int total = d + degrees[n];
    if ((total - n) % 2 != 0)
        throw ParityError("sum of degrees minus n is odd");
    AciResult out;
    out.c = d - degrees[n] - n;
    for (int i = 0; i < n; ++i)
        if (2 * degrees[i] <= out.c)
            out.r = i + 1;
    std::vector<int> small(degrees.begin(), degrees.begin() + out.r);
    out.gorenstein = rc_gor_even(n, out.c / 2, small);
    std::vector<int> ci(degrees.begin(), degrees.begin() + n);
    HilbertSeries target = froberg_prediction(degrees, n, d);
    out.aci = mapping_cone_link(koszul_shape(ci), out.gorenstein, d, SplitPolicy::MIN_CONSISTENT, target);
    return out;
}

LevelShape general_forms_level_shape(int n, const std::vector<int>& ci_degrees, int s, int c)
{
    if (n < 3)
        throw ParamError("need n >= 3");
    if (static_cast<int>(ci_degrees.size()) != n)
        throw ParamError("need an Artinian complete intersection (n degrees)");
    if (c < 1 || s < 0)
        throw ParamError("need c >= 1 and s >= 0");
    const int d = std::accumulate(ci_degrees.begin(), ci_degrees.end(), 0);
    LevelShape out;
    out.form_degree = d - s - n;
    if (out.form_degree < 1)
        throw ParamError("form degree d - s - n must be positive");
    std::vector<int> g = ci_degrees;
    g.insert(g.end(), c, out.form_degree);
    std::sort(g.begin(), g.end());
    const HilbertSeries hI = froberg_prediction(g, n, d);
    const int delta = out.delta = hI.top();

    SymbolicShape& F = out.forms;
    F.base = empty_shape(n);
    for (int x : g)
        F.base.modules[1].add(x, 1);
    for (int m = 2; m < n; ++m)
        F.base.modules[m] = truncate_le(koszul_module(g, m), delta + m - 2);
    const std::vector<long long> defect = euler_defect(F.base, hI, n, delta + n);
    auto constant = [](long long v) {
        LinearExpr e;
        e.constant = v;
        return e;
    };
    long long z2 = defect[delta + 1];
    if (z2 < 0)
        throw InfeasibleError("z2 is negative");
    F.terms.push_back({2, delta + 1, constant(z2)});
    for (int m = 2; m < n; ++m) {
        long long D = sign(m) * defect[delta + m];
        const std::string p = "g" + std::to_string(m);
        F.params.push_back(p);
        LinearExpr w = constant(std::max(D, 0LL)), z = constant(std::max(-D, 0LL));
        w.coeffs[p] = 1;
        z.coeffs[p] = 1;
        F.terms.push_back({m, delta + m, w});
        F.terms.push_back({m + 1, delta + m, z});
    }
    long long wn = sign(n) * defect[delta + n];
    if (wn < 0)
        throw InfeasibleError("w_n is negative");
    F.terms.push_back({n, delta + n, constant(wn)});

    SymbolicShape& J = out.residual;
    J.base = mapping_cone_link(koszul_shape(ci_degrees), F.base, d, SplitPolicy::GENERATOR);
    J.base.modules.resize(n + 1);
    J.params = F.params;
    for (const auto& t : F.terms)
        J.terms.push_back({n - t.i + 1, d - t.twist, t.mult});
    return out;
}

} // namespace rcalg
