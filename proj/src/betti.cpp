#include "rcalg/betti.hpp"
#include "rcalg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace rcalg {

FreeModule::FreeModule(std::initializer_list<std::pair<const int, long long>> l)
{
    for (const auto& [t, m] : l)
        add(t, m);
}

void FreeModule::add(int twist, long long mult)
{
    if (mult == 0)
        return;
    long long& v = twists[twist];
    v += mult;
    if (v < 0)
        throw ParamError("negative multiplicity at twist " + std::to_string(twist));
    if (v == 0)
        twists.erase(twist);
}

long long FreeModule::at(int twist) const
{
    auto it = twists.find(twist);
    return it == twists.end() ? 0 : it->second;
}

long long FreeModule::rank() const
{
    long long r = 0;
    for (const auto& [t, m] : twists)
        r += m;
    return r;
}

std::string FreeModule::to_string() const
{
    if (twists.empty())
        return "0";
    std::string s;
    for (const auto& [t, m] : twists) {
        if (!s.empty())
            s += " + ";
        s += t == 0 ? "R" : "R(" + std::to_string(-t) + ")";
        if (m != 1)
            s += "^" + std::to_string(m);
    }
    return s;
}

FreeModule direct_sum(const FreeModule& a, const FreeModule& b)
{
    FreeModule s = a;
    for (const auto& [t, m] : b.twists)
        s.add(t, m);
    return s;
}

FreeModule koszul_module(const std::vector<int>& degrees, int i)
{
    const int r = static_cast<int>(degrees.size());
    if (i < 0 || i > r)
        throw RangeError("Koszul index " + std::to_string(i) + " outside [0, " + std::to_string(r) + "]");
    // dp[k][t]: number of k-subsets of the first degrees summing to t
    std::vector<std::map<int, long long>> dp(i + 1);
    dp[0][0] = 1;
    for (int d : degrees)
        for (int k = i; k >= 1; --k)
            for (const auto& [t, m] : dp[k - 1])
                dp[k][t + d] += m;
    FreeModule F;
    for (const auto& [t, m] : dp[i])
        F.add(t, m);
    return F;
}

FreeModule truncate_le(const FreeModule& F, int y)
{
    FreeModule out;
    for (const auto& [t, m] : F.twists)
        if (t <= y)
            out.add(t, m);
    return out;
}

FreeModule dual_twist(const FreeModule& F, int e)
{
    FreeModule out;
    for (const auto& [t, m] : F.twists)
        out.add(e - t, m);
    return out;
}

const FreeModule& ResolutionShape::at(int i) const
{
    static const FreeModule zero;
    return i < 0 || i > length() ? zero : modules[i];
}

std::vector<long long> ResolutionShape::euler() const
{
    int top = 0;
    for (const auto& F : modules)
        if (!F.empty())
            top = std::max(top, F.twists.rbegin()->first);
    std::vector<long long> e(top + 1, 0);
    for (int i = 0; i <= length(); ++i)
        for (const auto& [t, m] : modules[i].twists)
            e[t] += (i % 2 ? -m : m);
    return e;
}

BettiTable ResolutionShape::betti() const
{
    BettiTable b;
    for (int i = 0; i <= length(); ++i)
        for (const auto& [t, m] : modules[i].twists)
            b.set(i, t, m);
    return b;
}

std::string ResolutionShape::to_string() const
{
    int last = length();
    while (last > 0 && modules[last].empty())
        --last;
    std::string s = "0";
    for (int i = last; i >= 0; --i)
        s += " -> " + modules[i].to_string();
    return s;
}

ResolutionShape koszul_shape(const std::vector<int>& degrees)
{
    ResolutionShape s;
    for (int i = 0; i <= static_cast<int>(degrees.size()); ++i)
        s.modules.push_back(koszul_module(degrees, i));
    return s;
}

ResolutionShape shape_from_betti(const BettiTable& b)
{
    ResolutionShape s;
    s.modules.resize(std::max(b.length(), 0) + 1);
    for (const auto& [ij, m] : b.beta)
        s.modules[ij.first].add(ij.second, m);
    return s;
}

bool euler_matches(const ResolutionShape& shape, const HilbertSeries& h, int n)
{
    std::vector<long long> e = shape.euler();
    int cap = std::max<int>(static_cast<int>(e.size()) - 1, h.top() + n);
    std::vector<long long> want = euler_numerator(h, n, cap);
    for (int d = 0; d <= cap; ++d) {
        long long got = d < static_cast<int>(e.size()) ? e[d] : 0;
        if (got != want[d])
            return false;
    }
    return true;
}

bool is_self_dual(const ResolutionShape& shape, int e)
{
    int len = shape.length();
    for (int i = 1; i < len; ++i)
        if (!(shape.at(i) == dual_twist(shape.at(len - i), e)))
            return false;
    return true;
}

long long BettiTable::at(int i, int j) const
{
    auto it = beta.find({i, j});
    return it == beta.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long long v)
{
    if (v < 0)
        throw ParamError("negative Betti number");
    if (v == 0)
        beta.erase({i, j});
    else
        beta[{i, j}] = v;
}

int BettiTable::length() const
{
    int l = -1;
    for (const auto& [ij, m] : beta)
        l = std::max(l, ij.first);
    return l;
}

int BettiTable::max_row() const
{
    int r = 0;
    for (const auto& [ij, m] : beta)
        r = std::max(r, ij.second - ij.first);
    return r;
}

std::vector<long long> BettiTable::totals() const
{
    std::vector<long long> t(std::max(length(), 0) + 1, 0);
    for (const auto& [ij, m] : beta)
        t[ij.first] += m;
    return t;
}

std::vector<long long> BettiTable::euler() const { return shape_from_betti(*this).euler(); }

std::string BettiTable::to_text() const
{
    const auto tot = totals();
    const int cols = static_cast<int>(tot.size());
    std::ostringstream head;
    head << "total:";
    for (int i = 0; i < cols; ++i)
        head << std::setw(i == 0 ? 7 : 6) << tot[i];
    std::string h = head.str();
    std::ostringstream os;
    os << h << '\n' << std::string(h.size() + 1, '-') << '\n';
    for (int r = 0; r <= max_row(); ++r) {
        os << std::setw(7) << r << ':';
        for (int i = 0; i < cols; ++i) {
            long long v = at(i, i + r);
            os << std::setw(i == 0 ? 7 : 6);
            if (v == 0)
                os << '-';
            else
                os << v;
        }
        os << '\n';
    }
    return os.str();
}

std::string BettiTable::to_json() const
{
    nlohmann::json j;
    j["betti"] = nlohmann::json::array();
    for (const auto& [ij, m] : beta)
        j["betti"].push_back({ij.first, ij.second, m});
    if (window >= 0)
        j["window"] = window;
    return j.dump();
}

BettiTable BettiTable::from_json(const std::string& text)
{
    BettiTable b;
    try {
        auto j = nlohmann::json::parse(text);
        for (const auto& e : j.at("betti"))
            b.set(e.at(0).get<int>(), e.at(1).get<int>(), b.at(e.at(0).get<int>(), e.at(1).get<int>()) +
                                                              e.at(2).get<long long>());
        if (j.contains("window"))
            b.window = j["window"].get<int>();
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad Betti JSON: ") + e.what());
    }
    return b;
}

const char* ghost_class_name(GhostClass c)
{
    switch (c) {
    case GhostClass::KOSZUL:
        return "KOSZUL";
    case GhostClass::DUALITY_FORCED:
        return "DUALITY_FORCED";
    case GhostClass::NON_KOSZUL:
        return "NON_KOSZUL";
    }
    return "?";
}

const GhostEntry* GhostReport::find(int i, int j) const
{
    for (const auto& e : entries)
        if (e.i == i && e.j == j)
            return &e;
    return nullptr;
}

long long GhostReport::count(GhostClass c) const
{
    return std::count_if(entries.begin(), entries.end(), [c](const GhostEntry& e) { return e.cls == c; });
}

std::string GhostReport::to_text() const
{
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "ghost R(-" << e.j << ") in F" << e.i << "^" << e.mult_i << " / F" << e.i + 1 << "^" << e.mult_next
           << ": " << ghost_class_name(e.cls);
        if (e.non_koszul_excess > 0 && e.cls == GhostClass::NON_KOSZUL)
            os << " (excess " << e.non_koszul_excess << ")";
        if (e.cls == GhostClass::DUALITY_FORCED)
            os << " (dual-position rule)";
        os << '\n';
    }
    return os.str();
}

long long subset_sum_count(const std::vector<int>& degrees, int k, int j)
{
    if (k < 0 || k > static_cast<int>(degrees.size()))
        return 0;
    return koszul_module(degrees, k).at(j);
}

namespace {

bool koszul_pair(const BettiTable& b, const std::vector<int>& gens, int i, int j)
{
    // i = 0 pairs R with generators of degree 0 only, which never happens for proper ideals
    if (i >= 1 && subset_sum_count(gens, i, j) == 0)
        return false;
    return b.at(i + 1, j) <= subset_sum_count(gens, i + 1, j);
}

} // namespace

GhostReport ghost_classify(const BettiTable& b, const std::vector<int>& gen_degrees, std::optional<int> socle_twist,
                           std::optional<int> n)
{
    const int nn = n.value_or(b.length());
    GhostReport rep;
    for (const auto& [ij, m] : b.beta) {
        auto [i, j] = ij;
        long long next = b.at(i + 1, j);
        if (next == 0)
            continue;
        GhostEntry e;
        e.i = i;
        e.j = j;
        e.mult_i = m;
        e.mult_next = next;
        e.non_koszul_excess = std::max(0LL, next - subset_sum_count(gen_degrees, i + 1, j));
        if (koszul_pair(b, gen_degrees, i, j)) {
            e.cls = GhostClass::KOSZUL;
        }
        else if (socle_twist && nn - i - 1 >= 0 && b.at(nn - i - 1, *socle_twist - j) > 0 &&
                 b.at(nn - i, *socle_twist - j) > 0 && koszul_pair(b, gen_degrees, nn - i - 1, *socle_twist - j)) {
            e.cls = GhostClass::DUALITY_FORCED;
            rep.duality_is_interpretation = true;
        }
        else {
            e.cls = GhostClass::NON_KOSZUL;
        }
        rep.entries.push_back(e);
    }
    return rep;
}

SplitPolicy parse_split_policy(const std::string& s)
{
    if (s == "none")
        return SplitPolicy::NONE;
    if (s == "generator")
        return SplitPolicy::GENERATOR;
    if (s == "min-consistent")
        return SplitPolicy::MIN_CONSISTENT;
    throw ParamError("unknown split policy '" + s + "'");
}

const char* split_policy_name(SplitPolicy p)
{
    switch (p) {
    case SplitPolicy::NONE:
        return "none";
    case SplitPolicy::GENERATOR:
        return "generator";
    case SplitPolicy::MIN_CONSISTENT:
        return "min-consistent";
    }
    return "?";
}

ResolutionShape mapping_cone_link(const ResolutionShape& res_ci, const ResolutionShape& res_I, int d,
                                  SplitPolicy split, const std::optional<HilbertSeries>& target)
{
    const int n = res_ci.length();
    if (res_I.length() > n)
        throw ParamError("resolution of I is longer than the Koszul complex");
    if (res_ci.at(n).rank() != 1 || res_ci.at(n).at(d) != 1)
        throw ParamError("last Koszul module is not R(-d)");
    const bool unit = std::all_of(res_I.modules.begin(), res_I.modules.end(),
                                  [](const FreeModule& F) { return F.empty(); });

    // pieces[i] = {part from F_{n-i+1}^∨, part from K_{n-i}^∨}
    std::vector<FreeModule> fpart(n + 1), kpart(n + 1);
    for (int i = 1; i <= n; ++i) {
        fpart[i] = dual_twist(res_I.at(n - i + 1), d);
        kpart[i] = dual_twist(res_ci.at(n - i), d);
    }
    // the comparison map R -> R on F_0 and K_0 is the identity
    if (!unit)
        kpart[n] = FreeModule();

    const int kmax = split == SplitPolicy::NONE ? 0 : split == SplitPolicy::GENERATOR ? 1 : n - 1;
    for (int k = 1; k <= kmax; ++k) {
        // F_k^∨ sits in G_{n-k+1}, K_k^∨ in G_{n-k}
        const FreeModule& Fk = res_I.at(k);
        const FreeModule& Kk = res_ci.at(k);
        for (const auto& [t, m] : Fk.twists) {
            long long c = std::min(m, Kk.at(t));
            if (c <= 0)
                continue;
            fpart[n - k + 1].add(d - t, -c);
            kpart[n - k].add(d - t, -c);
        }
    }

    ResolutionShape out;
    out.modules.emplace_back();
    out.modules[0].add(0, 1);
    for (int i = 1; i <= n; ++i)
        out.modules.push_back(direct_sum(fpart[i], kpart[i]));
    while (out.length() > 0 && out.modules.back().empty())
        out.modules.pop_back();
    if (split == SplitPolicy::MIN_CONSISTENT) {
        if (!target)
            throw SplitError("min-consistent splitting needs the target Hilbert series");
        if (!euler_matches(out, *target, n))
            throw SplitError("split cone is inconsistent with the target Hilbert series");
    }
    return out;
}

} // namespace rcalg
