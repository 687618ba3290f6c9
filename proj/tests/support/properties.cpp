#include "properties.hpp"

#include "instances.hpp"
#include "oracle.hpp"

#include "rcalg/errors.hpp"
#include "rcalg/matrix.hpp"

#include <algorithm>
#include <random>

namespace rcalg::testing {

std::string PropertyRun::summary() const
{
    std::string s = name + ": " + std::to_string(instances - failures) + "/" + std::to_string(instances) +
                    " instances hold";
    if (!first_failure.empty())
        s += "; first counterexample: " + first_failure;
    return s;
}

namespace {

int pick(std::mt19937_64& gen, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(gen);
}

void record(PropertyRun& run, bool ok, const std::string& what)
{
    ++run.instances;
    if (ok)
        return;
    if (run.failures++ == 0)
        run.first_failure = what;
}

bool same_poly(std::vector<long long> a, std::vector<long long> b)
{
    size_t len = std::max(a.size(), b.size());
    a.resize(len, 0);
    b.resize(len, 0);
    return a == b;
}

PrimeMatrix random_matrix(std::mt19937_64& gen)
{
    static const uint32_t primes[] = {2, 3, 5, 7, 101, 32003};
    PrimeField f(primes[pick(gen, 0, 5)]);
    size_t r = pick(gen, 0, 12), c = pick(gen, 0, 12);
    auto fill = [&](size_t rows, size_t cols) {
        PrimeMatrix m(rows, cols, f);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m.set(i, j, pick(gen, 0, static_cast<int>(f.p) - 1));
        return m;
    };
    if (pick(gen, 0, 1) == 0 || r == 0 || c == 0)
        return fill(r, c);
    size_t k = pick(gen, 1, static_cast<int>(std::min(r, c)));
    return multiply(fill(r, k), fill(k, c));
}

std::string dims(const PrimeMatrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " over GF(" + std::to_string(m.field().p) +
           ")";
}

} // namespace

PropertyRun prop_rank_transpose(int count, uint64_t seed)
{
    PropertyRun run;
    run.name = "rank(m) = rank(m^T)";
    std::mt19937_64 gen(seed);
    for (int k = 0; k < count; ++k) {
        PrimeMatrix m = random_matrix(gen);
        size_t a = rank(m), b = rank(m.transpose());
        record(run, a == b, dims(m) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
    return run;
}

PropertyRun prop_kernel_dimension(int count, uint64_t seed)
{
    PropertyRun run;
    run.name = "kernel rows + rank = cols";
    std::mt19937_64 gen(seed);
    for (int k = 0; k < count; ++k) {
        PrimeMatrix m = random_matrix(gen);
        PrimeMatrix ker = kernel_basis(m);
        bool ok = ker.rows() + rank(m) == m.cols();
        for (size_t r = 0; ok && r < ker.rows(); ++r) {
            std::vector<uint32_t> v(ker.row(r), ker.row(r) + ker.cols());
            auto mv = multiply(m, v);
            ok = std::all_of(mv.begin(), mv.end(), [](uint32_t x) { return x == 0; });
        }
        record(run, ok, dims(m));
    }
    return run;
}

PropertyRun prop_koszul_generating(int count, uint64_t seed)
{
    PropertyRun run;
    run.name = "Koszul generating function";
    std::mt19937_64 gen(seed);
    for (int k = 0; k < count; ++k) {
        std::vector<int> d(pick(gen, 0, 6));
        for (int& x : d)
            x = pick(gen, 1, 6);
        std::vector<long long> lhs{0}, rhs{1};
        long long total = 0;
        bool ranks = true;
        for (int i = 0; i <= static_cast<int>(d.size()); ++i) {
            FreeModule K = koszul_module(d, i);
            ranks = ranks && K.rank() == binomial(static_cast<long long>(d.size()), i);
            total += K.rank();
            for (const auto& [t, m] : K.twists) {
                if (lhs.size() <= static_cast<size_t>(t))
                    lhs.resize(t + 1, 0);
                lhs[t] += (i % 2 ? -m : m);
            }
        }
        for (int x : d) {
            std::vector<long long> next(rhs.size() + x, 0);
            for (size_t a = 0; a < rhs.size(); ++a) {
                next[a] += rhs[a];
                next[a + x] -= rhs[a];
            }
            rhs = std::move(next);
        }
        std::string label = "degrees";
        for (int x : d)
            label += " " + std::to_string(x);
        record(run, ranks && total == (1LL << d.size()) && same_poly(lhs, rhs), label);
    }
    return run;
}

PropertyRun prop_linkage_involution(int count, uint64_t seed)
{
    PropertyRun run;
    run.name = "linkage_hf involution";
    std::mt19937_64 gen(seed);
    for (int k = 0; k < count; ++k) {
        int n = pick(gen, 1, 4);
        std::vector<int> d(n);
        int e = 0;
        for (int& x : d) {
            x = pick(gen, 1, 5);
            e += x - 1;
        }
        HilbertSeries ci = rational_series(d, n, e);
        std::vector<long long> hi(e + 1);
        for (int j = 0; j <= e; ++j)
            hi[j] = pick(gen, 0, static_cast<int>(ci.at(j)));
        HilbertSeries h(hi);
        bool ok = false;
        try {
            ok = same_prefix(linkage_hf(ci, linkage_hf(ci, h, e), e), h, e + 1);
        }
        catch (const NotLinkedError&) {
        }
        record(run, ok, "ci " + ci.to_string() + ", h " + h.to_string());
    }
    return run;
}

PropertyRun prop_euler_identity(int count, uint64_t seed)
{
    PropertyRun run;
    run.name = "Euler identity of computed tables";
    std::mt19937_64 gen(seed);
    for (int k = 0; k < count; ++k) {
        Instance inst = random_artinian(gen, 4, 6);
        auto q = quotient_basis(inst.ideal);
        BettiTable b = betti_numbers(*q);
        HilbertSeries h = q->hilbert();
        int n = inst.ideal.ring->n();
        record(run, b.window == -1 && same_poly(b.euler(), euler_numerator(h, n, h.top() + n)), inst.label);
    }
    return run;
}

PropertyRun prop_gorenstein_duality(int count, uint64_t seed)
{
    PropertyRun run;
    run.name = "Gorenstein self-duality of computed tables";
    std::mt19937_64 gen(seed);
    for (int k = 0; k < count; ++k) {
        int n = pick(gen, 2, 4);
        Instance inst = random_gorenstein(gen, n, pick(gen, 1, 6), pick(gen, 0, 1) == 1);
        auto q = quotient_basis(inst.ideal);
        SocleProfile soc = socle(*q);
        BettiTable b = betti_numbers(*q);
        int e = soc.top();
        bool ok = soc.is_gorenstein();
        for (const auto& [ij, v] : b.beta)
            ok = ok && b.at(n - ij.first, e + n - ij.second) == v;
        record(run, ok, inst.label);
    }
    return run;
}

PropertyRun prop_oracle_equivalence(int count, uint64_t seed)
{
    PropertyRun run;
    run.name = "Koszul homology = iterated syzygies";
    std::mt19937_64 gen(seed);
    for (int k = 0; k < count; ++k) {
        Instance inst = random_artinian(gen, 3, 6);
        BettiTable koszul = betti_numbers(inst.ideal);
        BettiTable syz = oracle::syzygy_betti(*inst.ideal.ring, inst.ideal.gens);
        record(run, koszul == syz, inst.label);
    }
    return run;
}

} // namespace rcalg::testing
