#include "instances.hpp"

#include "rcalg/errors.hpp"
#include "rcalg/recipe.hpp"

#include <algorithm>
#include <numeric>

namespace rcalg::testing {

namespace {

int pick(std::mt19937_64& gen, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(gen);
}

// Exponents for pure powers x_i^{a_i}, 1 <= a_i <= max_deg, with sum(a_i - 1) between
// budget/2 and budget when possible.
std::vector<int> power_degrees(std::mt19937_64& gen, int n, int budget, int max_deg)
{
    std::vector<int> a(n, 1);
    for (int left = pick(gen, budget / 2, budget); left > 0; --left) {
        std::vector<int> open;
        for (int i = 0; i < n; ++i)
            if (a[i] < max_deg)
                open.push_back(i);
        if (open.empty())
            break;
        ++a[open[pick(gen, 0, static_cast<int>(open.size()) - 1)]];
    }
    return a;
}

// More variables are more interesting; weight n proportionally.
int pick_n(std::mt19937_64& gen, int max_n)
{
    std::vector<int> w;
    for (int k = 1; k <= max_n; ++k)
        w.push_back(k);
    return 1 + std::discrete_distribution<int>(w.begin(), w.end())(gen);
}

Exponents random_monomial(std::mt19937_64& gen, int n, int d)
{
    Exponents e(n, 0);
    for (int k = 0; k < d; ++k)
        ++e[pick(gen, 0, n - 1)];
    return e;
}

HomogPoly sparse_form(const RingCtx& R, std::mt19937_64& gen, int d, int terms)
{
    HomogPoly f = zero_poly(R, d);
    for (int t = 0; t < terms; ++t) {
        uint32_t c = static_cast<uint32_t>(pick(gen, 1, static_cast<int>(R.field().p) - 1));
        f = add(R, f, monomial_poly(R, random_monomial(gen, R.n(), d), c));
    }
    return f;
}

std::string describe(const GradedIdeal& I)
{
    std::string s = "n=" + std::to_string(I.ring->n()) + " p=" + std::to_string(I.ring->field().p) + " [";
    for (size_t k = 0; k < I.gens.size(); ++k)
        s += (k ? ", " : "") + to_text(*I.ring, I.gens[k]);
    return s + "]";
}

} // namespace

Instance random_gorenstein(std::mt19937_64& gen, int n, int s, bool sparse)
{
    RingPtr ring = make_ring(n);
    HomogPoly F;
    if (sparse) {
        F = sparse_form(*ring, gen, s, pick(gen, 1, 4));
        if (F.is_zero())
            F = monomial_poly(*ring, random_monomial(gen, n, s));
    }
    else {
        FieldRng rng(gen());
        F = random_form(*ring, s, rng);
    }
    AnnihilatorResult a = annihilator_ideal(ring, {F});
    return {std::move(a.ideal), "Ann(" + to_text(*ring, F, 'y') + ") n=" + std::to_string(n)};
}

namespace {

Instance candidate(std::mt19937_64& gen, int max_n, int max_top)
{
    static const uint32_t primes[] = {32003, 32003, 32003, 101, 7, 2};
    int n = pick_n(gen, max_n);
    int kind = pick(gen, 0, 3);
    if (kind == 3)
        return random_gorenstein(gen, n, pick(gen, 0, max_top), pick(gen, 0, 1) == 1);

    RingPtr ring = make_ring(n, primes[pick(gen, 0, 5)]);
    const RingCtx& R = *ring;
    FieldRng rng(gen());
    std::vector<HomogPoly> g;
    if (kind == 0) {
        for (int d : power_degrees(gen, n, max_top, 3))
            g.push_back(random_form(R, d, rng));
        for (int k = pick(gen, 0, 2); k > 0; --k)
            g.push_back(random_form(R, pick(gen, 1, 4), rng));
    }
    else {
        auto a = power_degrees(gen, n, max_top, 4);
        for (int i = 0; i < n; ++i) {
            Exponents e(n, 0);
            e[i] = a[i];
            g.push_back(monomial_poly(R, e));
        }
        if (kind == 1) {
            for (int k = pick(gen, 0, 4); k > 0; --k)
                g.push_back(monomial_poly(R, random_monomial(gen, n, pick(gen, 1, 5))));
        }
        else {
            for (int k = pick(gen, 1, 3); k > 0; --k) {
                HomogPoly f = sparse_form(R, gen, pick(gen, 1, 5), pick(gen, 2, 3));
                if (!f.is_zero())
                    g.push_back(std::move(f));
            }
        }
    }
    GradedIdeal I(ring, std::move(g));
    std::string label = describe(I);
    return {std::move(I), std::move(label)};
}

} // namespace

Instance random_artinian(std::mt19937_64& gen, int max_n, int max_top)
{
    for (;;) {
        Instance c = candidate(gen, max_n, max_top);
        if (quotient_basis(c.ideal, max_top + 1)->artinian())
            return c;
    }
}

GradedIdeal general_ci(RingPtr ring, const std::vector<int>& degrees, uint64_t seed)
{
    FieldRng rng(seed);
    std::vector<HomogPoly> g;
    for (int d : degrees)
        g.push_back(random_form(*ring, d, rng));
    GradedIdeal c(ring, std::move(g));
    int top = std::accumulate(degrees.begin(), degrees.end(), 0) - ring->n();
    if (!(hilbert_function(c, top + 1) == rational_series(degrees, ring->n(), top + 1)))
        throw NotLinkedError("seed " + std::to_string(seed) + " did not give a complete intersection");
    return c;
}

} // namespace rcalg::testing
