#include "instances.hpp"
#include "properties.hpp"

#include "rcalg/errors.hpp"
#include "rcalg/recipe.hpp"
#include "rcalg/series.hpp"

#include <doctest.h>

#include <random>

using namespace rcalg;

namespace {

using Coeffs = std::vector<long long>;

int pick(std::mt19937_64& gen, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(gen);
}

HilbertSeries engine_hf(int n, const std::vector<int>& degrees, uint64_t seed)
{
    RingPtr R = make_ring(n);
    FieldRng rng(seed);
    std::vector<HomogPoly> g;
    for (int d : degrees)
        g.push_back(random_form(*R, d, rng));
    return quotient_basis(GradedIdeal(R, g))->hilbert();
}

} // namespace

TEST_CASE("truncation keeps nonnegative prefixes")
{
    CHECK(froberg_truncate(HilbertSeries(Coeffs{1, 3, 6, 7, 6, 3, 1, 0})).coeffs == Coeffs{1, 3, 6, 7, 6, 3, 1, 0});
    CHECK(froberg_truncate(HilbertSeries(Coeffs{1, 3, 5, 7, 6, 2, -3, -5})).coeffs == Coeffs{1, 3, 5, 7, 6, 2, 0, 0});
    CHECK(froberg_truncate(HilbertSeries(Coeffs{1, -1, 5})).coeffs == Coeffs{1, 0, 0});
}

TEST_CASE("truncation output is nonnegative and dies after the first negative")
{
    std::mt19937_64 gen(1);
    for (int k = 0; k < 250; ++k) {
        Coeffs a(pick(gen, 1, 12));
        for (auto& x : a)
            x = pick(gen, -3, 9);
        Coeffs b = froberg_truncate(HilbertSeries(a)).coeffs;
        REQUIRE(b.size() == a.size());
        bool dead = false;
        for (size_t j = 0; j < a.size(); ++j) {
            dead = dead || a[j] < 0;
            CHECK(b[j] == (dead ? 0 : a[j]));
        }
    }
}

TEST_CASE("rational series expansions")
{
    CHECK(rational_series({3, 3, 3}, 3, 8).coeffs == Coeffs{1, 3, 6, 7, 6, 3, 1, 0, 0});
    CHECK(rational_series({}, 3, 4).coeffs == Coeffs{1, 3, 6, 10, 15});
    CHECK(rational_series({4, 4, 4}, 3, 10).coeffs == Coeffs{1, 3, 6, 10, 12, 12, 10, 6, 3, 1, 0});
    CHECK(rational_series({2, 2, 2, 2}, 3, 4).coeffs == Coeffs{1, 3, 2, -2, -3});
}

TEST_CASE("Froberg predictions")
{
    CHECK(froberg_prediction({9, 9, 9, 9, 9}, 3, 15).to_string() == "1 3 6 10 15 21 28 36 45 50 51 48 41 30 15");
    CHECK(froberg_prediction({9, 9, 9, 9, 9}, 3, 15).at(15) == 0);
    CHECK(froberg_prediction({4, 4, 4, 2}, 3, 6).coeffs == Coeffs{1, 3, 5, 7, 6, 2, 0});
    CHECK(froberg_prediction({4, 4, 4, 2, 2}, 3, 5).coeffs == Coeffs{1, 3, 4, 4, 1, 0});
    CHECK(froberg_prediction({3, 3, 3}, 3, 8).to_string() == "1 3 6 7 6 3 1");
}

TEST_CASE("liaison upper bounds")
{
    LiaisonBound a = rc_upper_bound_liaison({3, 3, 3}, {5, 5}, 3, 8);
    CHECK(a.bound.to_string() == "1 3 6 7 5 2");
    CHECK(a.ci_part.to_string() == "1 3 6 7 6 3 1");
    CHECK(a.e_prime == 6);
    CHECK(a.residual_degrees == std::vector<int>{1, 1});
    CHECK(rc_upper_bound_liaison({4, 4, 4}, {8}, 3, 10).bound.to_string() == "1 3 6 10 12 10 6 3 1");
    CHECK(rc_upper_bound_liaison({3, 3, 3, 3}, {7, 7}, 4, 9).bound.to_string() == "1 4 10 16 19 16 7 2");
    CHECK(rc_upper_bound_liaison({4, 4, 4}, {7, 7}, 3, 9).bound.to_string() == "1 3 6 10 12 11 6 2");
    CHECK_THROWS_AS(rc_upper_bound_liaison({2, 2, 2, 2}, {3}, 3, 5), ParamError);
}

TEST_CASE("minimum bounds")
{
    CHECK(rc_min_bound({2}, 4, 9, 1, 10).to_string() == "1 4 9 16 25 25 16 9 4 1");
    CHECK(rc_min_bound({}, 3, 3, 1, 5).to_string() == "1 3 3 1");
    CHECK(rc_min_bound({3, 3, 4}, 4, 10, 1, 11).to_string() == "1 4 10 18 26 32 26 18 10 4 1");
    CHECK(rc_min_bound({4, 4, 4}, 3, 7, 2, 9).to_string() == "1 3 6 10 12 12 6 2");
    CHECK(rc_min_bound({3, 3, 3}, 3, 5, 2, 7).to_string() == "1 3 6 7 6 2");
    CHECK(rc_min_bound({3, 3, 3, 3}, 4, 7, 2, 9).to_string() == "1 4 10 16 19 16 8 2");
    CHECK(rc_min_bound_socle({3, 3, 3}, 3, {4, 5}, 6).to_string() == "1 3 6 7 4 1");
    CHECK_THROWS_AS(rc_min_bound({2}, 3, -1, 1, 4), ParamError);
}

TEST_CASE("compressed level Hilbert functions")
{
    CHECK(compressed_level_hf(3, 10, 3, 11).to_string() == "1 3 6 10 15 21 28 30 18 9 3");
    CHECK(compressed_level_hf(3, 0, 1, 2).to_string() == "1");
    CHECK(compressed_level_hf(2, 4, 1, 5).to_string() == "1 2 3 2 1");
}

TEST_CASE("linked Hilbert functions")
{
    HilbertSeries ci = rational_series({3, 3, 3}, 3, 6);
    CHECK(linkage_hf(ci, HilbertSeries(Coeffs{1, 1}), 6).to_string() == "1 3 6 7 6 2");
    CHECK(linkage_hf(ci, HilbertSeries(), 6) == ci);
    HilbertSeries big = rational_series({4, 4, 4, 11}, 4, 19);
    HilbertSeries h = froberg_prediction({4, 4, 4, 4, 11}, 4, 19);
    CHECK(linkage_hf(big, h, 19).to_string() == "1 4 10 20 32 44 54 60 60 54 44 32 20 10 4 1");
    CHECK_THROWS_AS(linkage_hf(ci, HilbertSeries(Coeffs{1, 3, 6, 8}), 6), NotLinkedError);
}

TEST_CASE("Euler numerators")
{
    CHECK(euler_numerator(rational_series({3, 3, 3}, 3, 9), 3, 9) == Coeffs{1, 0, 0, -3, 0, 0, 3, 0, 0, -1});
    CHECK(euler_numerator(HilbertSeries(Coeffs{1}), 2, 2) == Coeffs{1, -2, 1});
}

TEST_CASE("series helpers")
{
    HilbertSeries s(Coeffs{1, 2, 0, 0});
    CHECK(s.top() == 1);
    CHECK(s.total() == 3);
    CHECK(s.trimmed().coeffs == Coeffs{1, 2});
    CHECK(s == HilbertSeries(Coeffs{1, 2}));
    CHECK(same_prefix(s, HilbertSeries(Coeffs{1, 2, 0, 0, 0}), 6));
    CHECK_FALSE(same_prefix(s, HilbertSeries(Coeffs{1, 2, 0, 1}), 6));
    CHECK(HilbertSeries().top() == -1);
}

TEST_CASE("minimum bound with one socle generator is symmetric")
{
    std::mt19937_64 gen(2);
    for (int k = 0; k < 250; ++k) {
        int n = pick(gen, 1, 5);
        std::vector<int> d(pick(gen, 0, n));
        for (int& x : d)
            x = pick(gen, 1, 6);
        int s = pick(gen, 0, 14);
        HilbertSeries b = rc_min_bound(d, n, s, 1, s + 2);
        for (int t = 0; t <= s; ++t)
            CHECK(b.at(t) == b.at(s - t));
        CHECK(b.at(s + 1) == 0);
    }
}

TEST_CASE("linked Hilbert function is an involution")
{
    auto run = testing::prop_linkage_involution(300, 3);
    INFO(run.summary());
    CHECK(run.instances >= 200);
    CHECK(run.ok());
}

TEST_CASE("Froberg prediction bounds computed Hilbert functions from below")
{
    std::mt19937_64 gen(4);
    for (int k = 0; k < 200; ++k) {
        int n = pick(gen, 1, 4);
        std::vector<int> d(pick(gen, n, n + 2));
        for (int& x : d)
            x = pick(gen, 1, n == 4 ? 3 : 4);
        HilbertSeries h = engine_hf(n, d, gen());
        HilbertSeries f = froberg_prediction(d, n, h.cap() + 1);
        for (int j = 0; j <= f.cap(); ++j)
            CHECK(f.at(j) <= h.at(j));
    }
}

TEST_CASE("Froberg prediction is exact in at most three variables")
{
    std::mt19937_64 gen(5);
    for (int k = 0; k < 200; ++k) {
        int n = pick(gen, 1, 3);
        std::vector<int> d(pick(gen, n, n + 3));
        for (int& x : d)
            x = pick(gen, 1, 6);
        HilbertSeries h = engine_hf(n, d, gen());
        INFO("n=" << n << " forms " << d.size() << " hf " << h.to_string());
        CHECK(froberg_prediction(d, n, h.cap() + 1) == h);
    }
}
