#include "rcalg/engine.hpp"
#include "rcalg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace rcalg {

namespace {

constexpr int kAutoCapLimit = 256;

/// Contractions of the degree-d inverse system that are compatible across variables.
struct Lift
{
    PrimeMatrix K;    ///< rows: (c_1 | ... | c_n), c_i in k^{h(d)}
    PrimeMatrix Psi;  ///< row r: the functional on R_{d+1} determined by K row r
};

PrimeMatrix lift_kernel(const QuotientBasis& q, int d)
{
    const RingCtx& R = *q.ring;
    const PrimeField& F = R.field();
    const int n = R.n();
    const size_t h = q.h(d);
    if (h == 0)
        return PrimeMatrix(0, 0, F);
    if (d == 0 || q.h(d - 1) == 0)
        return PrimeMatrix::identity(n * h, F);
    const size_t h1 = q.h(d - 1);
    PrimeMatrix C(static_cast<size_t>(n) * (n - 1) / 2 * h1, n * h, F);
    size_t row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const PrimeMatrix& Ci = q.contr[d][i];
            const PrimeMatrix& Cj = q.contr[d][j];
            for (size_t r = 0; r < h1; ++r, ++row)
                for (size_t k = 0; k < h; ++k) {
                    C.set(row, i * h + k, Cj.at(r, k));
                    C.set(row, j * h + k, F.neg(Ci.at(r, k)));
                }
        }
    return kernel_basis(C);
}

Lift lift(const QuotientBasis& q, int d)
{
    const RingCtx& R = *q.ring;
    const PrimeField& F = R.field();
    const int n = R.n();
    const size_t h = q.h(d);
    const DegreeBasis& B = R.basis(d + 1);
    Lift L{lift_kernel(q, d), PrimeMatrix()};
    const size_t m = L.K.rows();
    L.Psi = PrimeMatrix(m, B.monomials.size(), F);
    if (m == 0)
        return L;
    // w_i = sum_k c_{i,k} dual[d][k]; psi_a = (w_{i(a)})_{a - e_{i(a)}}
    std::vector<PrimeMatrix> w(n);
    std::vector<size_t> cols(h);
    for (int i = 0; i < n; ++i) {
        for (size_t k = 0; k < h; ++k)
            cols[k] = i * h + k;
        w[i] = multiply(L.K.select_cols(cols), q.dual[d]);
    }
    for (size_t a = 0; a < B.monomials.size(); ++a) {
        const PrimeMatrix& wi = w[B.first_var[a]];
        const size_t src = B.first_quotient[a];
        for (size_t r = 0; r < m; ++r)
            L.Psi.set(r, a, wi.at(r, src));
    }
    return L;
}

/// index of c + e_i in degree d+1, for every monomial c of degree d
std::vector<std::vector<size_t>> up_indices(const RingCtx& R, int d)
{
    const auto& mons = R.basis(d).monomials;
    std::vector<std::vector<size_t>> up(R.n(), std::vector<size_t>(mons.size()));
    for (size_t c = 0; c < mons.size(); ++c) {
        Exponents e = mons[c];
        for (int i = 0; i < R.n(); ++i) {
            ++e[i];
            up[i][c] = R.index(e);
            --e[i];
        }
    }
    return up;
}

void set_degree(QuotientBasis& q, int d, RrefResult r)
{
    if (static_cast<int>(q.dual.size()) <= d) {
        q.dual.resize(d + 1);
        q.pivots.resize(d + 1);
        q.contr.resize(d + 1);
    }
    q.dual[d] = std::move(r.matrix);
    q.pivots[d] = std::move(r.pivots);
}

std::vector<PrimeMatrix> empty_contr(const QuotientBasis& q, int d)
{
    const PrimeField& F = q.ring->field();
    return std::vector<PrimeMatrix>(q.ring->n(), PrimeMatrix(q.h(d - 1), q.h(d), F));
}

/// Computes contr[d] by contracting the rows of dual[d]; throws if not closed.
void contract_degree(QuotientBasis& q, int d)
{
    const RingCtx& R = *q.ring;
    const PrimeField& F = R.field();
    q.contr[d] = empty_contr(q, d);
    if (d == 0 || q.h(d) == 0)
        return;
    RrefResult prev{q.dual[d - 1], q.h(d - 1), q.pivots[d - 1]};
    const auto up = up_indices(R, d - 1);
    const size_t Nd1 = R.dim(d - 1);
    std::vector<uint32_t> v(Nd1);
    for (int i = 0; i < R.n(); ++i)
        for (size_t l = 0; l < q.h(d); ++l) {
            const uint32_t* row = q.dual[d].row(l);
            for (size_t c = 0; c < Nd1; ++c)
                v[c] = row[up[i][c]];
            auto coords = rref_coordinates(prev, v.data());
            if (!coords)
                throw ParamError("dual spaces are not closed under contraction at degree " + std::to_string(d));
            for (size_t k = 0; k < coords->size(); ++k)
                q.contr[d][i].set(k, l, (*coords)[k]);
        }
    (void)F;
}

std::shared_ptr<QuotientBasis> build_from_generators(const GradedIdeal& I, int cap)
{
    const RingCtx& R = *I.ring;
    const PrimeField& F = R.field();
    auto q = std::make_shared<QuotientBasis>();
    q->ring = I.ring;
    std::map<int, std::vector<const HomogPoly*>> by_degree;
    int maxgen = 0;
    for (const auto& g : I.gens) {
        if (g.is_zero())
            continue;
        by_degree[g.degree].push_back(&g);
        maxgen = std::max(maxgen, g.degree);
    }
    const bool unit = by_degree.count(0) > 0;
    RrefResult r0;
    r0.matrix = PrimeMatrix(unit ? 0 : 1, 1, F);
    if (!unit) {
        r0.matrix.set(0, 0, 1);
        r0.rank = 1;
        r0.pivots = {0};
    }
    set_degree(*q, 0, r0);
    q->contr[0] = empty_contr(*q, 0);
    q->cap = 0;
    const int limit = cap < 0 ? kAutoCapLimit : cap;
    for (int d = 0; d < limit; ++d) {
        if (cap < 0 && q->h(d) == 0 && d >= maxgen)
            break;
        Lift L = lift(*q, d);
        const size_t m = L.K.rows();
        const size_t N1 = R.dim(d + 1);
        const size_t h = q->h(d);
        PrimeMatrix rows(0, N1 + L.K.cols(), F);
        if (m > 0) {
            PrimeMatrix Lambda;
            auto it = by_degree.find(d + 1);
            if (it == by_degree.end()) {
                Lambda = PrimeMatrix::identity(m, F);
            }
            else {
                PrimeMatrix G(it->second.size(), m, F);
                for (size_t g = 0; g < it->second.size(); ++g) {
                    std::vector<uint32_t> col = multiply(L.Psi, it->second[g]->coeffs);
                    for (size_t k = 0; k < m; ++k)
                        G.set(g, k, col[k]);
                }
                Lambda = kernel_basis(G);
            }
            PrimeMatrix aug(m, N1 + L.K.cols(), F);
            for (size_t r = 0; r < m; ++r) {
                std::copy(L.Psi.row(r), L.Psi.row(r) + N1, aug.row(r));
                std::copy(L.K.row(r), L.K.row(r) + L.K.cols(), aug.row(r) + N1);
            }
            rows = multiply(Lambda, aug);
        }
        RrefResult rr = rref(rows);
        PrimeMatrix dual(rr.rank, N1, F);
        for (size_t l = 0; l < rr.rank; ++l)
            std::copy(rr.matrix.row(l), rr.matrix.row(l) + N1, dual.row(l));
        RrefResult part{dual, rr.rank, rr.pivots};
        set_degree(*q, d + 1, part);
        q->cap = d + 1;
        q->contr[d + 1] = empty_contr(*q, d + 1);
        for (int i = 0; i < R.n(); ++i)
            for (size_t k = 0; k < h; ++k)
                for (size_t l = 0; l < rr.rank; ++l)
                    q->contr[d + 1][i].set(k, l, rr.matrix.at(l, N1 + i * h + k));
    }
    if (cap < 0 && q->h(q->cap) != 0)
        throw CapError("Hilbert function does not vanish up to degree " + std::to_string(kAutoCapLimit));
    return q;
}

std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

} // namespace

GradedIdeal::GradedIdeal(RingPtr r, std::vector<HomogPoly> g, Provenance p)
    : ring(std::move(r)), gens(std::move(g)), provenance(std::move(p))
{
    for (const auto& f : gens)
        if (f.coeffs.size() != ring->dim(f.degree))
            throw ParamError("generator coefficient vector has the wrong length");
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const HomogPoly& f) { return f.is_zero(); }),
               gens.end());
}

std::vector<int> GradedIdeal::degrees() const
{
    std::vector<int> d;
    for (const auto& g : gens)
        d.push_back(g.degree);
    std::sort(d.begin(), d.end());
    return d;
}

bool GradedIdeal::is_unit() const
{
    return std::any_of(gens.begin(), gens.end(), [](const HomogPoly& g) { return g.degree == 0; });
}

std::string GradedIdeal::witness_json() const
{
    nlohmann::json j;
    j["n"] = ring->n();
    j["p"] = ring->field().p;
    j["seed"] = provenance.seed;
    j["recipe"] = provenance.recipe;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : gens)
        j["generators"].push_back(to_text(*ring, g));
    return j.dump(2);
}

HilbertSeries QuotientBasis::hilbert() const
{
    std::vector<long long> c(cap + 1);
    for (int d = 0; d <= cap; ++d)
        c[d] = static_cast<long long>(h(d));
    return HilbertSeries(std::move(c));
}

bool QuotientBasis::artinian() const
{
    for (int d = 0; d <= cap; ++d)
        if (h(d) == 0)
            return true;
    return false;
}

PrimeMatrix QuotientBasis::mult(int d, int i) const
{
    if (d + 1 > cap)
        throw CapError("multiplication from degree " + std::to_string(d) + " needs degree " + std::to_string(d + 1));
    return contr[d + 1][i].transpose();
}

std::shared_ptr<const QuotientBasis> quotient_basis(const GradedIdeal& I, int cap)
{
    if (I.known_quotient) {
        const auto& k = I.known_quotient;
        if ((cap >= 0 && k->cap >= cap) || k->artinian())
            return k;
    }
    return build_from_generators(I, cap);
}

QuotientBasis quotient_from_dual(RingPtr ring, const std::vector<PrimeMatrix>& W)
{
    QuotientBasis q;
    q.ring = std::move(ring);
    q.cap = static_cast<int>(W.size()) - 1;
    for (int d = 0; d <= q.cap; ++d) {
        RrefResult r = rref(W[d]);
        if (r.matrix.cols() != q.ring->dim(d)) {
            r.matrix = PrimeMatrix(0, q.ring->dim(d), q.ring->field());
            r.pivots.clear();
            r.rank = 0;
        }
        set_degree(q, d, std::move(r));
        contract_degree(q, d);
    }
    return q;
}

std::vector<HomogPoly> extract_generators(const QuotientBasis& q, int max_degree)
{
    const RingCtx& R = *q.ring;
    const PrimeField& F = R.field();
    std::vector<HomogPoly> gens;
    if (q.h(0) == 0) {
        gens.push_back(HomogPoly{0, {1}});
        return gens;
    }
    const int top = std::min(max_degree, q.cap + 1);
    for (int d = 1; d <= top; ++d) {
        Lift L = lift(q, d - 1);
        if (L.Psi.rows() == 0)
            break;
        RrefResult V = rref(L.Psi);
        PrimeMatrix Wc(q.h(d), V.rank, F);
        if (d <= q.cap)
            for (size_t l = 0; l < q.h(d); ++l)
                for (size_t r = 0; r < V.rank; ++r)
                    Wc.set(l, r, q.dual[d].at(l, V.pivots[r]));
        PrimeMatrix ker = Wc.rows() ? kernel_basis(Wc) : PrimeMatrix::identity(V.rank, F);
        for (size_t g = 0; g < ker.rows(); ++g) {
            HomogPoly f = zero_poly(R, d);
            for (size_t r = 0; r < V.rank; ++r)
                f.coeffs[V.pivots[r]] = ker.at(g, r);
            gens.push_back(std::move(f));
        }
    }
    return gens;
}

HilbertSeries hilbert_function(const GradedIdeal& I, int cap)
{
    if (cap < 0)
        throw ParamError("cap must be nonnegative");
    auto q = quotient_basis(I, cap);
    std::vector<long long> c(cap + 1, 0);
    for (int d = 0; d <= std::min(cap, q->cap); ++d)
        c[d] = static_cast<long long>(q->h(d));
    return HilbertSeries(std::move(c));
}

HilbertSeries hilbert_function_direct(const GradedIdeal& I, int cap)
{
    const RingCtx& R = *I.ring;
    std::vector<long long> c(cap + 1, 0);
    for (int d = 0; d <= cap; ++d) {
        PrimeMatrix span(0, R.dim(d), R.field());
        for (const auto& g : I.gens)
            if (g.degree <= d)
                span.append_rows(mult_map(R, g, d - g.degree).transpose());
        c[d] = static_cast<long long>(R.dim(d) - rank(span));
    }
    return HilbertSeries(std::move(c));
}

std::vector<std::pair<int, long long>> minimal_generators(const GradedIdeal& I, int cap)
{
    auto q = quotient_basis(I, cap);
    std::vector<std::pair<int, long long>> out;
    if (q->h(0) == 0)
        return {{0, 1}};
    const int top = cap < 0 ? q->cap : std::min(cap, q->cap);
    for (int d = 1; d <= top; ++d) {
        long long k = static_cast<long long>(lift_kernel(*q, d - 1).rows()) - static_cast<long long>(q->h(d));
        if (k > 0)
            out.emplace_back(d, k);
    }
    return out;
}

BettiTable betti_numbers(const QuotientBasis& q)
{
    const RingCtx& R = *q.ring;
    const PrimeField& F = R.field();
    const int n = R.n();
    const int cap = q.cap;
    // subsets of {0..n-1} of each size, as bitmasks, with their positions
    std::vector<std::vector<unsigned>> subsets(n + 1);
    std::vector<int> pos(1u << n);
    for (unsigned s = 0; s < (1u << n); ++s) {
        int k = __builtin_popcount(s);
        pos[s] = static_cast<int>(subsets[k].size());
        subsets[k].push_back(s);
    }
    std::vector<std::vector<PrimeMatrix>> M(std::max(cap, 0));
    for (int m = 0; m + 1 <= cap; ++m)
        for (int l = 0; l < n; ++l)
            M[m].push_back(q.mult(m, l));

    // rk[i][m]: rank of the differential on A_m (x) wedge^i
    std::vector<std::vector<size_t>> rk(n + 2, std::vector<size_t>(cap + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int m = 0; m + 1 <= cap; ++m) {
            const size_t hm = q.h(m), hm1 = q.h(m + 1);
            if (hm == 0 || hm1 == 0)
                continue;
            PrimeMatrix D(subsets[i - 1].size() * hm1, subsets[i].size() * hm, F);
            for (size_t sc = 0; sc < subsets[i].size(); ++sc) {
                unsigned S = subsets[i][sc];
                int k = 0;
                for (int l = 0; l < n; ++l) {
                    if (!(S & (1u << l)))
                        continue;
                    ++k;
                    const size_t sr = pos[S & ~(1u << l)];
                    const PrimeMatrix& X = M[m][l];
                    const bool negate = k % 2 == 0;
                    for (size_t a = 0; a < hm1; ++a)
                        for (size_t b = 0; b < hm; ++b) {
                            uint32_t v = X.at(a, b);
                            D.set(sr * hm1 + a, sc * hm + b, negate ? F.neg(v) : v);
                        }
                }
            }
            rk[i][m] = rank(D);
        }
    BettiTable b;
    for (int i = 0; i <= n; ++i)
        for (int m = 0; m + 1 <= std::max(cap, 1); ++m) {
            long long v = static_cast<long long>(q.h(m)) * binomial(n, i) - static_cast<long long>(rk[i][m]) -
                          (m >= 1 ? static_cast<long long>(rk[i + 1][m - 1]) : 0);
            if (m + 1 > cap && i > 0)
                continue;
            b.set(i, i + m, v);
        }
    if (!q.artinian())
        b.window = cap - 1;
    return b;
}

BettiTable betti_numbers(const GradedIdeal& I, int cap)
{
    auto q = quotient_basis(I, cap);
    if (cap < 0 && q->h(q->cap) == 0 && q->cap == 0) {
        BettiTable b;  // unit ideal: R/I = 0
        return b;
    }
    if (cap < 0 && q->h(q->cap) == 0)
        return betti_numbers(*q);
    return betti_numbers(*q);
}

std::vector<int> SocleProfile::list() const
{
    std::vector<int> out;
    for (const auto& [d, m] : degrees)
        out.insert(out.end(), m, d);
    return out;
}

std::string SocleProfile::to_string() const
{
    std::string s;
    for (const auto& [d, m] : degrees) {
        if (!s.empty())
            s += ", ";
        s += std::to_string(d) + (m > 1 ? "^" + std::to_string(m) : "");
    }
    return s.empty() ? "(none)" : s;
}

SocleProfile socle(const QuotientBasis& q)
{
    if (q.h(q.cap) != 0)
        throw NotArtinianError("h(" + std::to_string(q.cap) + ") = " + std::to_string(q.h(q.cap)) + " > 0");
    const int n = q.ring->n();
    SocleProfile s;
    for (int d = 0; d < q.cap; ++d) {
        const size_t hd = q.h(d), hd1 = q.h(d + 1);
        if (hd == 0)
            continue;
        long long dim;
        if (hd1 == 0) {
            dim = static_cast<long long>(hd);
        }
        else {
            PrimeMatrix S(0, hd, q.ring->field());
            for (int i = 0; i < n; ++i)
                S.append_rows(q.mult(d, i));
            dim = static_cast<long long>(hd - rank(S));
        }
        if (dim > 0)
            s.degrees.emplace_back(d, dim);
    }
    return s;
}

SocleProfile socle(const GradedIdeal& I, int cap) { return socle(*quotient_basis(I, cap)); }

bool contains(const GradedIdeal& I, const GradedIdeal& c)
{
    if (I.is_unit())
        return true;
    int top = 0;
    for (const auto& g : c.gens)
        top = std::max(top, g.degree);
    auto q = quotient_basis(I, top);
    for (const auto& g : c.gens) {
        if (g.degree > q->cap)
            continue;  // h vanished below this degree
        std::vector<uint32_t> v = multiply(q->dual[g.degree], g.coeffs);
        if (std::any_of(v.begin(), v.end(), [](uint32_t x) { return x != 0; }))
            return false;
    }
    return true;
}

GradedIdeal ideal_quotient(const GradedIdeal& c, const GradedIdeal& I, int cap)
{
    const RingCtx& R = *c.ring;
    const PrimeField& F = R.field();
    if (static_cast<int>(c.gens.size()) < R.n())
        throw NotArtinianError("a linking ideal needs at least n generators");
    auto qc = quotient_basis(c, -1);
    if (!contains(I, c))
        throw NotContainedError("the linking ideal is not contained in I");
    const int e = qc->hilbert().top();
    if (cap < 0)
        cap = e + 1;
    std::vector<PrimeMatrix> W;
    for (int d = 0; d <= std::min(cap, std::max(e, 0)); ++d) {
        PrimeMatrix rows(0, R.dim(d), F);
        for (const auto& g : I.gens) {
            const int top = d + g.degree;
            if (top > qc->cap || qc->h(top) == 0)
                continue;
            rows.append_rows(multiply(qc->dual[top], mult_map(R, g, d)));
        }
        W.push_back(rref(rows).matrix);
        if (W.back().cols() != R.dim(d))
            W.back() = PrimeMatrix(0, R.dim(d), F);
    }
    while (static_cast<int>(W.size()) <= cap && (W.empty() || W.back().rows() > 0 || static_cast<int>(W.size()) <= e + 1))
        W.push_back(PrimeMatrix(0, R.dim(static_cast<int>(W.size())), F));
    auto q = std::make_shared<QuotientBasis>(quotient_from_dual(c.ring, W));
    std::vector<HomogPoly> gens = extract_generators(*q, cap);
    if (q->h(std::min(cap, q->cap)) > 0 &&
        std::any_of(gens.begin(), gens.end(), [cap](const HomogPoly& g) { return g.degree == cap; }))
        throw CapError("residual may have generators beyond degree " + std::to_string(cap));
    Provenance p = I.provenance;
    p.recipe.push_back("quotient by ideal with degrees " + join_ints(c.degrees()));
    GradedIdeal J(c.ring, std::move(gens), p);
    J.known_quotient = q;
    return J;
}

AnnihilatorResult annihilator_ideal(RingPtr ring, const std::vector<HomogPoly>& forms)
{
    const RingCtx& R = *ring;
    const PrimeField& F = R.field();
    AnnihilatorResult out;
    int s = -1;
    for (const auto& f : forms)
        if (!f.is_zero())
            s = std::max(s, f.degree);
    std::vector<PrimeMatrix> W;
    for (int d = 0; d <= s + 1; ++d) {
        PrimeMatrix rows(0, R.dim(d), F);
        for (const auto& f : forms) {
            if (f.is_zero() || f.degree < d)
                continue;
            ContractionMap cm = contraction_map(R, f, d);
            if (cm.warning && std::find(out.warnings.begin(), out.warnings.end(), *cm.warning) == out.warnings.end())
                out.warnings.push_back(*cm.warning);
            rows.append_rows(cm.matrix);
        }
        W.push_back(rref(rows).matrix);
        if (W.back().cols() != R.dim(d))
            W.back() = PrimeMatrix(0, R.dim(d), F);
    }
    auto q = std::make_shared<QuotientBasis>(quotient_from_dual(ring, W));
    out.ideal = GradedIdeal(ring, extract_generators(*q, s + 1));
    out.ideal.known_quotient = q;
    return out;
}

std::vector<HomogPoly> perp_basis(const GradedIdeal& c, int j)
{
    const RingCtx& R = *c.ring;
    const PrimeField& F = R.field();
    if (j < 0)
        throw DegreeError("negative degree");
    auto q = quotient_basis(c, j);
    const auto& mons = R.basis(j).monomials;
    const size_t N = mons.size();
    PrimeMatrix B = j <= q->cap ? q->dual[j] : PrimeMatrix(0, N, F);
    std::vector<uint32_t> fact(N);
    for (size_t a = 0; a < N; ++a) {
        uint64_t w = 1;
        for (int x : mons[a])
            for (int k = 2; k <= x; ++k)
                w = w * (k % F.p) % F.p;
        fact[a] = static_cast<uint32_t>(w);
    }
    std::vector<HomogPoly> out;
    if (F.p > static_cast<uint32_t>(j)) {
        for (size_t l = 0; l < B.rows(); ++l) {
            HomogPoly f = zero_poly(R, j);
            for (size_t a = 0; a < N; ++a)
                f.coeffs[a] = F.mul(B.at(l, a), F.inv(fact[a]));
            out.push_back(std::move(f));
        }
        return out;
    }
    // a! may vanish: solve diag(a!) f = B^T lambda
    PrimeMatrix S(N, N + B.rows(), F);
    for (size_t a = 0; a < N; ++a) {
        S.set(a, a, fact[a]);
        for (size_t l = 0; l < B.rows(); ++l)
            S.set(a, N + l, F.neg(B.at(l, a)));
    }
    PrimeMatrix ker = kernel_basis(S);
    std::vector<size_t> fcols(N);
    for (size_t a = 0; a < N; ++a)
        fcols[a] = a;
    RrefResult r = rref(ker.select_cols(fcols));
    for (size_t l = 0; l < r.rank; ++l)
        out.push_back(HomogPoly{j, std::vector<uint32_t>(r.matrix.row(l), r.matrix.row(l) + N)});
    return out;
}

HomogPoly general_element(const GradedIdeal& I, int e, FieldRng& rng)
{
    const RingCtx& R = *I.ring;
    HomogPoly f = zero_poly(R, e);
    for (const auto& g : I.gens) {
        if (g.degree > e)
            continue;
        f = add(R, f, multiply(R, g, random_form(R, e - g.degree, rng)));
    }
    return f;
}

const char* verdict_name(BoundVerdict v)
{
    switch (v) {
    case BoundVerdict::MEETS_CONJECTURED_BOUND:
        return "MEETS_CONJECTURED_BOUND";
    case BoundVerdict::BELOW_BOUND:
        return "BELOW_BOUND";
    case BoundVerdict::EXCEEDS_BOUND:
        return "EXCEEDS_BOUND";
    }
    return "?";
}

namespace {

BoundComparison compare(const HilbertSeries& h, HilbertSeries bound)
{
    BoundComparison c;
    c.bound = std::move(bound);
    const int top = std::max(h.top(), c.bound.top());
    for (int d = 0; d <= top; ++d) {
        if (h.at(d) < c.bound.at(d))
            c.below.push_back(d);
        else if (h.at(d) > c.bound.at(d))
            c.above.push_back(d);
    }
    c.verdict = !c.above.empty()   ? BoundVerdict::EXCEEDS_BOUND
                : !c.below.empty() ? BoundVerdict::BELOW_BOUND
                                   : BoundVerdict::MEETS_CONJECTURED_BOUND;
    return c;
}

std::string describe(const char* name, const BoundComparison& c, const HilbertSeries& h)
{
    std::ostringstream os;
    os << name << " bound: " << c.bound.to_string() << " -> " << verdict_name(c.verdict);
    for (int d : c.below)
        os << " [deg " << d << ": " << h.at(d) << " < " << c.bound.at(d) << "]";
    for (int d : c.above)
        os << " [deg " << d << ": " << h.at(d) << " > " << c.bound.at(d) << "]";
    return os.str();
}

} // namespace

std::string CompressionReport::to_text() const
{
    std::ostringstream os;
    os << "hilbert: " << hf.to_string() << '\n'
       << "socle: " << socle.to_string() << '\n'
       << describe("liaison", liaison, hf) << '\n'
       << describe("min", min_bound, hf) << '\n'
       << "verdict: " << verdict_name(verdict) << '\n';
    return os.str();
}

CompressionReport is_relatively_compressed(const GradedIdeal& I, const GradedIdeal& c, int cap)
{
    if (!contains(I, c))
        throw NotContainedError("the complete intersection is not contained in I");
    auto q = quotient_basis(I, cap);
    CompressionReport rep;
    rep.hf = q->hilbert();
    rep.socle = socle(*q);
    const std::vector<int> s = rep.socle.list();
    const int n = I.ring->n();
    const int window = rep.hf.cap();
    rep.liaison = compare(rep.hf, rc_upper_bound_liaison(c.degrees(), s, n, window).bound);
    rep.min_bound = compare(rep.hf, rc_min_bound_socle(c.degrees(), n, s, window));
    rep.verdict = rep.liaison.verdict;
    return rep;
}

} // namespace rcalg
