#include "rcalg/ring.hpp"
#include "rcalg/errors.hpp"

#include <cctype>
#include <sstream>

namespace rcalg {

long long binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

RingCtx::RingCtx(int n, PrimeField field) : n_(n), field_(field)
{
    if (n < 1)
        throw ParamError("number of variables must be at least 1");
}

size_t RingCtx::dim(int d) const
{
    if (d < 0)
        return 0;
    return static_cast<size_t>(binomial(d + n_ - 1, n_ - 1));
}

namespace {

void enumerate(int n, int pos, int left, Exponents& cur, std::vector<Exponents>& out)
{
    if (pos == n - 1) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (int a = left; a >= 0; --a) {
        cur[pos] = a;
        enumerate(n, pos + 1, left - a, cur, out);
    }
}

} // namespace

const DegreeBasis& RingCtx::basis(int d) const
{
    if (d < 0)
        throw DegreeError("negative degree");
    std::lock_guard<std::mutex> lock(mu_);
    if (cache_.size() <= static_cast<size_t>(d))
        cache_.resize(d + 1);
    if (!cache_[d]) {
        auto b = std::make_unique<DegreeBasis>();
        b->degree = d;
        Exponents cur(n_, 0);
        enumerate(n_, 0, d, cur, b->monomials);
        if (d > 0) {
            b->first_var.resize(b->monomials.size());
            b->first_quotient.resize(b->monomials.size());
            for (size_t k = 0; k < b->monomials.size(); ++k) {
                Exponents e = b->monomials[k];
                int i = 0;
                while (e[i] == 0)
                    ++i;
                --e[i];
                b->first_var[k] = i;
                b->first_quotient[k] = static_cast<uint32_t>(index(e));
            }
        }
        cache_[d] = std::move(b);
    }
    return *cache_[d];
}

void RingCtx::reserve(int max_degree) const
{
    for (int d = 0; d <= max_degree; ++d)
        basis(d);
}

size_t RingCtx::index(const int* e) const
{
    int r = 0;
    for (int i = 0; i < n_; ++i)
        r += e[i];
    size_t idx = 0;
    for (int i = 0; i + 1 < n_; ++i) {
        int gap = r - e[i];
        if (gap >= 1)
            idx += static_cast<size_t>(binomial(gap - 1 + n_ - i - 1, n_ - i - 1));
        r -= e[i];
    }
    return idx;
}

size_t RingCtx::index(const Exponents& e) const { return index(e.data()); }

std::string RingCtx::monomial_text(const Exponents& e, char var) const
{
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += var + std::to_string(i + 1);
        if (e[i] > 1)
            s += '^' + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

bool HomogPoly::is_zero() const
{
    for (uint32_t c : coeffs)
        if (c)
            return false;
    return true;
}

size_t HomogPoly::term_count() const
{
    size_t k = 0;
    for (uint32_t c : coeffs)
        k += c != 0;
    return k;
}

HomogPoly zero_poly(const RingCtx& R, int d)
{
    return HomogPoly{d, std::vector<uint32_t>(R.dim(d), 0)};
}

HomogPoly monomial_poly(const RingCtx& R, const Exponents& e, uint32_t c)
{
    int d = 0;
    for (int x : e)
        d += x;
    HomogPoly f = zero_poly(R, d);
    f.coeffs[R.index(e)] = c % R.field().p;
    return f;
}

HomogPoly variable(const RingCtx& R, int i)
{
    Exponents e(R.n(), 0);
    e[i] = 1;
    return monomial_poly(R, e);
}

HomogPoly add(const RingCtx& R, const HomogPoly& f, const HomogPoly& g)
{
    if (f.degree != g.degree)
        throw DegreeError("adding forms of different degrees");
    HomogPoly h = f;
    for (size_t k = 0; k < h.coeffs.size(); ++k)
        h.coeffs[k] = R.field().add(h.coeffs[k], g.coeffs[k]);
    return h;
}

HomogPoly scale(const RingCtx& R, const HomogPoly& f, uint32_t c)
{
    HomogPoly h = f;
    for (auto& x : h.coeffs)
        x = R.field().mul(x, c);
    return h;
}

HomogPoly multiply(const RingCtx& R, const HomogPoly& f, const HomogPoly& g)
{
    const PrimeField& F = R.field();
    HomogPoly h = zero_poly(R, f.degree + g.degree);
    const auto& bf = R.basis(f.degree).monomials;
    const auto& bg = R.basis(g.degree).monomials;
    Exponents e(R.n());
    for (size_t a = 0; a < bf.size(); ++a) {
        if (!f.coeffs[a])
            continue;
        for (size_t b = 0; b < bg.size(); ++b) {
            if (!g.coeffs[b])
                continue;
            for (int i = 0; i < R.n(); ++i)
                e[i] = bf[a][i] + bg[b][i];
            size_t k = R.index(e);
            h.coeffs[k] = F.add(h.coeffs[k], F.mul(f.coeffs[a], g.coeffs[b]));
        }
    }
    return h;
}

PrimeMatrix mult_map(const RingCtx& R, const HomogPoly& f, int d)
{
    if (d < 0)
        throw DegreeError("negative source degree");
    const PrimeField& F = R.field();
    const auto& src = R.basis(d).monomials;
    const auto& bf = R.basis(f.degree).monomials;
    PrimeMatrix m(R.dim(d + f.degree), src.size(), F);
    Exponents e(R.n());
    for (size_t j = 0; j < src.size(); ++j)
        for (size_t a = 0; a < bf.size(); ++a) {
            if (!f.coeffs[a])
                continue;
            for (int i = 0; i < R.n(); ++i)
                e[i] = src[j][i] + bf[a][i];
            m.set(R.index(e), j, f.coeffs[a]);
        }
    return m;
}

namespace {

/// prod_i (a_i + c_i)! / c_i!  mod p
uint32_t falling_weight(const PrimeField& F, const Exponents& a, const Exponents& c)
{
    uint64_t w = 1 % F.p;
    for (size_t i = 0; i < a.size(); ++i)
        for (int k = 1; k <= a[i]; ++k)
            w = w * ((c[i] + k) % F.p) % F.p;
    return static_cast<uint32_t>(w);
}

} // namespace

ContractionMap contraction_map(const RingCtx& R, const HomogPoly& Fp, int d)
{
    const int s = Fp.degree;
    if (d < 0 || d > s)
        throw DegreeError("contraction degree " + std::to_string(d) + " outside [0, " +
                          std::to_string(s) + "]");
    const PrimeField& F = R.field();
    const auto& src = R.basis(d).monomials;
    const auto& tgt = R.basis(s - d).monomials;
    ContractionMap out{PrimeMatrix(tgt.size(), src.size(), F), std::nullopt};
    Exponents e(R.n());
    for (size_t c = 0; c < tgt.size(); ++c)
        for (size_t a = 0; a < src.size(); ++a) {
            for (int i = 0; i < R.n(); ++i)
                e[i] = src[a][i] + tgt[c][i];
            uint32_t coef = Fp.coeffs[R.index(e)];
            if (coef)
                out.matrix.set(c, a, F.mul(coef, falling_weight(F, src[a], tgt[c])));
        }
    if (F.p <= static_cast<uint32_t>(s))
        out.warning = "characteristic " + std::to_string(F.p) + " <= degree " + std::to_string(s) +
                      ": differentiation is degenerate";
    return out;
}

HomogPoly differentiate(const RingCtx& R, const HomogPoly& g, const HomogPoly& Fp)
{
    int s = Fp.degree - g.degree;
    if (s < 0)
        return zero_poly(R, 0);
    ContractionMap cm = contraction_map(R, Fp, g.degree);
    return HomogPoly{s, multiply(cm.matrix, g.coeffs)};
}

uint32_t FieldRng::uniform(uint32_t p)
{
    // rejection sampling keeps the draw exactly uniform and platform independent
    const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % p;
    uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return static_cast<uint32_t>(x % p);
}

uint32_t FieldRng::nonzero(uint32_t p)
{
    uint32_t v;
    do {
        v = uniform(p);
    } while (v == 0);
    return v;
}

HomogPoly random_form(const RingCtx& R, int d, FieldRng& rng)
{
    if (d < 0)
        throw DegreeError("negative degree");
    HomogPoly f = zero_poly(R, d);
    for (auto& c : f.coeffs)
        c = rng.uniform(R.field().p);
    return f;
}

std::string to_text(const RingCtx& R, const HomogPoly& f, char var)
{
    const auto& mons = R.basis(f.degree).monomials;
    std::string s;
    for (size_t k = 0; k < mons.size(); ++k) {
        if (!f.coeffs[k])
            continue;
        if (!s.empty())
            s += " + ";
        s += std::to_string(f.coeffs[k]);
        if (f.degree > 0)
            s += '*' + R.monomial_text(mons[k], var);
    }
    return s.empty() ? "0" : s;
}

HomogPoly parse_poly(const RingCtx& R, const std::string& text)
{
    const PrimeField& F = R.field();
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    // coefficients are reduced mod p, indices and exponents are not
    auto number = [&](bool reduce) -> long long {
        size_t start = pos;
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (reduce)
                v %= static_cast<long long>(F.p);
            else if (v > 1000000)
                throw ParseError("integer too large in '" + text + "'");
            ++pos;
        }
        if (pos == start)
            throw ParseError("expected a number at position " + std::to_string(pos) + " in '" + text + "'");
        return v;
    };

    struct Term
    {
        Exponents e;
        uint32_t c;
    };
    std::vector<Term> terms;
    int degree = -1;
    skip();
    if (text.substr(pos) == "0")
        throw ParseError("degree of the zero polynomial is ambiguous; give a nonzero form");
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size())
            break;
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
            skip();
        }
        else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(pos) + " in '" + text + "'");
        }
        first = false;
        long long coef = 1;
        Exponents e(R.n(), 0);
        bool have = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coef = number(true);
            have = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            }
            else {
                goto done_term;
            }
        }
        while (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y')) {
            ++pos;
            long long i = number(false);
            if (i < 1 || i > R.n())
                throw ParseError("variable index out of range in '" + text + "'");
            long long a = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                a = number(false);
            }
            e[i - 1] += static_cast<int>(a);
            have = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
                continue;
            }
            break;
        }
    done_term:
        if (!have)
            throw ParseError("empty term in '" + text + "'");
        int d = 0;
        for (int x : e)
            d += x;
        if (degree >= 0 && d != degree)
            throw ParseError("inhomogeneous polynomial '" + text + "'");
        degree = d;
        uint32_t c = F.from_int(coef);
        terms.push_back({e, negative ? F.neg(c) : c});
    }
    if (degree < 0)
        throw ParseError("empty polynomial");
    HomogPoly f = zero_poly(R, degree);
    for (const Term& t : terms) {
        size_t k = R.index(t.e);
        f.coeffs[k] = F.add(f.coeffs[k], t.c);
    }
    return f;
}

} // namespace rcalg
