#include "rcalg/matrix.hpp"
#include "rcalg/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace rcalg {

PrimeMatrix::PrimeMatrix(size_t rows, size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0)
{
}

PrimeMatrix PrimeMatrix::identity(size_t n, PrimeField field)
{
    PrimeMatrix m(n, n, field);
    for (size_t i = 0; i < n; ++i)
        m.set(i, i, 1 % field.p);
    return m;
}

PrimeMatrix PrimeMatrix::from_rows(const std::vector<std::vector<long long>>& rows, PrimeField field)
{
    size_t c = rows.empty() ? 0 : rows[0].size();
    PrimeMatrix m(rows.size(), c, field);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c)
            throw ParamError("ragged matrix rows");
        for (size_t j = 0; j < c; ++j)
            m.set(i, j, field.from_int(rows[i][j]));
    }
    return m;
}

void PrimeMatrix::push_row(const uint32_t* v, size_t len)
{
    if (rows_ == 0 && data_.empty())
        cols_ = len;
    if (len != cols_)
        throw ParamError("row length mismatch");
    data_.insert(data_.end(), v, v + len);
    ++rows_;
}

void PrimeMatrix::append_rows(const PrimeMatrix& other)
{
    if (other.rows_ == 0)
        return;
    if (rows_ == 0)
        cols_ = other.cols_;
    if (other.cols_ != cols_)
        throw ParamError("column count mismatch in append_rows");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

void PrimeMatrix::reset_cols(size_t cols)
{
    if (rows_ != 0)
        throw ParamError("reset_cols on a nonempty matrix");
    cols_ = cols;
}

PrimeMatrix PrimeMatrix::transpose() const
{
    PrimeMatrix t(cols_, rows_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

PrimeMatrix PrimeMatrix::select_rows(const std::vector<size_t>& idx) const
{
    PrimeMatrix s(idx.size(), cols_, field_);
    for (size_t k = 0; k < idx.size(); ++k)
        std::copy(row(idx[k]), row(idx[k]) + cols_, s.row(k));
    return s;
}

PrimeMatrix PrimeMatrix::select_cols(const std::vector<size_t>& idx) const
{
    PrimeMatrix s(rows_, idx.size(), field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < idx.size(); ++k)
            s.set(i, k, at(i, idx[k]));
    return s;
}

bool PrimeMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](uint32_t v) { return v == 0; });
}

std::string PrimeMatrix::to_string() const
{
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j);
        os << "]\n";
    }
    return os.str();
}

namespace {

/// Number of unreduced products a*b (a, b < p) that fit in a uint64 accumulator.
uint64_t lazy_budget(uint32_t p)
{
    uint64_t sq = static_cast<uint64_t>(p - 1) * (p - 1) + p;
    return std::numeric_limits<uint64_t>::max() / sq;
}

} // namespace

PrimeMatrix multiply(const PrimeMatrix& a, const PrimeMatrix& b)
{
    if (a.cols() != b.rows())
        throw ParamError("dimension mismatch in multiply");
    const uint32_t p = a.field().p;
    const uint64_t budget = lazy_budget(p);
    PrimeMatrix c(a.rows(), b.cols(), a.field());
    std::vector<uint64_t> acc(b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        uint64_t pending = 0;
        const uint32_t* ar = a.row(i);
        for (size_t k = 0; k < a.cols(); ++k) {
            uint64_t f = ar[k];
            if (f == 0)
                continue;
            const uint32_t* br = b.row(k);
            for (size_t j = 0; j < b.cols(); ++j)
                acc[j] += f * br[j];
            if (++pending + 1 >= budget) {
                for (auto& x : acc)
                    x %= p;
                pending = 0;
            }
        }
        uint32_t* cr = c.row(i);
        for (size_t j = 0; j < b.cols(); ++j)
            cr[j] = static_cast<uint32_t>(acc[j] % p);
    }
    return c;
}

std::vector<uint32_t> multiply(const PrimeMatrix& a, const std::vector<uint32_t>& v)
{
    if (a.cols() != v.size())
        throw ParamError("dimension mismatch in matrix-vector multiply");
    const uint32_t p = a.field().p;
    const uint64_t budget = lazy_budget(p);
    std::vector<uint32_t> out(a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        uint64_t acc = 0, pending = 0;
        const uint32_t* ar = a.row(i);
        for (size_t k = 0; k < a.cols(); ++k) {
            acc += static_cast<uint64_t>(ar[k]) * v[k];
            if (++pending + 1 >= budget) {
                acc %= p;
                pending = 0;
            }
        }
        out[i] = static_cast<uint32_t>(acc % p);
    }
    return out;
}

RrefResult rref(const PrimeMatrix& m)
{
    const size_t R = m.rows(), C = m.cols();
    const PrimeField& F = m.field();
    const uint32_t p = F.p;
    RrefResult res;
    if (R == 0 || C == 0) {
        res.matrix = PrimeMatrix(0, C, F);
        return res;
    }
    // Entries accumulate unreduced row updates; each entry receives at most one update
    // per pivot, so lazy accumulation is safe while the pivot count stays under budget.
    const bool lazy = lazy_budget(p) > std::min(R, C) + 1;
    std::vector<uint64_t> a(m.data().begin(), m.data().end());
    auto at = [&](size_t i, size_t j) -> uint64_t& { return a[i * C + j]; };

    size_t r = 0;
    for (size_t c = 0; c < C && r < R; ++c) {
        size_t piv = R;
        for (size_t i = r; i < R; ++i) {
            uint64_t& v = at(i, c);
            v %= p;
            if (v != 0) {
                piv = i;
                break;
            }
        }
        if (piv == R)
            continue;
        if (piv != r)
            std::swap_ranges(a.begin() + piv * C, a.begin() + (piv + 1) * C, a.begin() + r * C);
        uint64_t* pr = a.data() + r * C;
        for (size_t k = c; k < C; ++k)
            pr[k] %= p;
        const uint64_t inv = F.inv(static_cast<uint32_t>(pr[c]));
        for (size_t k = c; k < C; ++k)
            pr[k] = pr[k] * inv % p;
        for (size_t i = 0; i < R; ++i) {
            if (i == r)
                continue;
            uint64_t* ri = a.data() + i * C;
            uint64_t f = ri[c] % p;
            if (f == 0) {
                ri[c] = 0;
                continue;
            }
            f = p - f;
            if (lazy) {
                for (size_t k = c; k < C; ++k)
                    ri[k] += f * pr[k];
            }
            else {
                for (size_t k = c; k < C; ++k)
                    ri[k] = (ri[k] % p + f * pr[k]) % p;
            }
            ri[c] = 0;
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.matrix = PrimeMatrix(r, C, F);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < C; ++j)
            res.matrix.set(i, j, static_cast<uint32_t>(at(i, j) % p));
    return res;
}

size_t rank(const PrimeMatrix& m) { return rref(m).rank; }

PrimeMatrix kernel_basis(const PrimeMatrix& m)
{
    const size_t C = m.cols();
    const PrimeField& F = m.field();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(C, false);
    for (size_t c : r.pivots)
        is_pivot[c] = true;
    PrimeMatrix k(0, C, F);
    std::vector<uint32_t> v(C);
    for (size_t f = 0; f < C; ++f) {
        if (is_pivot[f])
            continue;
        std::fill(v.begin(), v.end(), 0);
        v[f] = 1 % F.p;
        for (size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = F.neg(r.matrix.at(i, f));
        k.push_row(v);
    }
    return k;
}

std::optional<std::vector<uint32_t>> solve(const PrimeMatrix& a, const std::vector<uint32_t>& b)
{
    if (b.size() != a.rows())
        throw ParamError("right-hand side length mismatch");
    PrimeMatrix aug(a.rows(), a.cols() + 1, a.field());
    for (size_t i = 0; i < a.rows(); ++i) {
        std::copy(a.row(i), a.row(i) + a.cols(), aug.row(i));
        aug.set(i, a.cols(), b[i] % a.field().p);
    }
    RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == a.cols())
        return std::nullopt;
    std::vector<uint32_t> x(a.cols(), 0);
    for (size_t i = 0; i < r.rank; ++i)
        x[r.pivots[i]] = r.matrix.at(i, a.cols());
    return x;
}

bool in_image(const PrimeMatrix& a, const std::vector<uint32_t>& b) { return solve(a, b).has_value(); }

std::optional<std::vector<uint32_t>> rref_coordinates(const RrefResult& r, const uint32_t* v)
{
    const PrimeMatrix& m = r.matrix;
    const PrimeField& F = m.field();
    const size_t C = m.cols();
    std::vector<uint32_t> coords(r.rank);
    std::vector<uint64_t> rest(v, v + C);
    for (size_t i = 0; i < r.rank; ++i) {
        uint32_t c = static_cast<uint32_t>(rest[r.pivots[i]] % F.p);
        coords[i] = c;
        if (c == 0)
            continue;
        uint64_t f = F.p - c;
        const uint32_t* mr = m.row(i);
        for (size_t k = 0; k < C; ++k)
            rest[k] = (rest[k] + f * mr[k]) % F.p;
    }
    for (uint64_t x : rest)
        if (x % F.p != 0)
            return std::nullopt;
    return coords;
}

} // namespace rcalg
