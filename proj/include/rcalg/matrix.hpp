#pragma once

#include "rcalg/field.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rcalg {

/// Dense row-major matrix over GF(p). Entries are always reduced.
class PrimeMatrix
{
public:
    PrimeMatrix() = default;
    PrimeMatrix(size_t rows, size_t cols, PrimeField field);

    static PrimeMatrix identity(size_t n, PrimeField field);
    static PrimeMatrix from_rows(const std::vector<std::vector<long long>>& rows, PrimeField field);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    uint32_t at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t v) { data_[i * cols_ + j] = v; }
    uint32_t* row(size_t i) { return data_.data() + i * cols_; }
    const uint32_t* row(size_t i) const { return data_.data() + i * cols_; }
    const std::vector<uint32_t>& data() const { return data_; }

    /// Appends a row; length must equal cols() unless the matrix has no rows yet.
    void push_row(const uint32_t* v, size_t len);
    void push_row(const std::vector<uint32_t>& v) { push_row(v.data(), v.size()); }
    void append_rows(const PrimeMatrix& other);
    /// Changes the column count of an empty matrix.
    void reset_cols(size_t cols);

    PrimeMatrix transpose() const;
    PrimeMatrix select_rows(const std::vector<size_t>& idx) const;
    PrimeMatrix select_cols(const std::vector<size_t>& idx) const;

    bool is_zero() const;
    bool operator==(const PrimeMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
    }

    std::string to_string() const;

private:
    size_t rows_ = 0, cols_ = 0;
    PrimeField field_;
    std::vector<uint32_t> data_;
};

PrimeMatrix multiply(const PrimeMatrix& a, const PrimeMatrix& b);
std::vector<uint32_t> multiply(const PrimeMatrix& a, const std::vector<uint32_t>& v);

struct RrefResult
{
    PrimeMatrix matrix;          ///< reduced row echelon form; zero rows removed
    size_t rank = 0;
    std::vector<size_t> pivots;  ///< pivot column of each row, increasing
};

/// Unique reduced row echelon form. Pivot rule: first nonzero entry in column order.
RrefResult rref(const PrimeMatrix& m);
size_t rank(const PrimeMatrix& m);

/// Rows form a basis of {v : m v^T = 0}, one per free column in increasing order.
PrimeMatrix kernel_basis(const PrimeMatrix& m);

/// Some x with a x = b, or nothing if b is not in the column space of a.
std::optional<std::vector<uint32_t>> solve(const PrimeMatrix& a, const std::vector<uint32_t>& b);
bool in_image(const PrimeMatrix& a, const std::vector<uint32_t>& b);

/// Coordinates of v in the row space of an RREF matrix (values at its pivot columns),
/// or nothing when v is not in that row space.
std::optional<std::vector<uint32_t>> rref_coordinates(const RrefResult& r, const uint32_t* v);

} // namespace rcalg
