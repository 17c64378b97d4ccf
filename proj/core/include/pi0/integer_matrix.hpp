#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pi0/errors.hpp"

namespace pi0 {

/// Exact arbitrary-precision integer. All lattice computation in this
/// library runs on these; no floating point ever enters the exact layer.
using Int = mpz_class;

/// Dense integer matrix with immutable dimensions, row-major storage.
/// Entries are arbitrary-precision, so Smith/Hermite reductions can never
/// overflow no matter how the intermediate entries grow.
class IntegerMatrix {
public:
    IntegerMatrix() = default;

    /// rows x cols zero matrix.
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    /// Build from explicit rows; every row must have the same length.
    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                                   std::size_t cols_if_empty = 0);
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> col(std::size_t j) const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const noexcept { return rows_ == cols_; }

    IntegerMatrix transposed() const;

    /// Matrix-vector product (vectors are column vectors).
    std::vector<Int> apply(const std::vector<Int>& v) const;

    IntegerMatrix operator-() const;
    friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

    bool operator==(const IntegerMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

    // In-place elementary row operations, used by the normal-form routines.
    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
    void swap_cols(std::size_t i, std::size_t j);

    /// Stack the rows of b under the rows of a (column counts must agree).
    static IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

/// Sign of an exact integer: -1, 0, +1.
inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

/// Floor division (rounds toward minus infinity), exact.
Int floor_div(const Int& a, const Int& b);

/// Extended gcd: g = s*a + t*b with g >= 0.
void extended_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t);

} // namespace pi0
