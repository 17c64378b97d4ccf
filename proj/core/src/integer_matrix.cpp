#include "pi0/integer_matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace pi0 {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                                       std::size_t cols_if_empty) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? cols_if_empty : rows.front().size();
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw validation_error("from_rows: ragged row " + std::to_string(i));
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Int>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Int> row;
        row.reserve(r.size());
        for (long v : r) row.emplace_back(v);
        out.push_back(std::move(row));
    }
    return from_rows(out);
}

std::vector<Int> IntegerMatrix::row(std::size_t i) const {
    std::vector<Int> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
}

std::vector<Int> IntegerMatrix::col(std::size_t j) const {
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

bool IntegerMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0) return false;
    return true;
}

bool IntegerMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw validation_error("apply: vector length mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = std::move(acc);
    }
    return out;
}

IntegerMatrix IntegerMatrix::operator-() const {
    IntegerMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw validation_error("matrix addition: dimension mismatch");
    IntegerMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw validation_error("matrix subtraction: dimension mismatch");
    IntegerMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        out.entries_[k] = a.entries_[k] - b.entries_[k];
    return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw validation_error("matrix product: dimension mismatch");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(entries_[i * cols_ + c], entries_[j * cols_ + c]);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) {
        Int& e = entries_[i * cols_ + c];
        e = -e;
    }
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        entries_[dst * cols_ + c] += k * entries_[src * cols_ + c];
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap(entries_[r * cols_ + i], entries_[r * cols_ + j]);
}

IntegerMatrix IntegerMatrix::vstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw validation_error("vstack: column count mismatch");
    const std::size_t cols = a.rows() != 0 ? a.cols() : b.cols();
    IntegerMatrix out(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << m(i, j);
            if (j + 1 < m.cols()) os << ", ";
        }
        os << ']';
        if (i + 1 < m.rows()) os << ",";
    }
    os << ']';
    return os;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void extended_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

} // namespace pi0
