#include "steenrod/matrix.hpp"

#include "steenrod/errors.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace steenrod {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ValidationError("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

IntMatrix IntMatrix::column(std::span<const Integer> entries) {
    IntMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

std::vector<Integer> IntMatrix::col(std::size_t c) const {
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::set_col(std::size_t c, std::span<const Integer> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

IntMatrix IntMatrix::col_range(std::size_t first, std::size_t count) const {
    return block(0, first, rows_, count);
}

IntMatrix IntMatrix::row_range(std::size_t first, std::size_t count) const {
    return block(first, 0, count, cols_);
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> idx) const {
    IntMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(idx[i], c);
    return out;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> idx) const {
    IntMatrix out(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < idx.size(); ++i) out(r, i) = (*this)(r, idx[i]);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) {
        auto& x = (*this)(r, c);
        mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    }
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) {
        auto& x = (*this)(r, c);
        mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    }
}

void IntMatrix::row_submul(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const auto& s = (*this)(src, c);
        if (s != 0) submul((*this)(dst, c), q, s);
    }
}

void IntMatrix::col_submul(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto& s = (*this)(r, src);
        if (s != 0) submul((*this)(r, dst), q, s);
    }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ValidationError("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const auto& y = b(k, j);
                if (y != 0) addmul(out(i, j), x, y);
            }
        }
    }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix sum shape mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix difference shape mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix out = a;
    for (auto& x : out.data_) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    return out;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
    IntMatrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
    if (v.size() != cols_) throw ValidationError("matrix-vector shape mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (v[c] != 0 && (*this)(r, c) != 0) addmul(out[r], (*this)(r, c), v[c]);
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m(r, c);
        }
    }
    return os << "] (" << m.rows() << 'x' << m.cols() << ')';
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw ValidationError("hstack row mismatch");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw ValidationError("vstack column mismatch");
    IntMatrix out(a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int s = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            s = -s;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return s * a(n - 1, n - 1);
}

}  // namespace steenrod
