#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "surfcohom/bigint.hpp"
#include "surfcohom/errors.hpp"

namespace surfcohom {

using IntVector = std::vector<BigInt>;

/// Dense row-major matrix over the integers. Either dimension may be zero.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
            for (long long v : r) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix column(const IntVector& v) {
        IntMatrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    IntVector row(std::size_t r) const {
        return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    IntVector col(std::size_t c) const {
        IntVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Rows [r0, r1) and columns [c0, c1).
    IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        IntMatrix out(r1 - r0, c1 - c0);
        for (std::size_t r = r0; r < r1; ++r)
            for (std::size_t c = c0; c < c1; ++c) out(r - r0, c - c0) = (*this)(r, c);
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }

    IntMatrix& operator+=(const IntMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    IntMatrix& operator-=(const IntMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    IntMatrix& operator*=(const BigInt& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(IntMatrix a, const BigInt& s) { return a *= s; }
    friend IntMatrix operator*(const BigInt& s, IntMatrix a) { return a *= s; }
    friend IntMatrix operator-(IntMatrix a) { return a *= BigInt(-1); }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw InvalidArgument("matrix product shape mismatch: " + a.shape() + " * " + b.shape());
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const BigInt& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend IntVector operator*(const IntMatrix& a, const IntVector& v) {
        if (a.cols_ != v.size()) throw InvalidArgument("matrix-vector shape mismatch");
        IntVector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
        return out;
    }

    bool operator==(const IntMatrix&) const = default;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }
    /// row[dst] += q * row[src]
    void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += q * (*this)(src, c);
    }
    /// col[dst] += q * col[src]
    void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += q * (*this)(r, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
    }
    void negate_col(std::size_t c) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string str() const {
        std::string out = "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            out += r ? ", [" : "[";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) out += ", ";
                out += (*this)(r, c).str();
            }
            out += "]";
        }
        return out + "]";
    }

private:
    void check_same_shape(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw InvalidArgument("shape mismatch: " + shape() + " vs " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// (A ⊗ B)(i*p + k, j*q + l) = A(i, j) * B(k, l) for B of shape p x q.
inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

inline IntVector kronecker(const IntVector& a, const IntVector& b) {
    IntVector out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

inline IntMatrix hstack(const std::vector<IntMatrix>& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw InvalidArgument("hstack row mismatch");
        cols += b.cols();
    }
    IntMatrix out(rows, cols);
    std::size_t c = 0;
    for (const auto& b : blocks) {
        out.set_block(0, c, b);
        c += b.cols();
    }
    return out;
}

inline IntMatrix vstack(const std::vector<IntMatrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw InvalidArgument("vstack column mismatch");
        rows += b.rows();
    }
    IntMatrix out(rows, cols);
    std::size_t r = 0;
    for (const auto& b : blocks) {
        out.set_block(r, 0, b);
        r += b.rows();
    }
    return out;
}

inline bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline IntVector operator+(IntVector a, const IntVector& b) {
    if (a.size() != b.size()) throw InvalidArgument("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline IntVector operator-(IntVector a, const IntVector& b) {
    if (a.size() != b.size()) throw InvalidArgument("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline IntVector operator*(const BigInt& s, IntVector a) {
    for (auto& x : a) x *= s;
    return a;
}

inline std::string to_string(const IntVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
    return out + "]";
}

} // namespace surfcohom
