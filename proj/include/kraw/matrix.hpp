#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "kraw/errors.hpp"
#include "kraw/numeric.hpp"

namespace kraw {

// Dense row-major matrix over an exact coefficient ring.  Both dimensions
// are at least 1.  Comparison is entrywise and exact.
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) {
            throw DomainError("matrix dimensions must be positive");
        }
    }

    Matrix(std::initializer_list<std::initializer_list<T>> init)
        : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
        if (rows_ == 0 || cols_ == 0) {
            throw DomainError("matrix dimensions must be positive");
        }
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) {
                throw DomainError("ragged initializer rows");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) noexcept {
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * cols_ + j];
    }

    const T& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix&) const = default;

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T{}) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    r(i, j) += a * o(k, j);
                }
            }
        }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Matrix times column vector.
    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) throw DomainError("matrix-vector shape mismatch");
        std::vector<T> y(rows_, T{});
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw DomainError("matrix shape mismatch");
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<Int>;
using RationalMatrix = Matrix<Rat>;

inline RationalMatrix to_rational(const ExactMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// First position where two same-shape matrices disagree, if any.
template <typename T>
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Matrix<T>& a,
                                                                  const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DomainError("matrix shape mismatch");
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return std::make_pair(i, j);
    return std::nullopt;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j);
        }
        os << "]" << (i + 1 == m.rows() ? "]" : "\n");
    }
    return os;
}

} // namespace kraw
