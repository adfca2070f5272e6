#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3a5/rational.hpp"

namespace k3a5 {

template <class T>
class Matrix {
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;

public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::string to_string() const {
        using k3a5::to_string;
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "[") + to_string((*this)(i, j));
            s += "]";
        }
        return s + "]";
    }
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rational(const IntMatrix& m);
IntMatrix to_integer(const RatMatrix& m);  // throws if any entry is non-integral

Int determinant(const IntMatrix& m);  // Bareiss, fraction-free
Rat determinant(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);  // throws on singular input

std::vector<Rat> matvec(const RatMatrix& m, const std::vector<Rat>& x);

// Smith normal form U*M*V = D with U, V unimodular and the diagonal entries
// nonnegative and forming a divisibility chain d1 | d2 | ...
struct SnfResult {
    IntMatrix d, u, v;
    std::vector<Int> invariant_factors() const;
};
SnfResult smith_normal_form(const IntMatrix& m);

// Row-style Hermite basis of the lattice spanned by the rows of `gens`.
// Returns one row per pivot; requires nothing of the input rank.
IntMatrix hermite_row_basis(const IntMatrix& gens);

}  // namespace k3a5
