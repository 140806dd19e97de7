// Copyright 2026 The mixreg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIXREG_EXACTALG_H
#define MIXREG_EXACTALG_H

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mixreg {

using Int = mpz_class;

/// Reduced fraction. GMP keeps it canonical (gcd 1, positive denominator).
using ExactRational = mpq_class;

/// Canonical representative of `r` modulo 1, in [0, 1).
ExactRational mod1(const ExactRational &r);

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows);

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t k = 0; k < n; k++) {
            m(k, k) = 1;
        }
        return m;
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    T &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const T &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<T> row(size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const T> row(size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    void swap_rows(size_t a, size_t b);
    void swap_cols(size_t a, size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(size_t dst, size_t src, const T &k);
    /// col[dst] += k * col[src]
    void add_col_multiple(size_t dst, size_t src, const T &k);
    void negate_row(size_t r);
    void negate_col(size_t c);

    Matrix transpose() const;
    bool is_zero() const;

    bool operator==(const Matrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RationalMatrix = Matrix<ExactRational>;

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
std::string to_string(const IntMatrix &m);
std::string to_string(const RationalMatrix &m);

struct BezoutResult {
    Int g;
    Int x;
    Int y;
    bool operator==(const BezoutResult &) const = default;
};

/// g = gcd(a, b) > 0 with a*x + b*y = g. Throws std::invalid_argument when a = b = 0.
BezoutResult bezout(const Int &a, const Int &b);

/// Unique r in [0, prod(moduli)) with r = residues[i] mod moduli[i].
/// Throws std::invalid_argument for mismatched lengths, moduli < 1 or non-coprime moduli.
Int crt(std::span<const Int> residues, std::span<const Int> moduli);

/// Modular inverse of a mod m (m >= 1). Throws std::invalid_argument if gcd(a, m) != 1.
Int inverse_mod(const Int &a, const Int &m);

/// Non-negative remainder of a mod m (m > 0).
Int floor_mod(const Int &a, const Int &m);

struct HermiteForm {
    IntMatrix h;  ///< row-style Hermite normal form; zero rows at the bottom
    IntMatrix u;  ///< unimodular, u * m = h
    size_t rank = 0;
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot in [0, pivot).
HermiteForm hnf(const IntMatrix &m);

struct SmithForm {
    IntMatrix s;  ///< diagonal, s(0,0) | s(1,1) | ..., all >= 0
    IntMatrix u;  ///< unimodular, u * m * v = s
    IntMatrix v;  ///< unimodular
};

SmithForm snf(const IntMatrix &m);

/// Rank over the rationals.
size_t rational_rank(const RationalMatrix &m);

/// Determinant by fraction-free Gaussian elimination (Bareiss).
Int determinant(const IntMatrix &m);

/// Inverse over the rationals. Throws std::invalid_argument if singular.
RationalMatrix inverse(const RationalMatrix &m);

/// Inverse of a unimodular integer matrix. Throws std::invalid_argument if not unimodular.
IntMatrix unimodular_inverse(const IntMatrix &m);

/// Basis (as rows) of the left integer kernel {y : y * m = 0}.
IntMatrix left_kernel(const IntMatrix &m);

Int lcm(const Int &a, const Int &b);

}  // namespace mixreg

#endif
