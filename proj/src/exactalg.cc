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

#include "mixreg/exactalg.h"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace mixreg {

ExactRational mod1(const ExactRational &r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    ExactRational out = r - ExactRational(q);
    out.canonicalize();
    return out;
}

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

template <typename T>
void Matrix<T>::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t c = 0; c < cols_; c++) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

template <typename T>
void Matrix<T>::swap_cols(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t r = 0; r < rows_; r++) {
        std::swap((*this)(r, a), (*this)(r, b));
    }
}

template <typename T>
void Matrix<T>::add_row_multiple(size_t dst, size_t src, const T &k) {
    if (k == 0) {
        return;
    }
    for (size_t c = 0; c < cols_; c++) {
        if ((*this)(src, c) != 0) {
            (*this)(dst, c) += k * (*this)(src, c);
        }
    }
}

template <typename T>
void Matrix<T>::add_col_multiple(size_t dst, size_t src, const T &k) {
    if (k == 0) {
        return;
    }
    for (size_t r = 0; r < rows_; r++) {
        if ((*this)(r, src) != 0) {
            (*this)(r, dst) += k * (*this)(r, src);
        }
    }
}

template <typename T>
void Matrix<T>::negate_row(size_t r) {
    for (size_t c = 0; c < cols_; c++) {
        (*this)(r, c) = -(*this)(r, c);
    }
}

template <typename T>
void Matrix<T>::negate_col(size_t c) {
    for (size_t r = 0; r < rows_; r++) {
        (*this)(r, c) = -(*this)(r, c);
    }
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

template <typename T>
bool Matrix<T>::is_zero() const {
    for (const auto &e : data_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

template class Matrix<Int>;
template class Matrix<ExactRational>;

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    Matrix<T> out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            if (a(i, k) == 0) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

template <typename T>
std::string render(const Matrix<T> &m) {
    std::ostringstream out;
    out << "[";
    for (size_t r = 0; r < m.rows(); r++) {
        out << (r ? ", [" : "[");
        for (size_t c = 0; c < m.cols(); c++) {
            out << (c ? ", " : "") << m(r, c);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

Int fdiv(const Int &a, const Int &b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    return multiply(a, b);
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
    return multiply(a, b);
}

std::string to_string(const IntMatrix &m) {
    return render(m);
}

std::string to_string(const RationalMatrix &m) {
    return render(m);
}

BezoutResult bezout(const Int &a, const Int &b) {
    if (a == 0 && b == 0) {
        throw std::invalid_argument("bezout: both arguments are zero");
    }
    BezoutResult r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int floor_mod(const Int &a, const Int &m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int inverse_mod(const Int &a, const Int &m) {
    if (m < 1) {
        throw std::invalid_argument("inverse_mod: modulus must be positive");
    }
    if (m == 1) {
        return 0;
    }
    Int r;
    Int a_red = floor_mod(a, m);
    if (mpz_invert(r.get_mpz_t(), a_red.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw std::invalid_argument("inverse_mod: not invertible");
    }
    return r;
}

Int lcm(const Int &a, const Int &b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int crt(std::span<const Int> residues, std::span<const Int> moduli) {
    if (residues.size() != moduli.size()) {
        throw std::invalid_argument("crt: residue and modulus lists differ in length");
    }
    Int acc = 0;
    Int mod = 1;
    for (size_t k = 0; k < moduli.size(); k++) {
        const Int &m = moduli[k];
        if (m < 1) {
            throw std::invalid_argument("crt: moduli must be >= 1");
        }
        if (gcd(mod, m) != 1) {
            throw std::invalid_argument("crt: moduli are not pairwise coprime");
        }
        // acc + mod * t = residues[k] (mod m)
        Int t = floor_mod((residues[k] - acc) * inverse_mod(mod, m), m);
        acc += mod * t;
        mod *= m;
        acc = floor_mod(acc, mod);
    }
    return acc;
}

HermiteForm hnf(const IntMatrix &m) {
    HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
    IntMatrix &h = out.h;
    IntMatrix &u = out.u;
    size_t r = 0;
    for (size_t c = 0; c < h.cols() && r < h.rows(); c++) {
        bool have_pivot = false;
        while (true) {
            size_t best = h.rows();
            for (size_t i = r; i < h.rows(); i++) {
                if (h(i, c) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c)))) {
                    best = i;
                }
            }
            if (best == h.rows()) {
                break;
            }
            have_pivot = true;
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool cleared = true;
            for (size_t i = r + 1; i < h.rows(); i++) {
                if (h(i, c) == 0) {
                    continue;
                }
                Int q = h(i, c) / h(r, c);
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h(i, c) != 0) {
                    cleared = false;
                }
            }
            if (cleared) {
                break;
            }
        }
        if (!have_pivot) {
            continue;
        }
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (size_t i = 0; i < r; i++) {
            Int q = fdiv(h(i, c), h(r, c));
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        r++;
    }
    out.rank = r;
    return out;
}

SmithForm snf(const IntMatrix &m) {
    SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix &s = out.s;
    IntMatrix &u = out.u;
    IntMatrix &v = out.v;
    size_t limit = std::min(s.rows(), s.cols());
    for (size_t t = 0; t < limit; t++) {
        while (true) {
            size_t bi = s.rows(), bj = s.cols();
            for (size_t i = t; i < s.rows(); i++) {
                for (size_t j = t; j < s.cols(); j++) {
                    if (s(i, j) != 0 && (bi == s.rows() || abs(s(i, j)) < abs(s(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (bi == s.rows()) {
                return out;
            }
            s.swap_rows(t, bi);
            u.swap_rows(t, bi);
            s.swap_cols(t, bj);
            v.swap_cols(t, bj);

            bool clean = true;
            for (size_t i = t + 1; i < s.rows(); i++) {
                if (s(i, t) != 0) {
                    Int q = s(i, t) / s(t, t);
                    s.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                    clean = clean && s(i, t) == 0;
                }
            }
            for (size_t j = t + 1; j < s.cols(); j++) {
                if (s(t, j) != 0) {
                    Int q = s(t, j) / s(t, t);
                    s.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                    clean = clean && s(t, j) == 0;
                }
            }
            if (!clean) {
                continue;
            }
            // Divisibility: fold any offending row into the pivot row and retry.
            bool divides = true;
            for (size_t i = t + 1; i < s.rows() && divides; i++) {
                for (size_t j = t + 1; j < s.cols(); j++) {
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return out;
}

size_t rational_rank(const RationalMatrix &m) {
    RationalMatrix a = m;
    size_t rank = 0;
    for (size_t c = 0; c < a.cols() && rank < a.rows(); c++) {
        size_t p = rank;
        while (p < a.rows() && a(p, c) == 0) {
            p++;
        }
        if (p == a.rows()) {
            continue;
        }
        a.swap_rows(rank, p);
        for (size_t i = rank + 1; i < a.rows(); i++) {
            if (a(i, c) != 0) {
                ExactRational k = -a(i, c) / a(rank, c);
                a.add_row_multiple(i, rank, k);
            }
        }
        rank++;
    }
    return rank;
}

Int determinant(const IntMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of non-square matrix");
    }
    size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (a(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a(p, k) == 0) {
                p++;
            }
            if (p == n) {
                return 0;
            }
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++) {
            for (size_t j = k + 1; j < n; j++) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RationalMatrix inverse(const RationalMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("inverse of non-square matrix");
    }
    size_t n = m.rows();
    RationalMatrix a(n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            a(i, j) = m(i, j);
        }
        a(i, n + i) = 1;
    }
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && a(p, c) == 0) {
            p++;
        }
        if (p == n) {
            throw std::invalid_argument("matrix is singular");
        }
        a.swap_rows(c, p);
        ExactRational piv = a(c, c);
        for (size_t j = 0; j < 2 * n; j++) {
            a(c, j) /= piv;
        }
        for (size_t i = 0; i < n; i++) {
            if (i != c && a(i, c) != 0) {
                a.add_row_multiple(i, c, ExactRational(-a(i, c)));
            }
        }
    }
    RationalMatrix out(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            out(i, j) = a(i, n + j);
        }
    }
    return out;
}

IntMatrix unimodular_inverse(const IntMatrix &m) {
    RationalMatrix q(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            q(i, j) = ExactRational(m(i, j));
        }
    }
    RationalMatrix inv = inverse(q);
    IntMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            if (inv(i, j).get_den() != 1) {
                throw std::invalid_argument("matrix is not unimodular");
            }
            out(i, j) = inv(i, j).get_num();
        }
    }
    return out;
}

IntMatrix left_kernel(const IntMatrix &m) {
    HermiteForm f = hnf(m);
    IntMatrix k(m.rows() - f.rank, m.rows());
    for (size_t i = f.rank; i < m.rows(); i++) {
        for (size_t j = 0; j < m.rows(); j++) {
            k(i - f.rank, j) = f.u(i, j);
        }
    }
    return k;
}

}  // namespace mixreg
