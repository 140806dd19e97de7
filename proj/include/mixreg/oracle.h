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

// Dense complex ground truth for small devices. Everything here is double precision and checked
// against a tolerance of 1e-9; the exact modules never depend on it.

#ifndef MIXREG_ORACLE_H
#define MIXREG_ORACLE_H

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mixreg/code.h"

namespace mixreg {

using Complex = std::complex<double>;

constexpr size_t kMaxOracleDim = 1024;
constexpr double kOracleTolerance = 1e-9;

/// Square complex matrix with dimension at most kMaxOracleDim.
class DenseOperator {
   public:
    /// Zero matrix. Throws CapacityError above the cap.
    explicit DenseOperator(size_t dim);
    explicit DenseOperator(Eigen::MatrixXcd m);
    static DenseOperator identity(size_t dim);

    size_t dim() const {
        return static_cast<size_t>(m_.rows());
    }
    const Eigen::MatrixXcd &matrix() const {
        return m_;
    }
    Eigen::MatrixXcd &matrix() {
        return m_;
    }
    Complex operator()(size_t r, size_t c) const {
        return m_(r, c);
    }

    /// Largest entrywise |a - b|.
    double max_abs_diff(const DenseOperator &other) const;

   private:
    Eigen::MatrixXcd m_;
};

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b);

struct StateVector {
    Eigen::VectorXcd amplitudes;

    size_t dim() const {
        return static_cast<size_t>(amplitudes.size());
    }
};

/// exp(2 pi i phase) * X^x Z^z with an exact phase in [0, 1). The phase is what the exact Pauli
/// group throws away; the oracle needs it to build projectors.
struct PhasedPauli {
    PauliVec op;
    ExactRational phase;
};

PhasedPauli multiply(const PhasedPauli &a, const PhasedPauli &b);
/// a^k for k >= 0.
PhasedPauli phased_power(const PhasedPauli &a, int64_t k);

/// A phase choice L(p) with L(p)^ord(p) = I that is coherent along cyclic subgroups:
/// L(p)^k = L(k p) for every k >= 0.
PhasedPauli coherent_lift(const PauliVec &p);

/// Basis index of |j_1 ... j_n>, register 1 most significant.
size_t basis_index(const Device &device, std::span<const int64_t> digits);
std::vector<int64_t> basis_digits(const Device &device, size_t index);

/// Tensor product of X^{x_i} Z^{z_i}, register 1 the most significant factor.
DenseOperator pauli_matrix(const PauliVec &p);
DenseOperator phased_matrix(const PhasedPauli &p);

/// Projector onto the joint +1 eigenspace, as the product of per-generator averages
/// (1/r) sum_j L(g)^j. Phases are chosen so the lifted group contains no nontrivial scalar,
/// which makes the result independent of the generating set.
DenseOperator projector(const StabilizerCode &code);

/// Rounded trace of the projector; throws ConsistencyError if the trace is not near an integer.
int64_t codespace_dim(const StabilizerCode &code);

/// Normalized projector column for the basis state with the given register values.
/// Throws ZeroProjection when that basis state is orthogonal to the codespace.
StateVector codeword(const StabilizerCode &code, std::span<const int64_t> seed_digits);

/// sum_j |j><j| (x) X_{Q2}^j on C^{Q1} (x) C^{Q2}. Q1 may be 1.
DenseOperator controlled_shift(int64_t q1, int64_t q2);

struct PauliTerm {
    Complex coefficient;
    PauliVec pauli;
};

/// Expansion of u P u^dagger in the unphased basis X^x Z^z, coefficient tr(B^dagger A) / dim.
/// Terms are listed in lexicographic (x, z) order; terms with |c| <= 1e-9 are dropped.
std::vector<PauliTerm> conjugate_decompose(const DenseOperator &u, const PauliVec &p);

/// max |u u^dagger - I|.
double unitarity_residual(const DenseOperator &u);
/// max |P P - P|.
double idempotence_residual(const DenseOperator &p);

}  // namespace mixreg

#endif
