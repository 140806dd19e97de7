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

#ifndef MIXREG_PAULI_H
#define MIXREG_PAULI_H

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mixreg/exactalg.h"

namespace mixreg {

/// Ordered list of finite register moduli Q_1..Q_n, every Q_i >= 2.
///
/// Copies share the underlying list, so passing devices around by value is cheap.
class Device {
   public:
    explicit Device(std::vector<int64_t> moduli);
    Device(std::initializer_list<int64_t> moduli) : Device(std::vector<int64_t>(moduli)) {
    }

    size_t size() const {
        return moduli_->size();
    }
    int64_t modulus(size_t i) const {
        return (*moduli_)[i];
    }
    std::span<const int64_t> moduli() const {
        return *moduli_;
    }
    /// lcm of all moduli.
    int64_t lcm() const {
        return lcm_;
    }
    /// Product of all moduli (the Hilbert-space dimension).
    Int dimension() const;

    /// Device with `extra` appended after the existing registers.
    Device extended(std::span<const int64_t> extra) const;

    bool operator==(const Device &other) const {
        return moduli_ == other.moduli_ || *moduli_ == *other.moduli_;
    }

    std::string to_string() const;

   private:
    std::shared_ptr<const std::vector<int64_t>> moduli_;
    int64_t lcm_ = 1;
};

/// A Pauli operator modulo phases, stored as its exponent vector: X powers `x` and Z powers `z`,
/// each entry reduced into [0, Q_i).
class PauliVec {
   public:
    /// Exponents must already be in range; throws std::out_of_range otherwise.
    PauliVec(Device device, std::vector<int64_t> x, std::vector<int64_t> z);

    /// Reduces arbitrary integer exponents into range.
    static PauliVec reduced(Device device, std::span<const int64_t> x, std::span<const int64_t> z);
    static PauliVec identity(Device device);
    /// X^power on one register, identity elsewhere.
    static PauliVec single_x(Device device, size_t reg, int64_t power = 1);
    /// Z^power on one register, identity elsewhere.
    static PauliVec single_z(Device device, size_t reg, int64_t power = 1);

    const Device &device() const {
        return device_;
    }
    size_t num_registers() const {
        return x_.size();
    }
    std::span<const int64_t> x() const {
        return x_;
    }
    std::span<const int64_t> z() const {
        return z_;
    }
    int64_t x(size_t i) const {
        return x_[i];
    }
    int64_t z(size_t i) const {
        return z_[i];
    }

    bool is_identity() const;

    /// Exponent vector (x_1..x_n, z_1..z_n).
    std::vector<int64_t> phi() const;

    /// `x1 ... xn / z1 ... zn`
    std::string to_string() const;

    bool operator==(const PauliVec &other) const {
        return device_ == other.device_ && x_ == other.x_ && z_ == other.z_;
    }
    /// Lexicographic on (x, z); devices are assumed equal.
    bool operator<(const PauliVec &other) const;

   private:
    Device device_;
    std::vector<int64_t> x_;
    std::vector<int64_t> z_;
};

PauliVec compose(const PauliVec &a, const PauliVec &b);
PauliVec power(const PauliVec &p, int64_t k);
PauliVec inverse(const PauliVec &p);

/// Smallest t >= 1 with p^t = identity.
int64_t order(const PauliVec &p);

/// Sum over registers of (x_a z_b - x_b z_a) / Q, reduced into [0, 1).
ExactRational symp(const PauliVec &a, const PauliVec &b);

bool commutes(const PauliVec &a, const PauliVec &b);

/// Number of registers carrying a non-identity factor.
size_t weight(const PauliVec &p);

using CommutatorMatrix = RationalMatrix;

/// Matrix of pairwise symp values, entries in [0, 1).
CommutatorMatrix commutator_matrix(std::span<const PauliVec> gens);

/// Builds a Pauli from an exponent vector (x_1..x_n, z_1..z_n) of arbitrary integers, reducing
/// each entry by its register modulus.
PauliVec pauli_from_row(const Device &device, std::span<const Int> phi);

/// Throws std::invalid_argument unless every operator lives on `device`.
void require_device(std::span<const PauliVec> ops, const Device &device);

}  // namespace mixreg

#endif
