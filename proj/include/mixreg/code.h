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

#ifndef MIXREG_CODE_H
#define MIXREG_CODE_H

#include <vector>

#include "mixreg/pauli.h"

namespace mixreg {

/// A commuting set of generators on a device. Construction throws InvalidCode if any pair
/// of generators has a nonzero symplectic product.
class StabilizerCode {
   public:
    explicit StabilizerCode(Device device, std::vector<PauliVec> generators = {});

    const Device &device() const {
        return device_;
    }
    const std::vector<PauliVec> &generators() const {
        return generators_;
    }
    size_t num_registers() const {
        return device_.size();
    }

    /// The common modulus when every register has the same one, 0 otherwise.
    int64_t uniform_modulus() const;

   private:
    Device device_;
    std::vector<PauliVec> generators_;
};

/// True when every pair of operators has zero symplectic product.
bool all_commute(std::span<const PauliVec> gens);

}  // namespace mixreg

#endif
