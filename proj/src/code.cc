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

#include "mixreg/code.h"

#include "mixreg/errors.h"

namespace mixreg {

bool all_commute(std::span<const PauliVec> gens) {
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (!commutes(gens[i], gens[j])) {
                return false;
            }
        }
    }
    return true;
}

StabilizerCode::StabilizerCode(Device device, std::vector<PauliVec> generators)
    : device_(std::move(device)), generators_(std::move(generators)) {
    require_device(generators_, device_);
    for (size_t i = 0; i < generators_.size(); i++) {
        for (size_t j = i + 1; j < generators_.size(); j++) {
            if (!commutes(generators_[i], generators_[j])) {
                throw InvalidCode("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " do not commute (symp = " + symp(generators_[i], generators_[j]).get_str() + ")");
            }
        }
    }
}

int64_t StabilizerCode::uniform_modulus() const {
    int64_t q = device_.modulus(0);
    for (int64_t m : device_.moduli()) {
        if (m != q) {
            return 0;
        }
    }
    return q;
}

}  // namespace mixreg
