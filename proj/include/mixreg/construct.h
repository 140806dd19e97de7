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

#ifndef MIXREG_CONSTRUCT_H
#define MIXREG_CONSTRUCT_H

#include <vector>

#include "mixreg/code.h"
#include "mixreg/decompose.h"

namespace mixreg {

struct Resolution {
    StabilizerCode code;
    /// The amalgamated decomposition the code was built from.
    DecompositionResult decomposition;
};

/// Makes a non-commuting generator set commute by appending one register of modulus d_i per
/// hyperbolic pair: W -> W (x) I, U_i -> U_i (x) X on register i, V_i -> V_i (x) Z^{-1} on register i.
Resolution resolve_detailed(const Device &device, std::span<const PauliVec> gens);
StabilizerCode resolve(const Device &device, std::span<const PauliVec> gens);
/// Same, taking the device from the generators. `gens` must be non-empty.
StabilizerCode resolve(std::span<const PauliVec> gens);

/// The commutator matrix made exactly antisymmetric: symp(g_i, g_j) in [0, 1) above the diagonal,
/// its negation below. Its rational rank is always even.
RationalMatrix alternating_commutator_matrix(std::span<const PauliVec> gens);

/// rank(alternating commutator matrix) / 2: no extension of `gens` into a commuting set can use fewer extra
/// registers.
size_t resolution_lower_bound(std::span<const PauliVec> gens);

/// Register placement for joining two codes. Indices are 0-based positions in the output device.
/// A position hit by both maps is an overlap register.
struct ScanMap {
    std::vector<size_t> map1;
    std::vector<size_t> map2;
};

/// Joins codes over coprime uniform moduli Q1, Q2. Overlap registers get modulus M = Q1*Q2. An x
/// exponent placed there is multiplied by m = M / Q (Q the source modulus), a z exponent by
/// m * (m^-1 mod Q), so every pairing inside one code is unchanged and orders are preserved.
StabilizerCode scan(const StabilizerCode &code1, const StabilizerCode &code2, const ScanMap &map);

/// Generalization to any number of codes with pairwise coprime uniform moduli.
StabilizerCode scan_many(std::span<const StabilizerCode> codes, std::span<const std::vector<size_t>> maps);

/// Re-expresses a code over uniform modulus q on registers of modulus L (q | L) by scaling every
/// exponent by L / q.
StabilizerCode embed_scale(const StabilizerCode &code, int64_t L);

}  // namespace mixreg

#endif
