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

#ifndef MIXREG_DECOMPOSE_H
#define MIXREG_DECOMPOSE_H

#include <vector>

#include "mixreg/pauli.h"

namespace mixreg {

/// Two operators with symp(u, v) = 1/d and trivial pairing with every other generator of the
/// decomposition.
struct HyperbolicPair {
    PauliVec u;
    PauliVec v;
    int64_t d;
};

/// Generating set W_1..W_l, (U_1, V_1), ..., (U_c, V_c) of a Pauli subgroup where the W's span the
/// radical and the pairs carry all of the non-commutativity. Pairs are listed with d_1 | d_2 | ...
struct DecompositionResult {
    std::vector<PauliVec> isotropic;
    std::vector<HyperbolicPair> pairs;

    /// W_1..W_l, U_1, V_1, ..., U_c, V_c.
    std::vector<PauliVec> generators() const;
    std::vector<int64_t> invariant_factors() const;
};

/// Minimal (direct-product) generating set of {W in <gens> : symp(W, g) = 0 for all g in gens}.
std::vector<PauliVec> radical(std::span<const PauliVec> gens);

/// Symplectic Gram-Schmidt over the quotient <gens> / radical.
///
/// Each step picks U of maximal order d in the quotient, a partner V with symp(U, V) = 1/d exactly,
/// and projects every remaining generator A onto the orthogonal complement via
/// A' = A - a_A U - b_A V with a_A = d symp(A, V), b_A = -d symp(A, U). The step repeats until
/// the remaining generators pair trivially with each other.
DecompositionResult gram_schmidt(std::span<const PauliVec> gens);

/// Merges hyperbolic pairs with coprime orders so the orders form a divisibility chain
/// (the invariant-factor form). Input that already forms a chain is returned unchanged.
DecompositionResult amalgamate(const DecompositionResult &r);

/// Sum_j coeffs[j] * gens[j] (composition with integer exponents). `gens` must be non-empty.
PauliVec combine(std::span<const PauliVec> gens, std::span<const Int> coeffs);

}  // namespace mixreg

#endif
