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

#ifndef MIXREG_ANALYSIS_H
#define MIXREG_ANALYSIS_H

#include <optional>
#include <vector>

#include "mixreg/code.h"
#include "mixreg/exactalg.h"
#include "mixreg/pauli.h"

namespace mixreg {

/// A finitely generated subgroup of the Pauli group mod phases, viewed as the integer lattice
/// spanned by the generators' exponent vectors together with the modulus relations Q_i e_i.
///
/// The lattice is put in Hermite form once, so membership queries are a single back-substitution.
class SubgroupLattice {
   public:
    SubgroupLattice(Device device, std::span<const PauliVec> gens);

    const Device &device() const {
        return device_;
    }
    size_t num_generators() const {
        return num_gens_;
    }

    /// |<gens>| = prod(Q_i^2) / [Z^2n : lattice].
    Int order() const;

    bool contains(const PauliVec &p) const;

    /// Integer exponents e with sum_j e_j * gens[j] = p, when p is in the subgroup.
    std::optional<std::vector<Int>> express(const PauliVec &p) const;

    /// Generators b_1..b_r with <gens> = <b_1> x ... x <b_r> and |b_1| | |b_2| | ... (all > 1).
    std::vector<PauliVec> invariant_basis() const;

   private:
    std::optional<std::vector<Int>> reduce(const PauliVec &p, bool want_coefficients) const;

    Device device_;
    size_t num_gens_;
    IntMatrix basis_;  // 2n x 2n Hermite basis of the lattice
    IntMatrix transform_;  // rows of basis_ as combinations of [gens; relations]
};

/// Exact order of <gens>; 1 for an empty list.
Int group_order(std::span<const PauliVec> gens);

/// Membership of p in <gens> (mod phases).
bool contains(std::span<const PauliVec> gens, const PauliVec &p);

/// Direct-product generating set of <gens> (see SubgroupLattice::invariant_basis).
std::vector<PauliVec> invariant_basis(const Device &device, std::span<const PauliVec> gens);

/// K = prod(Q_i) / |S|.
Int logical_count(const StabilizerCode &code);

/// Generating set (invariant basis) of {p : symp(p, g) = 0 for every generator g}.
std::vector<PauliVec> centralizer(const Device &device, std::span<const PauliVec> gens);
std::vector<PauliVec> centralizer(const StabilizerCode &code);

struct DistanceResult {
    size_t distance;
    PauliVec witness;
};

/// Minimum weight of a Pauli that commutes with every generator but is not a stabilizer,
/// searching weights 1..max_weight. Within a weight, supports are scanned in lexicographic
/// order and then exponents register by register, so the witness is the lexicographically
/// least one. Empty when nothing is found within the cap.
std::optional<DistanceResult> distance(const StabilizerCode &code, size_t max_weight);

/// Splits a code on a device whose registers fall into pairwise-coprime blocks (registers sharing
/// the same set of prime factors) into generators each supported on a single block. Generators
/// are (lcm / lcm_block) * g for each block and each original g, pruned greedily in that order.
/// Throws std::invalid_argument when the moduli do not form coprime blocks.
StabilizerCode split_coprime(const StabilizerCode &code);

/// Register blocks used by split_coprime, in order of first register. Throws std::invalid_argument
/// when two distinct prime supports overlap.
std::vector<std::vector<size_t>> coprime_blocks(const Device &device);

struct CodeParams {
    size_t n;
    Int group_order;
    Int K;
    std::optional<DistanceResult> distance;
};

CodeParams code_params(const StabilizerCode &code, std::optional<size_t> distance_cap);

}  // namespace mixreg

#endif
