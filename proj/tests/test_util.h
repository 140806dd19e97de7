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

// Generators and brute-force reference implementations shared by the tests. Nothing here uses
// the lattice machinery, so it can serve as an independent check on it.

#ifndef MIXREG_TEST_UTIL_H
#define MIXREG_TEST_UTIL_H

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mixreg/cli.h"
#include "mixreg/code.h"

namespace mixreg::testing {

std::mt19937_64 make_rng(uint64_t salt = 0);

Device random_device(std::mt19937_64 &rng, size_t max_n, const std::vector<int64_t> &choices);
PauliVec random_pauli(std::mt19937_64 &rng, const Device &device);
std::vector<PauliVec> random_paulis(std::mt19937_64 &rng, const Device &device, size_t count);

/// Random commuting set built by rejection: candidates that fail to commute with the kept ones
/// are discarded. May return fewer than `count` operators.
std::vector<PauliVec> random_commuting(std::mt19937_64 &rng, const Device &device, size_t count,
                                       size_t attempts = 200);

/// Random element of <gens>: a random integer combination.
PauliVec random_product(std::mt19937_64 &rng, std::span<const PauliVec> gens);

/// Every element of <gens> found by breadth-first closure, or nullopt if more than `limit`.
std::optional<std::set<PauliVec>> enumerate_group(const Device &device, std::span<const PauliVec> gens,
                                                  size_t limit = 20000);

/// Elements of <gens> that commute with every generator, by enumeration.
std::optional<std::set<PauliVec>> enumerate_radical(const Device &device, std::span<const PauliVec> gens,
                                                    size_t limit = 20000);

/// Minimum weight of a non-stabilizer operator commuting with every generator, by enumerating the
/// whole Pauli group. nullopt when there is none or the device is too large.
std::optional<size_t> brute_force_distance(const StabilizerCode &code, size_t max_group = 200000);

CodeFile load_fixture(const std::string &name);
std::string fixture_path(const std::string &name);

/// Rational rank by plain fraction-field Gaussian elimination.
size_t naive_rank(const RationalMatrix &m);

}  // namespace mixreg::testing

#endif
