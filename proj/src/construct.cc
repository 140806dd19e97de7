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

#include "mixreg/construct.h"

#include <numeric>
#include <stdexcept>

#include "mixreg/errors.h"

namespace mixreg {

Resolution resolve_detailed(const Device &device, std::span<const PauliVec> gens) {
    require_device(gens, device);
    DecompositionResult dec = amalgamate(gram_schmidt(gens));
    std::vector<int64_t> extra = dec.invariant_factors();
    if (extra.empty()) {
        return {StabilizerCode(device, dec.isotropic), dec};
    }
    Device out_dev = device.extended(extra);
    size_t n = device.size();
    size_t m = out_dev.size();
    auto lift = [&](const PauliVec &p, size_t reg, int64_t xp, int64_t zp) {
        std::vector<int64_t> x(m), z(m);
        std::copy(p.x().begin(), p.x().end(), x.begin());
        std::copy(p.z().begin(), p.z().end(), z.begin());
        if (reg < m) {
            x[reg] = xp;
            z[reg] = zp;
        }
        return PauliVec(out_dev, std::move(x), std::move(z));
    };
    std::vector<PauliVec> out;
    for (const auto &w : dec.isotropic) {
        out.push_back(lift(w, m, 0, 0));
    }
    for (size_t i = 0; i < dec.pairs.size(); i++) {
        const auto &pair = dec.pairs[i];
        out.push_back(lift(pair.u, n + i, 1, 0));
        out.push_back(lift(pair.v, n + i, 0, pair.d - 1));
    }
    return {StabilizerCode(out_dev, std::move(out)), std::move(dec)};
}

StabilizerCode resolve(const Device &device, std::span<const PauliVec> gens) {
    return resolve_detailed(device, gens).code;
}

StabilizerCode resolve(std::span<const PauliVec> gens) {
    if (gens.empty()) {
        throw std::invalid_argument("resolve needs at least one generator to know the device");
    }
    return resolve(gens[0].device(), gens);
}

RationalMatrix alternating_commutator_matrix(std::span<const PauliVec> gens) {
    RationalMatrix m(gens.size(), gens.size());
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            m(i, j) = symp(gens[i], gens[j]);
            m(j, i) = -m(i, j);
        }
    }
    return m;
}

size_t resolution_lower_bound(std::span<const PauliVec> gens) {
    size_t rank = rational_rank(alternating_commutator_matrix(gens));
    if (rank % 2 != 0) {
        throw ConsistencyError("alternating commutator matrix has odd rank");
    }
    return rank / 2;
}

namespace {

int64_t require_uniform(const StabilizerCode &code) {
    int64_t q = code.uniform_modulus();
    if (q == 0) {
        throw std::invalid_argument("scan needs codes over a uniform modulus, got " + code.device().to_string());
    }
    return q;
}

}  // namespace

StabilizerCode scan_many(std::span<const StabilizerCode> codes, std::span<const std::vector<size_t>> maps) {
    if (codes.empty() || codes.size() != maps.size()) {
        throw std::invalid_argument("scan needs one register map per code");
    }
    std::vector<int64_t> q;
    for (const auto &c : codes) {
        q.push_back(require_uniform(c));
    }
    for (size_t a = 0; a < q.size(); a++) {
        for (size_t b = a + 1; b < q.size(); b++) {
            if (std::gcd(q[a], q[b]) != 1) {
                throw std::invalid_argument("scan needs pairwise coprime moduli, got " + std::to_string(q[a]) +
                                            " and " + std::to_string(q[b]));
            }
        }
    }

    size_t n = 0;
    for (size_t c = 0; c < codes.size(); c++) {
        const auto &map = maps[c];
        if (map.size() != codes[c].num_registers()) {
            throw std::invalid_argument("register map " + std::to_string(c + 1) + " has length " +
                                        std::to_string(map.size()) + " but the code has " +
                                        std::to_string(codes[c].num_registers()) + " registers");
        }
        for (size_t r : map) {
            n = std::max(n, r + 1);
        }
    }
    std::vector<int64_t> moduli(n, 1);
    for (size_t c = 0; c < codes.size(); c++) {
        std::vector<bool> seen(n);
        for (size_t r : maps[c]) {
            if (seen[r]) {
                throw std::invalid_argument("register map " + std::to_string(c + 1) + " is not injective");
            }
            seen[r] = true;
            moduli[r] *= q[c];
        }
    }
    for (size_t r = 0; r < n; r++) {
        if (moduli[r] == 1) {
            throw std::invalid_argument("register maps do not cover output register " + std::to_string(r + 1));
        }
    }

    Device dev(moduli);
    std::vector<PauliVec> out;
    for (size_t c = 0; c < codes.size(); c++) {
        for (const auto &g : codes[c].generators()) {
            std::vector<int64_t> x(n), z(n);
            for (size_t j = 0; j < maps[c].size(); j++) {
                size_t r = maps[c][j];
                // x goes through m = M/Q. z goes through m * (m^-1 mod Q), the CRT idempotent of
                // the Q part of Z_M. Then the pairing on this register equals the source pairing
                // mod 1, so commutation survives partial overlaps. The plain multiplier would scale
                // it by m, which breaks codes with some registers outside the overlap.
                int64_t mult = moduli[r] / q[c];
                int64_t zmult = mult * inverse_mod(Int(mult % q[c]), Int(q[c])).get_si();
                x[r] = g.x(j) * mult;
                z[r] = (g.z(j) * zmult) % moduli[r];
            }
            out.emplace_back(dev, std::move(x), std::move(z));
        }
    }
    return StabilizerCode(dev, std::move(out));
}

StabilizerCode scan(const StabilizerCode &code1, const StabilizerCode &code2, const ScanMap &map) {
    std::vector<StabilizerCode> codes{code1, code2};
    std::vector<std::vector<size_t>> maps{map.map1, map.map2};
    return scan_many(codes, maps);
}

StabilizerCode embed_scale(const StabilizerCode &code, int64_t L) {
    int64_t q = require_uniform(code);
    if (L < q || L % q != 0) {
        throw std::invalid_argument("target modulus " + std::to_string(L) + " is not a multiple of " +
                                    std::to_string(q));
    }
    int64_t mult = L / q;
    Device dev(std::vector<int64_t>(code.num_registers(), L));
    std::vector<PauliVec> out;
    for (const auto &g : code.generators()) {
        std::vector<int64_t> x(g.x().begin(), g.x().end()), z(g.z().begin(), g.z().end());
        for (size_t i = 0; i < x.size(); i++) {
            x[i] *= mult;
            z[i] *= mult;
        }
        out.emplace_back(dev, std::move(x), std::move(z));
    }
    return StabilizerCode(dev, std::move(out));
}

}  // namespace mixreg
