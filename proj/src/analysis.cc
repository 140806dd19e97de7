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

#include "mixreg/analysis.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mixreg/errors.h"

namespace mixreg {

SubgroupLattice::SubgroupLattice(Device device, std::span<const PauliVec> gens)
    : device_(std::move(device)), num_gens_(gens.size()) {
    require_device(gens, device_);
    size_t n = device_.size();
    IntMatrix m(num_gens_ + 2 * n, 2 * n);
    for (size_t j = 0; j < num_gens_; j++) {
        for (size_t i = 0; i < n; i++) {
            m(j, i) = gens[j].x(i);
            m(j, n + i) = gens[j].z(i);
        }
    }
    for (size_t i = 0; i < n; i++) {
        m(num_gens_ + i, i) = device_.modulus(i);
        m(num_gens_ + n + i, n + i) = device_.modulus(i);
    }
    HermiteForm f = hnf(m);
    basis_ = IntMatrix(2 * n, 2 * n);
    transform_ = IntMatrix(2 * n, m.rows());
    for (size_t r = 0; r < 2 * n; r++) {
        for (size_t c = 0; c < 2 * n; c++) {
            basis_(r, c) = f.h(r, c);
        }
        for (size_t c = 0; c < m.rows(); c++) {
            transform_(r, c) = f.u(r, c);
        }
    }
}

Int SubgroupLattice::order() const {
    Int index = 1;
    for (size_t r = 0; r < basis_.rows(); r++) {
        index *= basis_(r, r);
    }
    Int full = 1;
    for (int64_t q : device_.moduli()) {
        full *= Int(q) * q;
    }
    return full / index;
}

std::optional<std::vector<Int>> SubgroupLattice::reduce(const PauliVec &p, bool want_coefficients) const {
    if (!(p.device() == device_)) {
        throw std::invalid_argument("operator is not on the subgroup's device");
    }
    size_t dim = basis_.rows();
    std::vector<Int> v(dim);
    std::vector<int64_t> phi = p.phi();
    for (size_t c = 0; c < dim; c++) {
        v[c] = phi[c];
    }
    std::vector<Int> y(dim);
    for (size_t r = 0; r < dim; r++) {
        if (v[r] == 0) {
            continue;
        }
        if (v[r] % basis_(r, r) != 0) {
            return std::nullopt;
        }
        y[r] = v[r] / basis_(r, r);
        for (size_t c = r; c < dim; c++) {
            v[c] -= y[r] * basis_(r, c);
        }
    }
    if (!want_coefficients) {
        return std::vector<Int>{};
    }
    std::vector<Int> e(num_gens_);
    for (size_t j = 0; j < num_gens_; j++) {
        for (size_t r = 0; r < dim; r++) {
            if (y[r] != 0) {
                e[j] += y[r] * transform_(r, j);
            }
        }
    }
    return e;
}

bool SubgroupLattice::contains(const PauliVec &p) const {
    return reduce(p, false).has_value();
}

std::optional<std::vector<Int>> SubgroupLattice::express(const PauliVec &p) const {
    return reduce(p, true);
}

std::vector<PauliVec> SubgroupLattice::invariant_basis() const {
    size_t n = device_.size();
    size_t dim = 2 * n;
    // The relation lattice diag(Q) is a sublattice of ours: diag(Q) = C * basis with C integral.
    RationalMatrix b(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            b(r, c) = ExactRational(basis_(r, c));
        }
    }
    RationalMatrix binv = inverse(b);
    IntMatrix c(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        Int q = device_.modulus(r % n);
        for (size_t k = 0; k < dim; k++) {
            ExactRational e = binv(r, k) * ExactRational(q);
            e.canonicalize();
            if (e.get_den() != 1) {
                throw ConsistencyError("relation lattice is not contained in the subgroup lattice");
            }
            c(r, k) = e.get_num();
        }
    }
    SmithForm s = snf(c);
    IntMatrix new_basis = unimodular_inverse(s.v) * basis_;
    std::vector<PauliVec> out;
    for (size_t r = 0; r < dim; r++) {
        if (s.s(r, r) > 1) {
            out.push_back(pauli_from_row(device_, new_basis.row(r)));
        }
    }
    return out;
}

Int group_order(std::span<const PauliVec> gens) {
    if (gens.empty()) {
        return 1;
    }
    return SubgroupLattice(gens[0].device(), gens).order();
}

bool contains(std::span<const PauliVec> gens, const PauliVec &p) {
    if (gens.empty()) {
        return p.is_identity();
    }
    return SubgroupLattice(p.device(), gens).contains(p);
}

std::vector<PauliVec> invariant_basis(const Device &device, std::span<const PauliVec> gens) {
    return SubgroupLattice(device, gens).invariant_basis();
}

Int logical_count(const StabilizerCode &code) {
    Int order = SubgroupLattice(code.device(), code.generators()).order();
    return code.device().dimension() / order;
}

std::vector<PauliVec> centralizer(const Device &device, std::span<const PauliVec> gens) {
    require_device(gens, device);
    size_t n = device.size();
    size_t k = gens.size();
    int64_t big = device.lcm();
    // Rows 0..2n-1: the pairing of each coordinate with every generator, scaled by lcm.
    // Rows 2n..: lcm * I, so the left kernel solves the pairing condition modulo lcm.
    IntMatrix m(2 * n + k, k);
    for (size_t j = 0; j < k; j++) {
        for (size_t i = 0; i < n; i++) {
            int64_t w = big / device.modulus(i);
            m(i, j) = Int(w) * gens[j].z(i);
            m(n + i, j) = -Int(w) * gens[j].x(i);
        }
        m(2 * n + j, j) = big;
    }
    IntMatrix kernel = left_kernel(m);
    std::vector<PauliVec> elems;
    for (size_t r = 0; r < kernel.rows(); r++) {
        elems.push_back(pauli_from_row(device, kernel.row(r).first(2 * n)));
    }
    return invariant_basis(device, elems);
}

std::vector<PauliVec> centralizer(const StabilizerCode &code) {
    return centralizer(code.device(), code.generators());
}

std::optional<DistanceResult> distance(const StabilizerCode &code, size_t max_weight) {
    const Device &dev = code.device();
    size_t n = dev.size();
    const auto &gens = code.generators();
    SubgroupLattice stabilizers(dev, gens);
    int64_t big = dev.lcm();

    std::vector<size_t> support;
    std::vector<int64_t> local;  // local[j] encodes (x, z) = (local / Q, local % Q) on support[j]
    auto commutes_with_all = [&]() {
        for (const auto &g : gens) {
            __int128 acc = 0;
            for (size_t j = 0; j < support.size(); j++) {
                size_t r = support[j];
                int64_t q = dev.modulus(r);
                int64_t x = local[j] / q, z = local[j] % q;
                acc += static_cast<__int128>(big / q) * (x * g.z(r) - g.x(r) * z);
            }
            if (acc % big != 0) {
                return false;
            }
        }
        return true;
    };
    auto current = [&]() {
        std::vector<int64_t> x(n), z(n);
        for (size_t j = 0; j < support.size(); j++) {
            int64_t q = dev.modulus(support[j]);
            x[support[j]] = local[j] / q;
            z[support[j]] = local[j] % q;
        }
        return PauliVec(dev, std::move(x), std::move(z));
    };

    for (size_t w = 1; w <= std::min(max_weight, n); w++) {
        support.resize(w);
        local.assign(w, 1);
        for (size_t j = 0; j < w; j++) {
            support[j] = j;
        }
        while (true) {
            // Odometer over non-identity local operators, first register most significant.
            std::fill(local.begin(), local.end(), 1);
            while (true) {
                if (commutes_with_all()) {
                    PauliVec p = current();
                    if (!stabilizers.contains(p)) {
                        return DistanceResult{w, std::move(p)};
                    }
                }
                size_t j = w;
                while (j > 0) {
                    int64_t q = dev.modulus(support[j - 1]);
                    if (++local[j - 1] < q * q) {
                        break;
                    }
                    local[j - 1] = 1;
                    j--;
                }
                if (j == 0) {
                    break;
                }
            }
            // Next support in lexicographic order.
            size_t j = w;
            while (j > 0 && support[j - 1] == n - w + (j - 1)) {
                j--;
            }
            if (j == 0) {
                break;
            }
            support[j - 1]++;
            for (size_t t = j; t < w; t++) {
                support[t] = support[t - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

namespace {

std::set<int64_t> prime_factors(int64_t q) {
    std::set<int64_t> out;
    for (int64_t p = 2; p * p <= q; p++) {
        while (q % p == 0) {
            out.insert(p);
            q /= p;
        }
    }
    if (q > 1) {
        out.insert(q);
    }
    return out;
}

}  // namespace

std::vector<std::vector<size_t>> coprime_blocks(const Device &device) {
    std::vector<std::set<int64_t>> supports;
    std::vector<std::vector<size_t>> blocks;
    for (size_t i = 0; i < device.size(); i++) {
        std::set<int64_t> primes = prime_factors(device.modulus(i));
        auto it = std::find(supports.begin(), supports.end(), primes);
        if (it != supports.end()) {
            blocks[it - supports.begin()].push_back(i);
            continue;
        }
        for (const auto &s : supports) {
            for (int64_t p : primes) {
                if (s.count(p)) {
                    throw std::invalid_argument("register moduli " + device.to_string() +
                                                " do not split into pairwise-coprime blocks");
                }
            }
        }
        supports.push_back(std::move(primes));
        blocks.push_back({i});
    }
    return blocks;
}

StabilizerCode split_coprime(const StabilizerCode &code) {
    const Device &dev = code.device();
    auto blocks = coprime_blocks(dev);
    int64_t big = dev.lcm();
    std::vector<PauliVec> kept;
    for (const auto &block : blocks) {
        int64_t block_lcm = 1;
        for (size_t r : block) {
            block_lcm = std::lcm(block_lcm, dev.modulus(r));
        }
        for (const auto &g : code.generators()) {
            PauliVec h = power(g, big / block_lcm);
            if (h.is_identity() || (!kept.empty() && contains(kept, h))) {
                continue;
            }
            kept.push_back(std::move(h));
        }
    }
    return StabilizerCode(dev, std::move(kept));
}

CodeParams code_params(const StabilizerCode &code, std::optional<size_t> distance_cap) {
    CodeParams p{code.num_registers(), SubgroupLattice(code.device(), code.generators()).order(), 0, std::nullopt};
    p.K = code.device().dimension() / p.group_order;
    if (distance_cap) {
        p.distance = distance(code, *distance_cap);
    }
    return p;
}

}  // namespace mixreg
