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

#include "test_util.h"

#include <deque>

namespace mixreg::testing {

std::mt19937_64 make_rng(uint64_t salt) {
    return std::mt19937_64(0x5eed5eedULL ^ (salt * 0x9e3779b97f4a7c15ULL));
}

Device random_device(std::mt19937_64 &rng, size_t max_n, const std::vector<int64_t> &choices) {
    size_t n = 1 + rng() % max_n;
    std::vector<int64_t> moduli(n);
    for (auto &q : moduli) {
        q = choices[rng() % choices.size()];
    }
    return Device(moduli);
}

PauliVec random_pauli(std::mt19937_64 &rng, const Device &device) {
    std::vector<int64_t> x(device.size()), z(device.size());
    for (size_t i = 0; i < device.size(); i++) {
        x[i] = static_cast<int64_t>(rng() % device.modulus(i));
        z[i] = static_cast<int64_t>(rng() % device.modulus(i));
    }
    return PauliVec(device, x, z);
}

std::vector<PauliVec> random_paulis(std::mt19937_64 &rng, const Device &device, size_t count) {
    std::vector<PauliVec> out;
    for (size_t k = 0; k < count; k++) {
        out.push_back(random_pauli(rng, device));
    }
    return out;
}

std::vector<PauliVec> random_commuting(std::mt19937_64 &rng, const Device &device, size_t count,
                                       size_t attempts) {
    std::vector<PauliVec> out;
    for (size_t a = 0; a < attempts && out.size() < count; a++) {
        PauliVec p = random_pauli(rng, device);
        // Sparse candidates commute far more often; mix them in.
        if (rng() % 2) {
            std::vector<int64_t> x(p.x().begin(), p.x().end()), z(p.z().begin(), p.z().end());
            for (size_t i = 0; i < device.size(); i++) {
                if (rng() % 2) {
                    x[i] = 0;
                }
                if (rng() % 2) {
                    z[i] = 0;
                }
            }
            p = PauliVec(device, x, z);
        }
        bool ok = !p.is_identity();
        for (const auto &q : out) {
            ok = ok && commutes(p, q);
        }
        if (ok) {
            out.push_back(p);
        }
    }
    return out;
}

PauliVec random_product(std::mt19937_64 &rng, std::span<const PauliVec> gens) {
    PauliVec acc = PauliVec::identity(gens[0].device());
    for (const auto &g : gens) {
        acc = compose(acc, power(g, static_cast<int64_t>(rng() % 64)));
    }
    return acc;
}

std::optional<std::set<PauliVec>> enumerate_group(const Device &device, std::span<const PauliVec> gens,
                                                  size_t limit) {
    std::set<PauliVec> seen{PauliVec::identity(device)};
    std::deque<PauliVec> queue{PauliVec::identity(device)};
    while (!queue.empty()) {
        PauliVec cur = queue.front();
        queue.pop_front();
        for (const auto &g : gens) {
            PauliVec next = compose(cur, g);
            if (seen.insert(next).second) {
                if (seen.size() > limit) {
                    return std::nullopt;
                }
                queue.push_back(next);
            }
        }
    }
    return seen;
}

std::optional<std::set<PauliVec>> enumerate_radical(const Device &device, std::span<const PauliVec> gens,
                                                    size_t limit) {
    auto group = enumerate_group(device, gens, limit);
    if (!group) {
        return std::nullopt;
    }
    std::set<PauliVec> out;
    for (const auto &p : *group) {
        bool ok = true;
        for (const auto &g : gens) {
            ok = ok && commutes(p, g);
        }
        if (ok) {
            out.insert(p);
        }
    }
    return out;
}

std::optional<size_t> brute_force_distance(const StabilizerCode &code, size_t max_group) {
    const Device &dev = code.device();
    Int full = 1;
    for (int64_t q : dev.moduli()) {
        full *= Int(q) * q;
    }
    if (full > Int(static_cast<unsigned long>(max_group))) {
        return std::nullopt;
    }
    auto stabilizers = enumerate_group(dev, code.generators(), max_group);
    size_t n = dev.size();
    std::vector<int64_t> x(n), z(n);
    std::optional<size_t> best;
    while (true) {
        size_t h = 2 * n;
        while (h > 0) {
            int64_t &v = h > n ? z[h - n - 1] : x[h - 1];
            if (++v < dev.modulus((h - 1) % n)) {
                break;
            }
            v = 0;
            h--;
        }
        if (h == 0) {
            break;
        }
        PauliVec p(dev, x, z);
        size_t w = weight(p);
        if (best && w >= *best) {
            continue;
        }
        bool ok = !stabilizers->count(p);
        for (const auto &g : code.generators()) {
            ok = ok && commutes(p, g);
        }
        if (ok) {
            best = w;
        }
    }
    return best;
}

std::string fixture_path(const std::string &name) {
    return std::string(MIXREG_FIXTURES) + "/" + name;
}

CodeFile load_fixture(const std::string &name) {
    return read_code_file(fixture_path(name));
}

size_t naive_rank(const RationalMatrix &m) {
    RationalMatrix a = m;
    size_t rank = 0;
    for (size_t c = 0; c < a.cols() && rank < a.rows(); c++) {
        size_t piv = rank;
        while (piv < a.rows() && a(piv, c) == 0) {
            piv++;
        }
        if (piv == a.rows()) {
            continue;
        }
        a.swap_rows(piv, rank);
        for (size_t r = 0; r < a.rows(); r++) {
            if (r != rank && a(r, c) != 0) {
                ExactRational f = a(r, c) / a(rank, c);
                for (size_t k = 0; k < a.cols(); k++) {
                    a(r, k) -= f * a(rank, k);
                }
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace mixreg::testing
