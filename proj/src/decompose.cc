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

#include "mixreg/decompose.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "mixreg/analysis.h"
#include "mixreg/errors.h"

namespace mixreg {

namespace {

// L * symp(a, b), an integer in [0, L).
int64_t scaled_pairing(const PauliVec &a, const PauliVec &b, int64_t big) {
    ExactRational s = symp(a, b) * ExactRational(big);
    s.canonicalize();
    return s.get_num().get_si();
}

std::vector<std::pair<int64_t, int>> factor(int64_t v) {
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t p = 2; p * p <= v; p++) {
        int e = 0;
        while (v % p == 0) {
            v /= p;
            e++;
        }
        if (e) {
            out.push_back({p, e});
        }
    }
    if (v > 1) {
        out.push_back({v, 1});
    }
    return out;
}

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

int64_t mod_inverse(int64_t a, int64_t m) {
    return inverse_mod(Int(a), Int(m)).get_si();
}

// symp(u, w) = s/d with s a unit mod d; rescale w so the pairing is exactly 1/d.
PauliVec partner_from_pair(const PauliVec &u, const PauliVec &w, int64_t d, int64_t big) {
    int64_t s = scaled_pairing(u, w, big) / (big / d);
    return power(w, mod_inverse(s, d));
}

// Combine `work` so the numerators of symp(u, .) over d sum to 1.
PauliVec partner_from_span(const PauliVec &u, std::span<const PauliVec> work, int64_t d, int64_t big) {
    std::vector<Int> coeffs(work.size());
    Int g = d;
    for (size_t j = 0; j < work.size(); j++) {
        int64_t s = scaled_pairing(u, work[j], big);
        if (s % (big / d) != 0) {
            throw ConsistencyError("pairing denominator exceeds the chosen order");
        }
        Int num = s / (big / d);
        if (num == 0) {
            continue;
        }
        BezoutResult b = bezout(g, num);
        for (size_t t = 0; t < j; t++) {
            coeffs[t] *= b.x;
        }
        coeffs[j] = b.y;
        g = b.g;
    }
    if (g != 1) {
        throw ConsistencyError("pairing values of U do not generate 1/d");
    }
    return combine(work, coeffs);
}

bool is_chain(const std::vector<HyperbolicPair> &pairs) {
    for (size_t i = 1; i < pairs.size(); i++) {
        if (pairs[i].d % pairs[i - 1].d != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<PauliVec> DecompositionResult::generators() const {
    std::vector<PauliVec> out(isotropic);
    for (const auto &p : pairs) {
        out.push_back(p.u);
        out.push_back(p.v);
    }
    return out;
}

std::vector<int64_t> DecompositionResult::invariant_factors() const {
    std::vector<int64_t> out;
    for (const auto &p : pairs) {
        out.push_back(p.d);
    }
    return out;
}

PauliVec combine(std::span<const PauliVec> gens, std::span<const Int> coeffs) {
    if (gens.empty() || gens.size() != coeffs.size()) {
        throw std::invalid_argument("combine needs one coefficient per generator");
    }
    const Device &dev = gens[0].device();
    size_t n = dev.size();
    std::vector<Int> acc(2 * n);
    for (size_t j = 0; j < gens.size(); j++) {
        if (coeffs[j] == 0) {
            continue;
        }
        for (size_t i = 0; i < n; i++) {
            acc[i] += coeffs[j] * gens[j].x(i);
            acc[n + i] += coeffs[j] * gens[j].z(i);
        }
    }
    return pauli_from_row(dev, acc);
}

std::vector<PauliVec> radical(std::span<const PauliVec> gens) {
    if (gens.empty()) {
        return {};
    }
    const Device &dev = gens[0].device();
    require_device(gens, dev);
    size_t k = gens.size();
    int64_t big = dev.lcm();
    // c^T B = 0 mod L, solved as the left kernel of [B; L*I].
    IntMatrix m(2 * k, k);
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            m(i, j) = scaled_pairing(gens[i], gens[j], big);
        }
        m(k + i, i) = big;
    }
    IntMatrix kernel = left_kernel(m);
    std::vector<PauliVec> elems;
    for (size_t r = 0; r < kernel.rows(); r++) {
        PauliVec w = combine(gens, kernel.row(r).first(k));
        if (!w.is_identity()) {
            elems.push_back(std::move(w));
        }
    }
    if (elems.empty()) {
        return {};
    }
    return invariant_basis(dev, elems);
}

DecompositionResult gram_schmidt(std::span<const PauliVec> gens) {
    DecompositionResult result;
    if (gens.empty()) {
        return result;
    }
    const Device &dev = gens[0].device();
    require_device(gens, dev);
    int64_t big = dev.lcm();
    result.isotropic = radical(gens);

    std::vector<PauliVec> work(gens.begin(), gens.end());
    std::vector<HyperbolicPair> found;
    while (true) {
        // Drop anything already in the radical of the remaining set; it pairs to zero with all of it.
        size_t k = work.size();
        std::vector<std::vector<int64_t>> pm(k, std::vector<int64_t>(k));
        for (size_t i = 0; i < k; i++) {
            for (size_t j = 0; j < k; j++) {
                pm[i][j] = scaled_pairing(work[i], work[j], big);
            }
        }
        std::vector<PauliVec> kept;
        std::vector<size_t> kept_index;
        for (size_t i = 0; i < k; i++) {
            if (std::any_of(pm[i].begin(), pm[i].end(), [](int64_t v) { return v != 0; })) {
                kept.push_back(work[i]);
                kept_index.push_back(i);
            }
        }
        if (kept.empty()) {
            break;
        }
        work = std::move(kept);
        k = work.size();
        auto den = [&](size_t i, size_t j) {
            int64_t v = pm[kept_index[i]][kept_index[j]];
            return big / std::gcd(big, v);
        };

        // Order of each element in the quotient, and the exponent of the quotient.
        std::vector<int64_t> ord(k, 1);
        int64_t exponent = 1;
        for (size_t i = 0; i < k; i++) {
            for (size_t j = 0; j < k; j++) {
                ord[i] = std::lcm(ord[i], den(i, j));
            }
            exponent = std::lcm(exponent, ord[i]);
        }

        size_t bi = 0, bj = 0;
        int64_t best = 0;
        for (size_t i = 0; i < k; i++) {
            for (size_t j = i + 1; j < k; j++) {
                if (den(i, j) > best) {
                    best = den(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }

        PauliVec u = work[bi];
        int64_t d = exponent;
        if (best != exponent) {
            // No single pair reaches the exponent. Sum primary components of maximal p-order.
            u = PauliVec::identity(dev);
            for (auto [p, e] : factor(exponent)) {
                size_t pick = 0;
                int best_e = -1;
                for (size_t i = 0; i < k; i++) {
                    int v = 0;
                    for (int64_t t = ord[i]; t % p == 0; t /= p) {
                        v++;
                    }
                    if (v > best_e) {
                        best_e = v;
                        pick = i;
                    }
                }
                u = compose(u, power(work[pick], ord[pick] / ipow(p, e)));
            }
        }

        PauliVec v = best == exponent ? partner_from_pair(u, work[bj], d, big) : partner_from_span(u, work, d, big);
        if (symp(u, v) != ExactRational(1, d)) {
            throw ConsistencyError("hyperbolic partner does not pair to 1/d");
        }

        // A' = A - a U - b V with a = d symp(A, V), b = -d symp(A, U).
        std::vector<PauliVec> next;
        for (const auto &a : work) {
            int64_t ca = scaled_pairing(a, v, big) / (big / d);
            int64_t cb = scaled_pairing(a, u, big) / (big / d);
            PauliVec r = compose(a, power(u, -ca));
            r = compose(r, power(v, cb));
            if (!r.is_identity()) {
                next.push_back(std::move(r));
            }
        }
        found.push_back(HyperbolicPair{u, v, d});
        work = std::move(next);
        if (work.empty()) {
            break;
        }
    }
    std::reverse(found.begin(), found.end());
    result.pairs = std::move(found);
    return result;
}

DecompositionResult amalgamate(const DecompositionResult &r) {
    if (is_chain(r.pairs)) {
        return r;
    }
    // Primary components: for d = p^e r, (r U, t r V) pairs to 1/p^e when t = r^{-1} mod p^e.
    std::map<int64_t, std::vector<HyperbolicPair>> by_prime;
    for (const auto &pair : r.pairs) {
        for (auto [p, e] : factor(pair.d)) {
            int64_t pe = ipow(p, e);
            int64_t rest = pair.d / pe;
            int64_t t = pe == 1 ? 0 : mod_inverse(rest % pe, pe);
            by_prime[p].push_back(HyperbolicPair{power(pair.u, rest), power(pair.v, t * rest), pe});
        }
    }
    size_t count = 0;
    for (auto &[p, list] : by_prime) {
        std::stable_sort(list.begin(), list.end(),
                         [](const HyperbolicPair &a, const HyperbolicPair &b) { return a.d > b.d; });
        count = std::max(count, list.size());
    }

    DecompositionResult out;
    out.isotropic = r.isotropic;
    for (size_t j = 0; j < count; j++) {
        std::optional<HyperbolicPair> acc;
        for (const auto &[p, list] : by_prime) {
            if (j >= list.size()) {
                continue;
            }
            const HyperbolicPair &c = list[j];
            if (!acc) {
                acc = c;
                continue;
            }
            // x d2 + y d1 = 1 gives symp(U1 + U2, x V1 + y V2) = x/d1 + y/d2 = 1/(d1 d2).
            BezoutResult b = bezout(Int(c.d), Int(acc->d));
            PauliVec u = compose(acc->u, c.u);
            PauliVec v = compose(power(acc->v, floor_mod(b.x, Int(acc->d)).get_si()),
                                 power(c.v, floor_mod(b.y, Int(c.d)).get_si()));
            acc = HyperbolicPair{u, v, acc->d * c.d};
        }
        if (symp(acc->u, acc->v) != ExactRational(1, acc->d)) {
            throw ConsistencyError("merged pair does not pair to 1/d");
        }
        out.pairs.push_back(*acc);
    }
    std::reverse(out.pairs.begin(), out.pairs.end());
    return out;
}

}  // namespace mixreg
