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

#include "mixreg/oracle.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "mixreg/analysis.h"
#include "mixreg/errors.h"

namespace mixreg {

namespace {

size_t checked_dim(const Device &device) {
    Int d = device.dimension();
    if (d > Int(static_cast<unsigned long>(kMaxOracleDim))) {
        throw CapacityError("device " + device.to_string() + " has dimension " + d.get_str() + " > " +
                            std::to_string(kMaxOracleDim));
    }
    return d.get_ui();
}

Complex unit(double turns) {
    double a = 2 * std::numbers::pi * turns;
    return {std::cos(a), std::sin(a)};
}

// Action of a phased Pauli on basis states: |j> -> phase[j] |perm[j]>.
struct Monomial {
    std::vector<size_t> perm;
    std::vector<Complex> phase;
};

Monomial monomial(const PhasedPauli &p) {
    const Device &dev = p.op.device();
    size_t dim = checked_dim(dev);
    size_t n = dev.size();
    int64_t big = dev.lcm();
    double base = p.phase.get_d();
    Monomial m{std::vector<size_t>(dim), std::vector<Complex>(dim)};
    std::vector<int64_t> digits(n);
    for (size_t j = 0; j < dim; j++) {
        // Z^z |j> = w^{z j} |j>, then X^x shifts.
        int64_t num = 0;
        size_t target = 0;
        for (size_t h = 0; h < n; h++) {
            int64_t q = dev.modulus(h);
            num = (num + p.op.z(h) * digits[h] % q * (big / q)) % big;
            target = target * q + static_cast<size_t>((digits[h] + p.op.x(h)) % q);
        }
        m.perm[j] = target;
        m.phase[j] = unit(base + static_cast<double>(num) / static_cast<double>(big));
        for (size_t h = n; h-- > 0;) {
            if (++digits[h] < dev.modulus(h)) {
                break;
            }
            digits[h] = 0;
        }
    }
    return m;
}

// out += c * M * in, applied row-wise.
void accumulate(const Monomial &m, Complex c, const Eigen::MatrixXcd &in, Eigen::MatrixXcd &out) {
    for (size_t j = 0; j < m.perm.size(); j++) {
        out.row(m.perm[j]) += (c * m.phase[j]) * in.row(j);
    }
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

}  // namespace

DenseOperator::DenseOperator(size_t dim) {
    if (dim > kMaxOracleDim) {
        throw CapacityError("dimension " + std::to_string(dim) + " exceeds the oracle cap " +
                            std::to_string(kMaxOracleDim));
    }
    m_ = Eigen::MatrixXcd::Zero(dim, dim);
}

DenseOperator::DenseOperator(Eigen::MatrixXcd m) : DenseOperator(static_cast<size_t>(m.rows())) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("dense operator must be square");
    }
    m_ = std::move(m);
}

DenseOperator DenseOperator::identity(size_t dim) {
    DenseOperator out(dim);
    out.m_.setIdentity();
    return out;
}

double DenseOperator::max_abs_diff(const DenseOperator &other) const {
    if (dim() != other.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    if (dim() == 0) {
        return 0;
    }
    return (m_ - other.m_).cwiseAbs().maxCoeff();
}

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
    return DenseOperator(Eigen::MatrixXcd(a.matrix() * b.matrix()));
}

PhasedPauli multiply(const PhasedPauli &a, const PhasedPauli &b) {
    // X^a Z^a' X^b Z^b' = w^{a' b} X^{a+b} Z^{a'+b'} per register.
    const Device &dev = a.op.device();
    ExactRational extra = 0;
    for (size_t h = 0; h < dev.size(); h++) {
        if (a.op.z(h) && b.op.x(h)) {
            extra += ExactRational(Int(a.op.z(h)) * b.op.x(h), Int(dev.modulus(h)));
        }
    }
    return {compose(a.op, b.op), mod1(a.phase + b.phase + extra)};
}

PhasedPauli phased_power(const PhasedPauli &a, int64_t k) {
    if (k < 0) {
        throw std::invalid_argument("phased_power needs a non-negative exponent");
    }
    // (X^x Z^z)^k = w^{x z k (k-1) / 2} X^{k x} Z^{k z}.
    const Device &dev = a.op.device();
    Int tri = Int(k) * (k - 1) / 2;
    ExactRational phase = a.phase * ExactRational(k);
    for (size_t h = 0; h < dev.size(); h++) {
        if (a.op.x(h) && a.op.z(h)) {
            phase += ExactRational(tri * a.op.x(h) * a.op.z(h), Int(dev.modulus(h)));
        }
    }
    return {power(a.op, k), mod1(phase)};
}

PhasedPauli coherent_lift(const PauliVec &p) {
    int64_t r = order(p);
    if (r == 1) {
        return {p, 0};
    }
    auto primes = factor(r);
    if (primes.size() > 1) {
        // Lift each primary component separately; they commute and multiply back to p.
        PhasedPauli out{PauliVec::identity(p.device()), 0};
        for (auto [q, e] : primes) {
            int64_t pe = 1;
            for (int i = 0; i < e; i++) {
                pe *= q;
            }
            int64_t rest = r / pe;
            int64_t m = rest * inverse_mod(Int(rest % pe), Int(pe)).get_si();
            out = multiply(out, coherent_lift(power(p, m)));
        }
        return out;
    }

    // Cyclic of prime-power order: anchor the phase on a canonical generator of <p>, so every
    // generator of the same cyclic subgroup gets a consistent lift.
    int64_t q = primes[0].first;
    PauliVec g = p;
    int64_t kg = 1;
    for (int64_t k = 2; k < r; k++) {
        if (k % q == 0) {
            continue;
        }
        PauliVec c = power(p, k);
        if (c < g) {
            g = std::move(c);
            kg = k;
        }
    }
    PhasedPauli raw = phased_power(PhasedPauli{g, 0}, q);
    ExactRational target = raw.op.is_identity() ? ExactRational(0) : coherent_lift(raw.op).phase;
    ExactRational lambda = mod1(target - raw.phase) / ExactRational(q);
    int64_t back = inverse_mod(Int(kg), Int(r)).get_si();
    return phased_power(PhasedPauli{g, lambda}, back);
}

size_t basis_index(const Device &device, std::span<const int64_t> digits) {
    if (digits.size() != device.size()) {
        throw std::invalid_argument("basis state needs one value per register");
    }
    size_t idx = 0;
    for (size_t h = 0; h < device.size(); h++) {
        if (digits[h] < 0 || digits[h] >= device.modulus(h)) {
            throw std::out_of_range("basis value out of range on register " + std::to_string(h + 1));
        }
        idx = idx * device.modulus(h) + digits[h];
    }
    return idx;
}

std::vector<int64_t> basis_digits(const Device &device, size_t index) {
    std::vector<int64_t> out(device.size());
    for (size_t h = device.size(); h-- > 0;) {
        out[h] = static_cast<int64_t>(index % device.modulus(h));
        index /= device.modulus(h);
    }
    return out;
}

DenseOperator phased_matrix(const PhasedPauli &p) {
    Monomial m = monomial(p);
    DenseOperator out(m.perm.size());
    for (size_t j = 0; j < m.perm.size(); j++) {
        out.matrix()(m.perm[j], j) = m.phase[j];
    }
    return out;
}

DenseOperator pauli_matrix(const PauliVec &p) {
    return phased_matrix(PhasedPauli{p, 0});
}

DenseOperator projector(const StabilizerCode &code) {
    const Device &dev = code.device();
    size_t dim = checked_dim(dev);

    // Pick lifts generator by generator. When m g already lies in the span of the accepted
    // generators, L(g)^m must equal the lifted product there, otherwise the averaged product
    // collapses or depends on the generating set. Adjust L(g) by an m-th root of the mismatch.
    std::vector<PauliVec> accepted;
    std::vector<PhasedPauli> lifts;
    for (const auto &g : code.generators()) {
        if (g.is_identity()) {
            continue;
        }
        PhasedPauli lift = coherent_lift(g);
        int64_t r = order(g);
        int64_t m = r;
        std::optional<std::vector<Int>> coeffs;
        if (!accepted.empty()) {
            SubgroupLattice span(dev, accepted);
            for (int64_t t = 1; t < r; t++) {
                if (r % t != 0) {
                    continue;
                }
                coeffs = span.express(power(g, t));
                if (coeffs) {
                    m = t;
                    break;
                }
            }
        }
        if (m == 1) {
            continue;
        }
        if (m < r) {
            PhasedPauli target{PauliVec::identity(dev), 0};
            for (size_t j = 0; j < accepted.size(); j++) {
                int64_t oj = order(accepted[j]);
                int64_t e = floor_mod((*coeffs)[j], Int(oj)).get_si();
                target = multiply(target, phased_power(lifts[j], e));
            }
            PhasedPauli have = phased_power(lift, m);
            if (!(have.op == target.op)) {
                throw ConsistencyError("subgroup membership certificate does not reproduce the element");
            }
            if (have.phase != target.phase) {
                lift.phase = mod1(lift.phase + mod1(target.phase - have.phase) / ExactRational(m));
            }
        }
        accepted.push_back(g);
        lifts.push_back(std::move(lift));
    }

    Eigen::MatrixXcd pi = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &lift : lifts) {
        int64_t r = order(lift.op);
        Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(dim, dim);
        PhasedPauli cur{PauliVec::identity(dev), 0};
        for (int64_t k = 0; k < r; k++) {
            accumulate(monomial(cur), Complex(1.0 / static_cast<double>(r)), pi, next);
            cur = multiply(cur, lift);
        }
        if (!cur.op.is_identity() || cur.phase != 0) {
            throw ConsistencyError("lifted generator does not have order " + std::to_string(r));
        }
        pi = std::move(next);
    }
    return DenseOperator(std::move(pi));
}

int64_t codespace_dim(const StabilizerCode &code) {
    DenseOperator pi = projector(code);
    Complex tr = pi.matrix().trace();
    double rounded = std::round(tr.real());
    if (std::abs(tr.real() - rounded) > kOracleTolerance || std::abs(tr.imag()) > kOracleTolerance) {
        throw ConsistencyError("projector trace is not an integer");
    }
    return static_cast<int64_t>(rounded);
}

StateVector codeword(const StabilizerCode &code, std::span<const int64_t> seed_digits) {
    size_t idx = basis_index(code.device(), seed_digits);
    DenseOperator pi = projector(code);
    Eigen::VectorXcd v = pi.matrix().col(idx);
    double norm = v.norm();
    if (norm <= kOracleTolerance) {
        throw ZeroProjection("basis state is orthogonal to the codespace");
    }
    return StateVector{v / norm};
}

DenseOperator controlled_shift(int64_t q1, int64_t q2) {
    if (q1 < 1 || q2 < 1) {
        throw std::invalid_argument("register dimensions must be positive");
    }
    if (q1 * q2 > static_cast<int64_t>(kMaxOracleDim)) {
        throw CapacityError("controlled shift dimension exceeds the oracle cap");
    }
    DenseOperator out(static_cast<size_t>(q1 * q2));
    for (int64_t j = 0; j < q1; j++) {
        for (int64_t k = 0; k < q2; k++) {
            out.matrix()(j * q2 + (k + j) % q2, j * q2 + k) = 1;
        }
    }
    return out;
}

double unitarity_residual(const DenseOperator &u) {
    if (u.dim() == 0) {
        return 0;
    }
    Eigen::MatrixXcd r = u.matrix() * u.matrix().adjoint() - Eigen::MatrixXcd::Identity(u.dim(), u.dim());
    return r.cwiseAbs().maxCoeff();
}

double idempotence_residual(const DenseOperator &p) {
    if (p.dim() == 0) {
        return 0;
    }
    return (p.matrix() * p.matrix() - p.matrix()).cwiseAbs().maxCoeff();
}

std::vector<PauliTerm> conjugate_decompose(const DenseOperator &u, const PauliVec &p) {
    const Device &dev = p.device();
    size_t dim = checked_dim(dev);
    if (u.dim() != dim) {
        throw std::invalid_argument("operator dimension does not match the Pauli's device");
    }
    if (unitarity_residual(u) > kOracleTolerance) {
        throw std::invalid_argument("operator is not unitary");
    }
    Eigen::MatrixXcd a = u.matrix() * pauli_matrix(p).matrix() * u.matrix().adjoint();

    size_t n = dev.size();
    std::vector<PauliTerm> out;
    std::vector<int64_t> x(n), z(n);
    // Odometer over (x, z), last z register fastest.
    while (true) {
        PauliVec b(dev, x, z);
        Monomial m = monomial(PhasedPauli{b, 0});
        Complex c = 0;
        for (size_t j = 0; j < dim; j++) {
            c += std::conj(m.phase[j]) * a(m.perm[j], j);
        }
        c /= static_cast<double>(dim);
        if (std::abs(c) > kOracleTolerance) {
            out.push_back({c, std::move(b)});
        }
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
    }
    return out;
}

}  // namespace mixreg
