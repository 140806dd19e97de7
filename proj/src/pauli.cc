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

#include "mixreg/pauli.h"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mixreg {

namespace {

int64_t reduce(int64_t v, int64_t q) {
    int64_t r = v % q;
    return r < 0 ? r + q : r;
}

// (a * b) mod q without overflow for word-sized moduli.
int64_t mul_mod(int64_t a, int64_t b, int64_t q) {
    return static_cast<int64_t>((static_cast<__int128>(reduce(a, q)) * reduce(b, q)) % q);
}

void require_same_device(const PauliVec &a, const PauliVec &b) {
    if (!(a.device() == b.device())) {
        throw std::invalid_argument("Pauli operators live on different devices: " + a.device().to_string() +
                                    " vs " + b.device().to_string());
    }
}

}  // namespace

Device::Device(std::vector<int64_t> moduli) {
    if (moduli.empty()) {
        throw std::invalid_argument("device needs at least one register");
    }
    for (int64_t q : moduli) {
        if (q < 2) {
            throw std::invalid_argument("register modulus must be a finite integer >= 2, got " + std::to_string(q));
        }
        lcm_ = std::lcm(lcm_, q);
    }
    moduli_ = std::make_shared<const std::vector<int64_t>>(std::move(moduli));
}

Int Device::dimension() const {
    Int d = 1;
    for (int64_t q : *moduli_) {
        d *= q;
    }
    return d;
}

Device Device::extended(std::span<const int64_t> extra) const {
    std::vector<int64_t> all(moduli_->begin(), moduli_->end());
    all.insert(all.end(), extra.begin(), extra.end());
    return Device(std::move(all));
}

std::string Device::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < moduli_->size(); i++) {
        out << (i ? "," : "") << (*moduli_)[i];
    }
    out << "]";
    return out.str();
}

PauliVec::PauliVec(Device device, std::vector<int64_t> x, std::vector<int64_t> z)
    : device_(std::move(device)), x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != device_.size() || z_.size() != device_.size()) {
        throw std::invalid_argument("exponent vector length does not match device");
    }
    for (size_t i = 0; i < x_.size(); i++) {
        int64_t q = device_.modulus(i);
        if (x_[i] < 0 || x_[i] >= q || z_[i] < 0 || z_[i] >= q) {
            throw std::out_of_range("exponent out of range on register " + std::to_string(i + 1));
        }
    }
}

PauliVec PauliVec::reduced(Device device, std::span<const int64_t> x, std::span<const int64_t> z) {
    if (x.size() != device.size() || z.size() != device.size()) {
        throw std::invalid_argument("exponent vector length does not match device");
    }
    std::vector<int64_t> rx(x.size()), rz(z.size());
    for (size_t i = 0; i < x.size(); i++) {
        rx[i] = reduce(x[i], device.modulus(i));
        rz[i] = reduce(z[i], device.modulus(i));
    }
    return PauliVec(std::move(device), std::move(rx), std::move(rz));
}

PauliVec PauliVec::identity(Device device) {
    size_t n = device.size();
    return PauliVec(std::move(device), std::vector<int64_t>(n), std::vector<int64_t>(n));
}

PauliVec PauliVec::single_x(Device device, size_t reg, int64_t power) {
    std::vector<int64_t> x(device.size()), z(device.size());
    x.at(reg) = power;
    return reduced(std::move(device), x, z);
}

PauliVec PauliVec::single_z(Device device, size_t reg, int64_t power) {
    std::vector<int64_t> x(device.size()), z(device.size());
    z.at(reg) = power;
    return reduced(std::move(device), x, z);
}

bool PauliVec::is_identity() const {
    for (size_t i = 0; i < x_.size(); i++) {
        if (x_[i] || z_[i]) {
            return false;
        }
    }
    return true;
}

std::vector<int64_t> PauliVec::phi() const {
    std::vector<int64_t> out(x_);
    out.insert(out.end(), z_.begin(), z_.end());
    return out;
}

std::string PauliVec::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < x_.size(); i++) {
        out << (i ? " " : "") << x_[i];
    }
    out << " /";
    for (int64_t v : z_) {
        out << " " << v;
    }
    return out.str();
}

bool PauliVec::operator<(const PauliVec &other) const {
    if (x_ != other.x_) {
        return x_ < other.x_;
    }
    return z_ < other.z_;
}

PauliVec compose(const PauliVec &a, const PauliVec &b) {
    require_same_device(a, b);
    size_t n = a.num_registers();
    std::vector<int64_t> x(n), z(n);
    for (size_t i = 0; i < n; i++) {
        int64_t q = a.device().modulus(i);
        x[i] = (a.x(i) + b.x(i)) % q;
        z[i] = (a.z(i) + b.z(i)) % q;
    }
    return PauliVec(a.device(), std::move(x), std::move(z));
}

PauliVec power(const PauliVec &p, int64_t k) {
    size_t n = p.num_registers();
    std::vector<int64_t> x(n), z(n);
    for (size_t i = 0; i < n; i++) {
        int64_t q = p.device().modulus(i);
        x[i] = mul_mod(p.x(i), k, q);
        z[i] = mul_mod(p.z(i), k, q);
    }
    return PauliVec(p.device(), std::move(x), std::move(z));
}

PauliVec inverse(const PauliVec &p) {
    return power(p, -1);
}

int64_t order(const PauliVec &p) {
    int64_t t = 1;
    for (size_t i = 0; i < p.num_registers(); i++) {
        int64_t q = p.device().modulus(i);
        int64_t g = std::gcd(q, std::gcd(p.x(i), p.z(i)));
        t = std::lcm(t, q / g);
    }
    return t;
}

ExactRational symp(const PauliVec &a, const PauliVec &b) {
    require_same_device(a, b);
    // Accumulate over the common denominator lcm(Q) to keep one integer sum.
    int64_t big = a.device().lcm();
    Int num = 0;
    for (size_t i = 0; i < a.num_registers(); i++) {
        int64_t q = a.device().modulus(i);
        int64_t term = a.x(i) * b.z(i) - b.x(i) * a.z(i);
        if (term) {
            num += Int(term) * (big / q);
        }
    }
    return mod1(ExactRational(num, Int(big)));
}

bool commutes(const PauliVec &a, const PauliVec &b) {
    return symp(a, b) == 0;
}

size_t weight(const PauliVec &p) {
    size_t w = 0;
    for (size_t i = 0; i < p.num_registers(); i++) {
        w += (p.x(i) || p.z(i)) ? 1 : 0;
    }
    return w;
}

CommutatorMatrix commutator_matrix(std::span<const PauliVec> gens) {
    CommutatorMatrix m(gens.size(), gens.size());
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = 0; j < gens.size(); j++) {
            if (i != j) {
                m(i, j) = symp(gens[i], gens[j]);
            }
        }
    }
    return m;
}

PauliVec pauli_from_row(const Device &device, std::span<const Int> phi) {
    size_t n = device.size();
    if (phi.size() != 2 * n) {
        throw std::invalid_argument("exponent vector length does not match device");
    }
    std::vector<int64_t> x(n), z(n);
    for (size_t i = 0; i < n; i++) {
        Int q = device.modulus(i);
        x[i] = floor_mod(phi[i], q).get_si();
        z[i] = floor_mod(phi[n + i], q).get_si();
    }
    return PauliVec(device, std::move(x), std::move(z));
}

void require_device(std::span<const PauliVec> ops, const Device &device) {
    for (const auto &p : ops) {
        if (!(p.device() == device)) {
            throw std::invalid_argument("operator " + p.to_string() + " is not on device " + device.to_string());
        }
    }
}

}  // namespace mixreg
