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

#include <gtest/gtest.h>

#include "mixreg/code.h"
#include "mixreg/errors.h"
#include "test_util.h"

using namespace mixreg;
namespace mt = mixreg::testing;

namespace {

const std::vector<int64_t> kSmallModuli{2, 3, 4, 5, 6};

PauliVec pv(const Device &d, std::vector<int64_t> x, std::vector<int64_t> z) {
    return PauliVec(d, std::move(x), std::move(z));
}

}  // namespace

TEST(pauli, device_validation) {
    EXPECT_THROW(Device(std::vector<int64_t>{}), std::invalid_argument);
    EXPECT_THROW(Device({2, 1}), std::invalid_argument);
    EXPECT_THROW(Device({0}), std::invalid_argument);
    Device d({2, 6, 3});
    EXPECT_EQ(d.size(), 3u);
    EXPECT_EQ(d.lcm(), 6);
    EXPECT_EQ(d.dimension(), 36);
    EXPECT_EQ(d.to_string(), "[2,6,3]");
    std::vector<int64_t> extra{10};
    EXPECT_EQ(d.extended(extra), Device({2, 6, 3, 10}));
}

TEST(pauli, exponent_range_checked) {
    Device d({2, 3});
    EXPECT_THROW(pv(d, {2, 0}, {0, 0}), std::out_of_range);
    EXPECT_THROW(pv(d, {0, 0}, {0, -1}), std::out_of_range);
    EXPECT_THROW(pv(d, {0}, {0, 0}), std::invalid_argument);
    std::vector<int64_t> x{3, -1}, z{0, 7};
    EXPECT_EQ(PauliVec::reduced(d, x, z), pv(d, {1, 2}, {0, 1}));
}

TEST(pauli, compose_examples) {
    Device d({2, 6, 3});
    auto g1 = pv(d, {1, 3, 0}, {0, 0, 0});
    auto g2 = pv(d, {0, 2, 1}, {0, 0, 0});
    EXPECT_EQ(compose(g1, g2), pv(d, {1, 5, 1}, {0, 0, 0}));
    EXPECT_EQ(compose(g1, PauliVec::identity(d)), g1);
    Device q({2});
    EXPECT_TRUE(compose(PauliVec::single_x(q, 0), PauliVec::single_x(q, 0)).is_identity());
    EXPECT_THROW(compose(g1, PauliVec::identity(q)), std::invalid_argument);
}

TEST(pauli, power_examples) {
    Device d({6, 5});
    auto g2 = pv(d, {0, 1}, {1, 0});
    EXPECT_EQ(power(g2, 10), pv(d, {0, 0}, {4, 0}));
    PauliVec acc = PauliVec::identity(d);
    for (int k = 0; k < 10; k++) {
        acc = compose(acc, g2);
    }
    EXPECT_EQ(acc, power(g2, 10));
    EXPECT_TRUE(power(g2, 0).is_identity());
    EXPECT_EQ(power(g2, 1), g2);
    EXPECT_EQ(compose(power(g2, -1), g2), PauliVec::identity(d));
    EXPECT_EQ(inverse(g2), power(g2, 29));
}

TEST(pauli, order_examples) {
    Device d({6, 5});
    EXPECT_EQ(order(pv(d, {3, 0}, {0, 3})), 10);
    EXPECT_EQ(order(PauliVec::identity(d)), 1);
    EXPECT_EQ(order(pv(d, {0, 1}, {1, 0})), 30);
}

TEST(pauli, order_matches_iterated_compose) {
    auto rng = mt::make_rng(11);
    for (int t = 0; t < 300; t++) {
        Device d = mt::random_device(rng, 4, kSmallModuli);
        PauliVec p = mt::random_pauli(rng, d);
        int64_t r = order(p);
        EXPECT_EQ(d.lcm() % r, 0);
        PauliVec acc = p;
        int64_t t_first = 1;
        while (!acc.is_identity()) {
            acc = compose(acc, p);
            t_first++;
            ASSERT_LE(t_first, 60);
        }
        EXPECT_EQ(t_first, r) << p.to_string();
    }
}

TEST(pauli, symp_examples) {
    Device d({6, 5});
    auto a = pv(d, {3, 0}, {0, 3});
    auto b = pv(d, {0, 1}, {1, 0});
    EXPECT_EQ(symp(a, b), ExactRational(9, 10));
    EXPECT_EQ(symp(b, a), ExactRational(1, 10));
    EXPECT_EQ(symp(a, a), 0);
    EXPECT_FALSE(commutes(a, b));
    EXPECT_TRUE(commutes(a, PauliVec::identity(d)));

    Device e({2, 6, 3});
    auto g1 = pv(e, {1, 3, 0}, {0, 0, 0});
    auto g2 = pv(e, {0, 2, 1}, {0, 0, 0});
    EXPECT_EQ(symp(g1, g2), 0);
    EXPECT_TRUE(commutes(g1, g2));
}

TEST(pauli, symp_is_alternating_and_bilinear) {
    auto rng = mt::make_rng(12);
    for (int t = 0; t < 500; t++) {
        Device d = mt::random_device(rng, 4, kSmallModuli);
        auto a = mt::random_pauli(rng, d);
        auto b = mt::random_pauli(rng, d);
        auto c = mt::random_pauli(rng, d);
        EXPECT_EQ(mod1(symp(a, b) + symp(b, a)), 0);
        EXPECT_EQ(symp(compose(a, b), c), mod1(symp(a, c) + symp(b, c)));
        EXPECT_EQ(symp(a, a), 0);
        ExactRational s = symp(a, b);
        EXPECT_GE(s, 0);
        EXPECT_LT(s, 1);
        EXPECT_EQ(d.lcm() % s.get_den(), 0);
        int64_t k = static_cast<int64_t>(rng() % 20) - 10;
        EXPECT_EQ(symp(power(a, k), b), mod1(s * ExactRational(k)));
    }
}

TEST(pauli, commutator_matrix) {
    Device d({6, 5});
    std::vector<PauliVec> gens{pv(d, {3, 0}, {0, 3}), pv(d, {0, 1}, {1, 0})};
    CommutatorMatrix m = commutator_matrix(gens);
    EXPECT_EQ(m(0, 0), 0);
    EXPECT_EQ(m(0, 1), ExactRational(9, 10));
    EXPECT_EQ(m(1, 0), ExactRational(1, 10));
    EXPECT_EQ(m(1, 1), 0);

    std::vector<PauliVec> one{gens[0]};
    EXPECT_EQ(commutator_matrix(one), RationalMatrix(1, 1));

    auto rng = mt::make_rng(13);
    for (int t = 0; t < 100; t++) {
        Device e = mt::random_device(rng, 3, kSmallModuli);
        auto ps = mt::random_paulis(rng, e, 1 + rng() % 5);
        auto cm = commutator_matrix(ps);
        for (size_t i = 0; i < ps.size(); i++) {
            EXPECT_EQ(cm(i, i), 0);
            for (size_t j = 0; j < ps.size(); j++) {
                EXPECT_EQ(mod1(cm(i, j) + cm(j, i)), 0);
                EXPECT_EQ(e.lcm() % cm(i, j).get_den(), 0);
            }
        }
    }
}

TEST(pauli, weight_and_rendering) {
    Device d({2, 6, 3});
    EXPECT_EQ(weight(PauliVec::identity(d)), 0u);
    EXPECT_EQ(weight(PauliVec::single_x(d, 1)), 1u);
    EXPECT_EQ(weight(pv(d, {1, 3, 0}, {0, 0, 0})), 2u);
    EXPECT_EQ(pv(d, {1, 3, 0}, {0, 0, 2}).to_string(), "1 3 0 / 0 0 2");
}

TEST(pauli, stabilizer_code_rejects_noncommuting) {
    Device d({6, 5});
    std::vector<PauliVec> gens{pv(d, {3, 0}, {0, 3}), pv(d, {0, 1}, {1, 0})};
    EXPECT_THROW(StabilizerCode(d, gens), InvalidCode);
    EXPECT_FALSE(all_commute(gens));
    Device e({2, 6, 3});
    StabilizerCode ok(e, {pv(e, {1, 3, 0}, {0, 0, 0}), pv(e, {0, 2, 1}, {0, 0, 0})});
    EXPECT_EQ(ok.generators().size(), 2u);
    EXPECT_EQ(ok.uniform_modulus(), 0);
    EXPECT_EQ(StabilizerCode(Device({3, 3})).uniform_modulus(), 3);
    EXPECT_THROW(StabilizerCode(d, {PauliVec::identity(e)}), std::invalid_argument);
}
