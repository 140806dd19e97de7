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

#include <gtest/gtest.h>

#include "mixreg/errors.h"
#include "mixreg/oracle.h"
#include "test_util.h"

using namespace mixreg;
namespace mt = mixreg::testing;

namespace {

const std::vector<int64_t> kSmallModuli{2, 3, 4, 5, 6};

PauliVec pv(const Device &d, std::vector<int64_t> x, std::vector<int64_t> z) {
    return PauliVec(d, std::move(x), std::move(z));
}

StabilizerCode example1() {
    Device d({2, 6, 3});
    return StabilizerCode(d, {pv(d, {1, 3, 0}, {0, 0, 0}), pv(d, {0, 2, 1}, {0, 0, 0})});
}

bool block_supported(const PauliVec &p, const std::vector<std::vector<size_t>> &blocks) {
    size_t touched = 0;
    for (const auto &b : blocks) {
        bool hit = false;
        for (size_t r : b) {
            hit = hit || p.x(r) || p.z(r);
        }
        touched += hit;
    }
    return touched == 1;
}

}  // namespace

TEST(analysis, group_order_examples) {
    auto code = example1();
    EXPECT_EQ(group_order(code.generators()), 6);
    Device d({6, 5});
    std::vector<PauliVec> id{PauliVec::identity(d)};
    EXPECT_EQ(group_order(id), 1);
    std::vector<PauliVec> mixed{pv(d, {3, 0}, {0, 3}), pv(d, {0, 1}, {1, 0})};
    EXPECT_EQ(group_order(mixed), 300);
    EXPECT_EQ(mt::enumerate_group(d, mixed)->size(), 300u);
}

TEST(analysis, group_order_matches_enumeration) {
    auto rng = mt::make_rng(21);
    int checked = 0;
    for (int t = 0; t < 300; t++) {
        Device d = mt::random_device(rng, 3, kSmallModuli);
        auto gens = mt::random_paulis(rng, d, 1 + rng() % 3);
        auto group = mt::enumerate_group(d, gens, 10000);
        if (!group) {
            continue;
        }
        checked++;
        SubgroupLattice lat(d, gens);
        ASSERT_EQ(lat.order(), Int(static_cast<unsigned long>(group->size())));
        // Membership agrees with enumeration on random probes, and certificates reproduce p.
        for (int k = 0; k < 10; k++) {
            PauliVec p = mt::random_pauli(rng, d);
            bool in = group->count(p) > 0;
            EXPECT_EQ(lat.contains(p), in);
            auto e = lat.express(p);
            EXPECT_EQ(e.has_value(), in);
            if (e) {
                PauliVec acc = PauliVec::identity(d);
                for (size_t j = 0; j < gens.size(); j++) {
                    acc = compose(acc, power(gens[j], floor_mod((*e)[j], Int(order(gens[j]))).get_si()));
                }
                EXPECT_EQ(acc, p);
            }
        }
        // The invariant basis generates the same group and its orders multiply to the group order.
        auto basis = lat.invariant_basis();
        Int prod = 1;
        for (const auto &b : basis) {
            prod *= order(b);
            EXPECT_TRUE(lat.contains(b));
        }
        EXPECT_EQ(prod, lat.order());
        EXPECT_EQ(group_order(basis.empty() ? std::vector<PauliVec>{PauliVec::identity(d)} : basis), lat.order());
    }
    EXPECT_GT(checked, 200);
}

TEST(analysis, contains_examples) {
    auto code = example1();
    const auto &g = code.generators();
    EXPECT_TRUE(contains(g, compose(g[0], g[1])));
    EXPECT_FALSE(contains(g, PauliVec::single_x(code.device(), 1)));
    EXPECT_TRUE(contains(g, PauliVec::identity(code.device())));
    std::vector<PauliVec> none;
    EXPECT_TRUE(contains(none, PauliVec::identity(code.device())));
    EXPECT_FALSE(contains(none, g[0]));
}

TEST(analysis, logical_count_examples) {
    EXPECT_EQ(logical_count(example1()), 6);
    EXPECT_EQ(logical_count(StabilizerCode(Device({2, 6, 3}))), 36);
    Device d({2, 2});
    EXPECT_EQ(logical_count(StabilizerCode(d, {pv(d, {1, 1}, {0, 0})})), 2);
}

TEST(analysis, logical_count_identity_random) {
    auto rng = mt::make_rng(22);
    for (int t = 0; t < 200; t++) {
        Device d = mt::random_device(rng, 4, kSmallModuli);
        StabilizerCode code(d, mt::random_commuting(rng, d, 1 + rng() % 4));
        Int k = logical_count(code);
        EXPECT_GE(k, 1);
        EXPECT_EQ(k * group_order(code.generators().empty() ? std::vector<PauliVec>{PauliVec::identity(d)}
                                                             : code.generators()),
                  d.dimension());
        if (d.dimension() <= 400) {
            EXPECT_EQ(Int(codespace_dim(code)), k);
        }
    }
}

TEST(analysis, centralizer_examples) {
    auto code = example1();
    auto c = centralizer(code);
    EXPECT_TRUE(contains(c, PauliVec::single_x(code.device(), 1)));
    Device q({2});
    StabilizerCode xq(q, {PauliVec::single_x(q, 0)});
    auto cx = centralizer(xq);
    EXPECT_EQ(group_order(cx), 2);
    EXPECT_TRUE(contains(cx, PauliVec::single_x(q, 0)));
    auto all = centralizer(StabilizerCode(q));
    EXPECT_EQ(group_order(all), 4);
}

TEST(analysis, centralizer_matches_enumeration) {
    auto rng = mt::make_rng(23);
    for (int t = 0; t < 100; t++) {
        Device d = mt::random_device(rng, 3, kSmallModuli);
        StabilizerCode code(d, mt::random_commuting(rng, d, 1 + rng() % 3));
        auto c = centralizer(code);
        for (const auto &p : c) {
            for (const auto &g : code.generators()) {
                EXPECT_TRUE(commutes(p, g));
            }
        }
        for (const auto &g : code.generators()) {
            EXPECT_TRUE(contains(c, g));
        }
        // Count commuting elements of the full group directly.
        std::vector<PauliVec> full;
        for (size_t i = 0; i < d.size(); i++) {
            full.push_back(PauliVec::single_x(d, i));
            full.push_back(PauliVec::single_z(d, i));
        }
        auto everything = mt::enumerate_group(d, full, 1000000);
        size_t count = 0;
        for (const auto &p : *everything) {
            bool ok = true;
            for (const auto &g : code.generators()) {
                ok = ok && commutes(p, g);
            }
            count += ok;
        }
        EXPECT_EQ(group_order(c), Int(static_cast<unsigned long>(count)));
    }
}

TEST(analysis, distance_examples) {
    auto d1 = distance(example1(), 3);
    ASSERT_TRUE(d1);
    EXPECT_EQ(d1->distance, 1u);

    Device d({2, 2});
    StabilizerCode bell(d, {pv(d, {1, 1}, {0, 0}), pv(d, {0, 0}, {1, 1})});
    EXPECT_FALSE(distance(bell, 2));

    StabilizerCode pair(d, {pv(d, {1, 1}, {0, 0})});
    auto dp = distance(pair, 2);
    ASSERT_TRUE(dp);
    EXPECT_EQ(dp->distance, 1u);

    auto f = mt::load_fixture("qubit_422.code");
    auto d422 = distance(f.code(), 3);
    ASSERT_TRUE(d422);
    EXPECT_EQ(d422->distance, 2u);

    auto f513 = mt::load_fixture("qubit_513.code");
    auto d513 = distance(f513.code(), 3);
    ASSERT_TRUE(d513);
    EXPECT_EQ(d513->distance, 3u);
}

TEST(analysis, distance_matches_brute_force) {
    auto rng = mt::make_rng(24);
    int checked = 0;
    for (int t = 0; t < 80; t++) {
        Device d = mt::random_device(rng, 4, {2, 3, 4});
        StabilizerCode code(d, mt::random_commuting(rng, d, 1 + rng() % 4));
        auto brute = mt::brute_force_distance(code, 100000);
        if (d.size() > 4) {
            continue;
        }
        auto got = distance(code, d.size());
        checked++;
        ASSERT_EQ(got.has_value(), brute.has_value()) << render_code_file(code);
        if (got) {
            EXPECT_EQ(got->distance, *brute);
            EXPECT_EQ(weight(got->witness), got->distance);
            EXPECT_FALSE(contains(code.generators(), got->witness));
            for (const auto &g : code.generators()) {
                EXPECT_TRUE(commutes(got->witness, g));
            }
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(analysis, split_coprime_examples) {
    Device d({2, 2, 3, 3});
    StabilizerCode code(d, {pv(d, {1, 1, 1, 1}, {0, 0, 0, 0})});
    StabilizerCode s = split_coprime(code);
    ASSERT_EQ(s.generators().size(), 2u);
    EXPECT_EQ(s.generators()[0], pv(d, {1, 1, 0, 0}, {0, 0, 0, 0}));
    EXPECT_EQ(s.generators()[1], pv(d, {0, 0, 2, 2}, {0, 0, 0, 0}));
    EXPECT_EQ(group_order(s.generators()), 6);
    EXPECT_TRUE(contains(s.generators(), code.generators()[0]));

    EXPECT_THROW(split_coprime(example1()), std::invalid_argument);

    StabilizerCode disjoint(d, {pv(d, {1, 1, 0, 0}, {0, 0, 0, 0}), pv(d, {0, 0, 0, 0}, {0, 0, 1, 2})});
    StabilizerCode ds = split_coprime(disjoint);
    EXPECT_EQ(group_order(ds.generators()), group_order(disjoint.generators()));
}

TEST(analysis, coprime_blocks) {
    EXPECT_EQ(coprime_blocks(Device({2, 4, 3, 9})), (std::vector<std::vector<size_t>>{{0, 1}, {2, 3}}));
    EXPECT_EQ(coprime_blocks(Device({6, 5, 6})), (std::vector<std::vector<size_t>>{{0, 2}, {1}}));
    EXPECT_THROW(coprime_blocks(Device({2, 6, 3})), std::invalid_argument);
}

TEST(analysis, split_coprime_random) {
    auto rng = mt::make_rng(25);
    for (int t = 0; t < 100; t++) {
        Device d({2, 2, 3, 3});
        StabilizerCode code(d, mt::random_commuting(rng, d, 1 + rng() % 4));
        StabilizerCode s = split_coprime(code);
        auto blocks = coprime_blocks(d);
        for (const auto &g : s.generators()) {
            EXPECT_TRUE(block_supported(g, blocks)) << g.to_string();
        }
        for (const auto &g : code.generators()) {
            EXPECT_TRUE(contains(s.generators(), g));
        }
        for (const auto &g : s.generators()) {
            EXPECT_TRUE(contains(code.generators(), g));
        }
    }
}

TEST(analysis, code_params) {
    CodeParams p = code_params(example1(), 3);
    EXPECT_EQ(p.n, 3u);
    EXPECT_EQ(p.group_order, 6);
    EXPECT_EQ(p.K, 6);
    ASSERT_TRUE(p.distance);
    EXPECT_EQ(p.distance->distance, 1u);
    EXPECT_FALSE(code_params(example1(), std::nullopt).distance);
}
