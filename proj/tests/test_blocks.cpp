#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "spinbar/blocks.hpp"
#include "spinbar/serialize.hpp"

using namespace spinbar;

TEST_SUITE("blocks") {
  TEST_CASE("spin block members") {
    const auto members = spin_block_members({{}, 2, Group::stilde, 3});
    std::vector<CharLabel> expected;
    for (const auto& lambda : std::vector<Partition>{{6}, {5, 1}, {4, 2}, {3, 2, 1}}) {
      CHECK(oracle::bar_core(lambda.parts(), 3).empty());
      for (const auto& c : classify(lambda, Group::stilde, Flavor::spin)) expected.push_back(c);
    }
    CHECK(members == expected);
    CHECK(spin_block_members({{4, 1}, 0, Group::stilde, 3}).size() == 2);
    for (int p : {3, 5, 7})
      for (const auto& kappa : bar_cores_up_to(6, p))
        if (sign(kappa).is_plus()) CHECK(spin_block_members({kappa, 1, Group::stilde, p}).size() == static_cast<std::size_t>(p));
    CHECK_THROWS_AS(spin_block_members({{3}, 1, Group::stilde, 3}), std::invalid_argument);
  }

  TEST_CASE("cores") {
    CHECK(bar_cores_up_to(7, 3) == std::vector<BarPartition>{{}, {1}, {2}, {4, 1}, {5, 2}});
    for (const auto& k : selfconjugate_cores_up_to(12, 3)) {
      CHECK(is_self_conjugate(k));
      CHECK(oracle::ordinary_core(k.parts(), 3) == k.parts());
    }
  }

  TEST_CASE("psi") {
    const auto id = psi({{1}, 2, Group::stilde, 3}, {1});
    for (const auto& [a, b] : id.pairs) CHECK(a == b);
    // (1) has sign +1 and (5,2) sign -1: the reversed crossing.
    CHECK_THROWS_AS(psi({{1}, 1, Group::stilde, 3}, {5, 2}), std::invalid_argument);
    CHECK_NOTHROW(psi({{1}, 1, Group::stilde, 3}, {5, 2}, true));
    const auto cross = psi({{5, 2}, 1, Group::stilde, 3}, {1});
    CHECK(cross.target_group == Group::atilde);
    for (const auto& [a, b] : cross.pairs) {
      CHECK((a.variant == Variant::whole) == (b.variant == Variant::whole));
      CHECK(sign(a.partition) == -sign(b.partition));
    }
    const auto same = psi({{4, 1}, 2, Group::atilde, 3}, {5, 2});
    CHECK(same.target_group == Group::atilde);
    for (const auto& [a, b] : same.pairs) CHECK(a.variant == b.variant);
  }

  TEST_CASE("nonspin psi") {
    const auto id = nonspin_psi({3, 1, 1}, {3, 1, 1}, 2, 3);
    CHECK_FALSE(id.pairs.empty());
    for (const auto& [a, b] : id.pairs) CHECK(a == b);
    CHECK_THROWS_AS(nonspin_psi({2}, {}, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(nonspin_psi({2, 1}, {}, 1, 3), std::invalid_argument);
    const auto members = nonspin_block_members({{}, 1, 3});
    // {(3), (1,1,1)} is one orbit; (2,1) is fixed and splits.
    REQUIRE(members.size() == 3);
    CHECK(members[0].partition == Partition{3});
    CHECK(members[0].variant == Variant::whole);
    CHECK(members[1].partition == Partition{2, 1});
    CHECK(members[2].partition == Partition{2, 1});
  }

  TEST_CASE("verify examples") {
    VerifyOptions o;
    o.p = 3;
    o.bound = 20;
    CHECK(verify("little", o).passed());
    o.bound = 25;
    o.p = 5;
    CHECK(verify("lengths", o).passed());
    o.p = 3;
    o.bound = 7;
    o.max_w = 2;
    const auto fails = verify("crossing_fails", o);
    CHECK_FALSE(fails.passed());
    CHECK_THROWS_AS(verify("nope", o), std::invalid_argument);
    o.bound = 0;
    CHECK_THROWS_AS(verify("little", o), std::invalid_argument);
  }

  TEST_CASE("reports are deterministic across thread counts") {
    VerifyOptions o;
    o.p = 3;
    o.bound = 10;
    o.max_w = 3;
    o.threads = 1;
    const auto a = json(verify("crossing_fails", o)).dump();
    o.threads = 8;
    const auto b = json(verify("crossing_fails", o)).dump();
    CHECK(a == b);
  }
}
