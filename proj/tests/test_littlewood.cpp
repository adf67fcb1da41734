#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "spinbar/littlewood.hpp"

using namespace spinbar;

TEST_SUITE("littlewood") {
  TEST_CASE("cocore example at p=5") {
    const auto dec = bar_decompose({14, 12, 8, 6, 3, 2}, 5);
    CHECK(dec.core == BarPartition{});
    CHECK(dec.charvec == std::vector<int>{0, 0});
    CHECK(dec.quotient == std::vector<Partition>{{}, {2, 1, 1}, {3, 2}});
    CHECK(dec.weight == 9);
    CHECK(dec.cocore == BarPartition{14, 12, 8, 6, 3, 2});
    CHECK(dec.d == 0);
  }

  TEST_CASE("(4,3,2,1) at p=3") {
    const auto dec = bar_decompose({4, 3, 2, 1}, 3);
    CHECK(dec.core == BarPartition{1});
    CHECK(dec.charvec == std::vector<int>{1});
    CHECK(dec.quotient == std::vector<Partition>{{1}, {1, 1}});
    CHECK(dec.weight == 3);
    CHECK(dec.cocore == BarPartition{5, 3, 1});
    CHECK(dec.d == 0);
    CHECK(oracle::bar_core({4, 3, 2, 1}, 3) == std::vector<int>{1});
  }

  TEST_CASE("cores decompose trivially") {
    for (int t : {3, 5, 7})
      for (int n = 0; n <= 16; ++n)
        for (const auto& k : enumerate_strict(n)) {
          if (oracle::bar_core(k.parts(), t) != k.parts()) continue;
          const auto dec = bar_decompose(k, t);
          CHECK(dec.core == k);
          CHECK(dec.weight == 0);
          CHECK(dec.cocore.empty());
          CHECK(dec.d == 0);
          CHECK(core_from_charvec(dec.charvec, t) == k);
        }
  }

  TEST_CASE("core agrees with repeated bar removal") {
    for (int t : {3, 5, 7})
      for (int n = 0; n <= 22; ++n)
        for (const auto& lambda : enumerate_strict(n)) {
          const auto dec = bar_decompose(lambda, t);
          CHECK(dec.core.parts() == oracle::bar_core(lambda.parts(), t));
          CHECK(lambda.size() == dec.core.size() + t * dec.weight);
          CHECK(lambda.length() == dec.core.length() + dec.cocore.length() - 2 * dec.d);
          CHECK(sign(lambda) == sign(dec.core) * sign(dec.cocore));
        }
  }

  TEST_CASE("reconstruction") {
    CHECK(bar_reconstruct({}, {{}, {2, 1, 1}, {3, 2}}, 5) == BarPartition{14, 12, 8, 6, 3, 2});
    CHECK(bar_reconstruct({1}, {{1}, {2}}, 3) == BarPartition{7, 3});
    CHECK(bar_reconstruct({4, 1}, {{}, {}}, 3) == BarPartition{4, 1});
    CHECK_THROWS_AS(bar_reconstruct({3}, {{}, {}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(bar_reconstruct({}, {{}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(bar_reconstruct({}, {{1, 1}, {}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(bar_decompose({3}, 4), std::invalid_argument);
    for (int n = 0; n <= 20; ++n)
      for (const auto& lambda : enumerate_strict(n)) {
        const auto dec = bar_decompose(lambda, 5);
        CHECK(bar_reconstruct(dec.core, dec.quotient, 5) == lambda);
      }
  }

  TEST_CASE("cocores") {
    CHECK(bar_cocore({4, 3, 2, 1}, 3) == BarPartition{5, 3, 1});
    CHECK(bar_cocore({2, 1}, 3) == BarPartition{2, 1});
    CHECK(oracle::bar_core({2, 1}, 3).empty());
    for (int n = 0; n <= 18; ++n)
      for (const auto& lambda : enumerate_strict(n)) {
        const auto co = bar_cocore(lambda, 3);
        CHECK(bar_cocore(co, 3) == co);
        CHECK(oracle::bar_core(co.parts(), 3).empty());
        CHECK(bar_decompose(co, 3).quotient == bar_decompose(lambda, 3).quotient);
      }
  }

  TEST_CASE("paired parts") {
    const auto pairs = paired_parts({14, 12, 8, 6, 3, 2}, 5);
    CHECK(pairs == std::vector<std::pair<int, int>>{{6, 14}, {12, 8}, {2, 3}});
    CHECK(paired_parts({15, 5}, 5).empty());
    CHECK_THROWS_AS(paired_parts({4, 3, 2, 1}, 3), std::invalid_argument);
    for (int n = 0; n <= 20; ++n)
      for (const auto& lambda : enumerate_strict(n)) {
        if (!oracle::bar_core(lambda.parts(), 5).empty()) continue;
        for (auto [a, b] : paired_parts(lambda, 5)) CHECK((a + b) % 5 == 0);
      }
  }

  TEST_CASE("ordinary core agrees with hook removal") {
    for (int p : {3, 5})
      for (int n = 0; n <= 20; ++n)
        for_each_partition(n, PartitionKind::all, [&](const Partition& lambda) {
          const auto dec = ordinary_decompose(lambda, p);
          CHECK(dec.core.parts() == oracle::ordinary_core(lambda.parts(), p));
          CHECK(lambda.size() == dec.core.size() + p * dec.weight);
          CHECK(ordinary_reconstruct(dec.core, dec.quotient, p) == lambda);
          CHECK(oracle::ordinary_core(dec.cocore.parts(), p).empty());
          CHECK(dec.d.has_value() == is_self_conjugate(lambda));
        });
  }

  TEST_CASE("ordinary cores and self-conjugate symmetry") {
    const auto core = ordinary_decompose({3, 1, 1}, 3);
    CHECK(core.core == Partition{3, 1, 1});
    CHECK(core.weight == 0);
    CHECK(core.cocore.empty());
    CHECK(core.d == 0);
    for (int n = 0; n <= 24; ++n)
      for (const auto& lambda : enumerate(n, PartitionKind::self_conjugate)) {
        const auto dec = ordinary_decompose(lambda, 5);
        CHECK(is_self_conjugate(dec.core));
        CHECK(is_self_conjugate(dec.cocore));
        for (int j = 0; j < 5; ++j) CHECK(dec.quotient[j] == conjugate(dec.quotient[4 - j]));
        CHECK(durfee(lambda) == durfee(dec.core) + durfee(dec.cocore) - 2 * *dec.d);
      }
  }

  TEST_CASE("self-conjugate paired hooks") {
    CHECK_THROWS_AS(selfconjugate_paired_hooks({2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(selfconjugate_paired_hooks({3, 1, 1}, 3), std::invalid_argument);
    // (3,1,1) has one diagonal hook of length 5 on the middle runner at p = 5.
    CHECK(selfconjugate_paired_hooks({3, 1, 1}, 5) == std::vector<std::pair<int, int>>{{5, 5}});
    for (int p : {3, 5})
      for (int n = 0; n <= 24; ++n)
        for (const auto& lambda : enumerate(n, PartitionKind::self_conjugate)) {
          if (!oracle::ordinary_core(lambda.parts(), p).empty()) continue;
          for (auto [a, b] : selfconjugate_paired_hooks(lambda, p)) CHECK((a + b) % (2 * p) == 0);
        }
  }
}
