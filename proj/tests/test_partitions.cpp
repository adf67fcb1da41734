#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "oracles.hpp"
#include "spinbar/partition.hpp"

using namespace spinbar;

TEST_SUITE("partitions") {
  TEST_CASE("sign") {
    CHECK(sign(Partition{}) == Sign::plus());
    CHECK(sign(Partition{4, 3, 2, 1}) == Sign::plus());
    for (int p : {3, 5, 7, 11}) {
      CHECK(sign(Partition{p}) == Sign::plus());
      for (int k = 1; k <= (p - 1) / 2; ++k) CHECK(sign(Partition{p - k, k}) == Sign::minus());
    }
    CHECK(to_string(Sign::minus()) == "-1");
    CHECK(Sign::minus().pow(3) == Sign::minus());
    CHECK(Sign::minus().pow(-2) == Sign::plus());
  }

  TEST_CASE("sign is multiplicative in the defining exponent") {
    const auto parts = enumerate(8, PartitionKind::all);
    for (const auto& a : parts)
      for (const auto& b : enumerate(5, PartitionKind::all))
        CHECK(sign(a) * sign(b) == Sign::from_parity(a.size() + b.size() - a.length() - b.length()));
  }

  TEST_CASE("invariants are enforced") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(BarPartition({2, 2}), std::invalid_argument);
    CHECK_NOTHROW(Partition({2, 2}));
    CHECK(BarPartition{5, 3}.as_partition() == Partition{5, 3});
  }

  TEST_CASE("frobenius examples") {
    CHECK(from_frobenius({1, 2, 3}, {0, 2, 3}) == Partition{4, 4, 3, 3});
    CHECK(frobenius(Partition{4, 4, 3, 3}) == FrobeniusSymbol{{3, 2, 1}, {3, 2, 0}});
    CHECK(frobenius(Partition{}) == FrobeniusSymbol{});
    CHECK(frobenius(Partition{2, 1, 1}) == FrobeniusSymbol{{2}, {1}});
    CHECK(frobenius(Partition{3, 2}) == FrobeniusSymbol{{1, 0}, {2, 0}});
    CHECK_THROWS_AS(from_frobenius({1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(from_frobenius({1, 1}, {0, 2}), std::invalid_argument);
  }

  TEST_CASE("frobenius round trip and hook sum") {
    for (int n = 0; n <= 18; ++n)
      for_each_partition(n, PartitionKind::all, [&](const Partition& lambda) {
        CHECK(from_frobenius(frobenius(lambda)) == lambda);
        const auto hooks = diagonal_hooks(lambda);
        CHECK(std::accumulate(hooks.begin(), hooks.end(), 0) == n);
        CHECK(static_cast<int>(hooks.size()) == durfee(lambda));
      });
  }

  TEST_CASE("diagonal hooks") {
    CHECK(diagonal_hooks(Partition{2, 1}) == std::vector<int>{3});
    CHECK(diagonal_hooks(Partition{3, 2}) == std::vector<int>{4, 1});
    CHECK(durfee(Partition{}) == 0);
    for (const auto& lambda : enumerate(16, PartitionKind::self_conjugate)) {
      std::vector<int> expected;
      for (int a : frobenius(lambda).arms) expected.push_back(2 * a + 1);
      CHECK(diagonal_hooks(lambda) == expected);
    }
  }

  TEST_CASE("conjugate against column counts") {
    CHECK(conjugate(Partition{4, 4, 3, 3}) == Partition{4, 4, 4, 2});
    CHECK(is_self_conjugate(Partition{2, 1}));
    for (int n = 0; n <= 14; ++n)
      for (const auto& lambda : enumerate(n, PartitionKind::all)) {
        CHECK(conjugate(lambda).parts() == oracle::conjugate_by_columns(lambda.parts()));
        const auto f = frobenius(lambda);
        CHECK(is_self_conjugate(lambda) == (f.arms == f.legs));
      }
  }

  TEST_CASE("enumeration") {
    CHECK(enumerate(0, PartitionKind::strict) == std::vector<Partition>{Partition{}});
    CHECK(enumerate(6, PartitionKind::strict) ==
          std::vector<Partition>{{6}, {5, 1}, {4, 2}, {3, 2, 1}});
    std::vector<Partition> brute;
    for (const auto& lambda : oracle::all_partitions(4))
      if (oracle::conjugate_by_columns(lambda) == lambda) brute.emplace_back(lambda);
    CHECK(enumerate(4, PartitionKind::self_conjugate) == brute);
    CHECK(brute == std::vector<Partition>{{2, 2}});
    for (int n = 0; n <= 12; ++n) CHECK(enumerate(n, PartitionKind::all).size() == oracle::all_partitions(n).size());
  }

  TEST_CASE("strict count equals odd-part count") {
    for (int n = 0; n <= 40; ++n)
      CHECK(static_cast<long long>(enumerate_strict(n).size()) == oracle::odd_part_count(n));
  }

  TEST_CASE("text format") {
    CHECK(format(Partition{14, 12, 8}) == "14,12,8");
    CHECK(format(Partition{}) == "");
    CHECK(display(Partition{}) == "∅");
    CHECK(display(Partition{3, 2}) == "(3,2)");
    CHECK(parse_partition(" 4, 3,2 ,1") == Partition{4, 3, 2, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS_AS(parse_partition("4,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bar_partition("2,2"), std::invalid_argument);
  }

  TEST_CASE("valuations") {
    CHECK(valuation(72, 3) == 2);
    CHECK(factorial_valuation(6, 3) == 2);
    CHECK(factorial_valuation(25, 5) == 6);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(9));
  }
}
