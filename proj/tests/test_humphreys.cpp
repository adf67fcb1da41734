#include <doctest.h>

#include <stdexcept>

#include "spinbar/humphreys.hpp"
#include "spinbar/littlewood.hpp"

using namespace spinbar;

TEST_SUITE("humphreys") {
  TEST_CASE("classification on g and gplus") {
    CHECK(classify_g({}, {3}, Group::g).size() == 1);
    CHECK(classify_g({2}, {3}, Group::g).size() == 2);
    CHECK(classify_g({2}, {3}, Group::gplus).size() == 1);
    CHECK(classify_g({2}, {2, 1}, Group::g).size() == 1);
    std::vector<BarPartition> small;
    for (int n = 0; n <= 12; ++n)
      for (const auto& x : enumerate_strict(n)) small.push_back(x);
    for (const auto& mu : small)
      for (const auto& nu : small)
        CHECK((classify_g(mu, nu, Group::g).size() == 1) == (classify_g(mu, nu, Group::gplus).size() == 2));
  }

  TEST_CASE("weight one blocks") {
    for (int p : {3, 5, 7, 11}) {
      std::vector<BarPartition> expected;
      for (int k = 0; k <= (p - 1) / 2; ++k) expected.push_back(k ? BarPartition{p - k, k} : BarPartition{p});
      CHECK(cocores_of_weight(1, p) == expected);
      for (const auto& kappa : std::vector<BarPartition>{{}, {1}, {2}}) {
        if (!is_bar_core(kappa, p)) continue;
        const auto big = block_members({kappa, 1, Group::g, p}).size();
        const auto small = block_members({kappa, 1, Group::gplus, p}).size();
        if (sign(kappa).is_plus()) {
          CHECK(big == static_cast<std::size_t>(p));
          CHECK(small == static_cast<std::size_t>((p + 3) / 2));
        } else {
          CHECK(big == static_cast<std::size_t>((p + 3) / 2));
          CHECK(small == static_cast<std::size_t>(p));
        }
      }
    }
    CHECK_THROWS_AS(block_members({{3}, 1, Group::g, 3}), std::invalid_argument);
  }

  TEST_CASE("tau on twisted product labels") {
    const auto sigma3 = GaloisElement::sigma(3);
    // Both signs -1 at p = 3 picks up an extra -1.
    const GCharLabel both{{2}, {2, 1}, Group::gplus, Variant::plus};
    CHECK(tau_g(both, sigma3) == Sign::minus() * tau_partition({2}, sigma3) * tau_partition({2, 1}, sigma3));
    const GCharLabel mixed{{2}, {3}, Group::g, Variant::minus};
    CHECK(tau_g(mixed, sigma3) == tau_partition({2}, sigma3) * tau_partition({3}, sigma3));
    CHECK(tau_g(mixed, GaloisElement::identity(3)) == Sign::plus());
    CHECK(tau_g({{}, {3}, Group::g, Variant::whole}, sigma3) == Sign::plus());
  }

  TEST_CASE("phi") {
    const auto core = phi({4, 1}, 3, Group::stilde);
    REQUIRE(core.size() == 2);
    CHECK(core[0].second == GCharLabel{{4, 1}, {}, Group::g, Variant::plus});
    for (int p : {3, 5})
      for (int n = 0; n <= 16; ++n)
        for (const auto& lambda : enumerate_strict(n))
          for (Group group : {Group::stilde, Group::atilde})
            for (const auto& [x, z] : phi(lambda, p, group)) {
              CHECK(x.variant == z.variant);
              CHECK(phi_inverse(z, p) == x);
              for (int s = 1; s < p; ++s)
                for (int e = 0; e <= 1; ++e) CHECK(label_tau(x, {p, e, s}) == tau_g(z, {p, e, s}));
            }
    CHECK_THROWS_AS(phi({2}, 3, Group::g), std::invalid_argument);
  }

  TEST_CASE("valuations on g") {
    CHECK(g_degree_valuation({{1}, {}, Group::g, Variant::whole}, 3) == 0);
    CHECK(g_degree_valuation({{4, 1}, {}, Group::g, Variant::whole}, 3) == spin_degree_valuation({4, 1}, 3));
    for (int n = 0; n <= 20; ++n)
      for (const auto& lambda : enumerate_strict(n)) {
        const auto dec = bar_decompose(lambda, 5);
        if (dec.core.size() >= 5) continue;
        CHECK(spin_degree_valuation(lambda, 5) == g_degree_valuation({dec.core, dec.cocore}, 5));
      }
  }
}
