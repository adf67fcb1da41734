#include <doctest.h>

#include "spinbar/serialize.hpp"

using namespace spinbar;

TEST_SUITE("serialize") {
  TEST_CASE("partitions are plain arrays") {
    CHECK(json(BarPartition{5, 3, 1}).dump() == "[5,3,1]");
    CHECK(json(Partition{}).dump() == "[]");
    CHECK(json::parse("[3,1,1]").get<Partition>() == Partition{3, 1, 1});
    CHECK_THROWS(json::parse("[2,2]").get<BarPartition>());
  }

  TEST_CASE("round trips") {
    const BarPartition lambda{14, 12, 8, 6, 3, 2};
    const auto a = bar_abacus(lambda, 5);
    CHECK(json(a).get<BarAbacus>() == a);
    const auto tw = twist(a);
    CHECK(json(tw).get<TwistedBarAbacus>() == tw);
    const auto dec = bar_decompose({7, 3}, 3);
    CHECK(json(dec).get<BarLittlewood>() == dec);
    const auto od = ordinary_decompose({4, 2, 1}, 3);
    CHECK_FALSE(od.d.has_value());
    CHECK(json(od)["d"].is_null());
    CHECK(json(od).get<OrdinaryLittlewood>() == od);
    const auto sc = ordinary_decompose({3, 1, 1}, 3);
    CHECK(json(sc).get<OrdinaryLittlewood>() == sc);
    const GaloisElement f(7, 2, 3);
    CHECK(galois_from_json(json(f)) == f);
    const CharLabel c{{3, 2}, Group::atilde, Flavor::spin, Variant::minus};
    CHECK(json(c).get<CharLabel>() == c);
    const GCharLabel g{{2}, {2, 1}, Group::gplus, Variant::plus};
    CHECK(json(g).get<GCharLabel>() == g);
  }

  TEST_CASE("reports") {
    VerifyOptions o;
    o.p = 3;
    o.bound = 8;
    const auto r = verify("lengths", o);
    const auto back = json(r).get<VerificationReport>();
    CHECK(back.suite == "lengths");
    CHECK(back.cases == r.cases);
    CHECK(back.violations == r.violations);
    CHECK(json(back) == json(r));
  }
}
