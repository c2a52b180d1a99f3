#include <catch2/catch_amalgamated.hpp>

#include "semidom/constructors.hpp"
#include "semidom/hcomm.hpp"

using namespace semidom;

TEST_CASE("monogenic semigroups") {
  Semigroup c31 = monogenic(3, 1);
  REQUIRE(c31.order() == 3);
  REQUIRE(c31.at(2, 0) == 2);  // a^3 a = a^3
  REQUIRE(c31.labels() == std::vector<std::string>{"a", "a^2", "a^3"});

  SECTION("index 1 gives cyclic groups") {
    for (std::size_t n : {1, 2, 3, 4, 6}) {
      Semigroup c = monogenic(1, n);
      REQUIRE(c.order() == n);
      REQUIRE(classify(c).is_group);
      REQUIRE(classify(c).is_commutative);
    }
  }

  SECTION("monogenic(2,1) has an idempotent top power") {
    Semigroup s = monogenic(2, 1);
    REQUIRE(s.order() == 2);
    REQUIRE(s.at(1, 1) == 1);  // a^2 a^2 = a^2 via a^2 = a^3
  }

  SECTION("defining relation and distinctness of low powers") {
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t r = 1; r <= 4; ++r) {
        Semigroup s = monogenic(m, r);
        REQUIRE(s.order() == m + r - 1);
        REQUIRE(power(s, 0, m) == power(s, 0, m + r));
        std::vector<element> seen;
        for (std::size_t k = 1; k <= m + r - 1; ++k) {
          element p = power(s, 0, k);
          REQUIRE(std::find(seen.begin(), seen.end(), p) == seen.end());
          seen.push_back(p);
        }
      }
    }
  }

  REQUIRE_THROWS_AS(monogenic(0, 1), IndexOutOfRange);
}

TEST_CASE("symmetric groups") {
  SECTION("composition is left-to-right") {
    Semigroup s3 = symmetric_group(3);
    // one-line lex order: 0=identity, 1=(2 3), 2=(1 2), 3=(1 2 3),
    // 4=(1 3 2), 5=(1 3)
    element t1 = 1, t2 = 5;
    REQUIRE(s3.at(t1, t2) == 4);  // t1 t2 = (1 3 2)
    REQUIRE(s3.at(t2, t1) == 3);  // t2 t1 = (1 2 3)
    REQUIRE(s3.at(t1, t2) != s3.at(t2, t1));
    REQUIRE(s3.labels()[1] == "132");
    REQUIRE(s3.labels()[5] == "321");
  }
  REQUIRE(symmetric_group(1).order() == 1);
  // the two-element group, with the identity at index 0
  REQUIRE(symmetric_group(2) == Semigroup(2, {0, 1, 1, 0}));
  REQUIRE(classify(symmetric_group(2)).is_group);
  REQUIRE(classify(symmetric_group(3)).is_group);
  REQUIRE_FALSE(classify(symmetric_group(3)).is_commutative);
  REQUIRE(symmetric_group(4).order() == 24);
  REQUIRE(classify(symmetric_group(4)).is_group);
  REQUIRE_THROWS_AS(symmetric_group(6), UnsupportedOrder);
  REQUIRE_THROWS_AS(symmetric_group(0), UnsupportedOrder);
}

TEST_CASE("direct products") {
  Semigroup triv(1, {0});
  Semigroup s3 = symmetric_group(3);
  REQUIRE(direct_product(triv, s3).table() == s3.table());

  Semigroup ex33 = fixture(Fixture::ex33_S);
  REQUIRE(direct_product(ex33, ex33).order() == 100);
  Semigroup u = fixture(Fixture::ex35_U);
  REQUIRE(direct_product(u, u).order() == 121);

  SECTION("identity exists iff both factors have one") {
    Semigroup c31 = monogenic(3, 1);
    REQUIRE(direct_product(s3, s3).identity().has_value());
    REQUIRE_FALSE(direct_product(s3, c31).identity().has_value());
    REQUIRE_FALSE(direct_product(c31, s3).identity().has_value());
  }

  SECTION("pair layout is i*|T|+j") {
    Semigroup p = direct_product(monogenic(2, 1), symmetric_group(2));
    // (a, g) * (a, g) = (a^2, e): indices (0,1)*(0,1) = (1,0) = 1*2+0
    REQUIRE(p.at(0 * 2 + 1, 0 * 2 + 1) == 1 * 2 + 0);
  }

  REQUIRE_THROWS_AS(direct_product(s3, s3, 10), OrderOverflow);
}

TEST_CASE("zero-direct unions") {
  Semigroup v = zero_direct_union(monogenic(3, 1), symmetric_group(3));
  REQUIRE(v.order() == 10);
  REQUIRE(v.zero() == element{9});
  REQUIRE(v.at(0, 4) == 9);  // cross products hit the new zero
  REQUIRE(v.at(4, 0) == 9);
  REQUIRE(v.at(3, 4) == 3 + symmetric_group(3).at(0, 1));

  Semigroup t = zero_direct_union(Semigroup(1, {0}), Semigroup(1, {0}));
  REQUIRE(t.order() == 3);
  REQUIRE(idempotents(t) == std::vector<element>{0, 1, 2});
  REQUIRE(t.zero() == element{2});

  SECTION("the union always has a zero") {
    for (auto& s : {monogenic(2, 2), symmetric_group(2)}) {
      for (auto& w : {monogenic(3, 1), symmetric_group(3)}) {
        REQUIRE(zero_direct_union(s, w).zero() ==
                element{static_cast<element>(s.order() + w.order())});
      }
    }
  }

  SECTION("unions of H-commutative factors are H-commutative") {
    std::vector<Semigroup> hc_pool{monogenic(3, 1), symmetric_group(3),
                                   monogenic(1, 2),
                                   adjoin_zero(Semigroup(1, {0}))};
    for (auto& s : hc_pool) {
      for (auto& w : hc_pool) {
        REQUIRE(is_h_commutative(zero_direct_union(s, w)).holds);
      }
    }
  }
}

TEST_CASE("fixtures") {
  REQUIRE(fixture(Fixture::ex33_S).order() == 10);
  REQUIRE(fixture(Fixture::ex35_U).order() == 11);
  REQUIRE(fixture(Fixture::ex35_T).order() == 121);
  REQUIRE(fixture(Fixture::ex36_etaclass).order() == 18);

  REQUIRE(fixture(Fixture::ex33_S) ==
          zero_direct_union(monogenic(3, 1), symmetric_group(3)));
  REQUIRE(fixture(Fixture::ex35_U) ==
          zero_direct_union(adjoin_identity(monogenic(3, 1)),
                            symmetric_group(3)));
  REQUIRE(fixture(Fixture::ex36_etaclass) ==
          direct_product(monogenic(3, 1), symmetric_group(3)));

  SECTION("the ten-element fixture is H-commutative, its square is not") {
    Semigroup s = fixture(Fixture::ex33_S);
    REQUIRE(is_h_commutative(s).holds);
    REQUIRE_FALSE(is_h_commutative(direct_product(s, s)).holds);
  }

  SECTION("names round-trip") {
    for (auto& [fx, name] : fixture_names()) {
      REQUIRE(fixture_from_name(name) == fx);
      REQUIRE(fixture_name(fx) == name);
    }
    REQUIRE_THROWS_AS(fixture_from_name("nope"), IndexOutOfRange);
  }
}
