// leechcoh - exact Leech cohomology of finite monoids and monoid sequences

#include <random>

#include "catch_amalgamated.hpp"
#include "leechcoh/monoid.hpp"
#include "support.hpp"

namespace leechcoh {

  namespace {
    // Tables equal after renaming one monoid's elements through perm.
    bool isomorphic_by(FinMonoid const&                  x,
                       FinMonoid const&                  y,
                       std::vector<element_index> const& perm) {
      for (size_t a = 0; a < x.size(); ++a) {
        for (size_t b = 0; b < x.size(); ++b) {
          if (perm[x.product(a, b)] != y.product(perm[a], perm[b])) {
            return false;
          }
        }
      }
      return perm[x.identity()] == y.identity();
    }
  }  // namespace

  TEST_CASE("cyclic_group", "[monoid]") {
    CHECK(cyclic_group(1).size() == 1);
    CHECK(cyclic_group(2).table() == CayleyTable{{0, 1}, {1, 0}});
    CHECK(cyclic_group(3).table() == CayleyTable{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK_THROWS_AS(cyclic_group(0), Error);
    for (size_t n = 1; n < 8; ++n) {
      auto const g = cyclic_group(n);
      CHECK(validate(g).empty());
      CHECK(g.idempotents() == std::vector<element_index>{0});
      CHECK(g.is_group());
      CHECK(g.is_commutative());
    }
  }

  TEST_CASE("validate reports identity failures", "[monoid]") {
    FinMonoid const bad({"e", "a"}, 0, {{0, 0}, {1, 1}});
    auto const      v = validate(bad);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().law == MonoidViolation::Law::left_identity);
    CHECK(v.front().a == 0);
    CHECK(v.front().b == 1);
    CHECK(v.front().describe(bad).find("(e, a)") != std::string::npos);
  }

  TEST_CASE("validate reports associativity failures", "[monoid]") {
    // aa = b, ab = a, ba = b, bb = a: (aa)a = b but a(aa) = a
    FinMonoid const bad({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 2, 1}, {2, 2, 1}});
    auto const      v = validate(bad);
    REQUIRE_FALSE(v.empty());
    for (auto const& x : v) {
      CHECK(x.law == MonoidViolation::Law::associativity);
      CHECK(bad.product(bad.product(x.a, x.b), x.c)
            != bad.product(x.a, bad.product(x.b, x.c)));
    }
  }

  TEST_CASE("left-zero semigroup with identity", "[monoid]") {
    FinMonoid const m = adjoin_identity({{0, 0}, {1, 1}}, {"l", "r"});
    CHECK(validate(m).empty());
    CHECK(m.name(0) == "e");
    // direct triple check
    for (size_t a = 0; a < 3; ++a) {
      for (size_t b = 0; b < 3; ++b) {
        for (size_t c = 0; c < 3; ++c) {
          CHECK(m.product(m.product(a, b), c) == m.product(a, m.product(b, c)));
        }
      }
    }
    CHECK_FALSE(m.is_commutative());
    CHECK(m.idempotents().size() == 3);
    CHECK_FALSE(m.is_group());
  }

  TEST_CASE("FinMonoid construction errors", "[monoid]") {
    CHECK_THROWS_AS(FinMonoid({}, 0, {}), Error);
    CHECK_THROWS_AS(FinMonoid({"e"}, 1, {{0}}), Error);
    CHECK_THROWS_AS(FinMonoid({"e", "e"}, 0, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(FinMonoid({"e", "a"}, 0, {{0, 1}, {1}}), Error);
    CHECK_THROWS_AS(FinMonoid({"e", "a"}, 0, {{0, 1}, {1, 2}}), Error);
  }

  TEST_CASE("union_monoid", "[monoid]") {
    SECTION("empty set only") {
      auto const m = union_monoid({{}});
      CHECK(m.size() == 1);
      CHECK(m.name(0) == "{}");
    }
    SECTION("two singletons") {
      auto const m = union_monoid({{"1"}, {"2"}});
      CHECK(m.names() == std::vector<std::string>{"{}", "{1}", "{2}", "{1,2}"});
      CHECK(m.product(1, 2) == 3);
    }
    SECTION("three overlapping pairs") {
      auto const m = union_monoid({{"1", "2"}, {"2", "3"}, {"1", "3"}});
      CHECK(m.names()
            == std::vector<std::string>{"{}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"});
      CHECK(m.product(1, 3) == 4);
      CHECK(m.product(2, 3) == 4);
    }
  }

  TEST_CASE("power_set_monoid", "[monoid]") {
    CHECK(power_set_monoid(0).size() == 1);
    CHECK(power_set_monoid(1).size() == 2);
    CHECK(power_set_monoid(3).size() == 8);
    auto const p = power_set_monoid(2);
    auto const u = union_monoid({{"1"}, {"2"}});
    CHECK(isomorphic_by(p, u, {0, 1, 2, 3}));
    CHECK(p.names() == std::vector<std::string>{"{}", "{0}", "{1}", "{0,1}"});
  }

  TEST_CASE("union and power set monoids are idempotent monoids",
            "[monoid][property]") {
    std::mt19937                        rng(99);
    std::uniform_int_distribution<int>  coin(0, 2);
    std::uniform_int_distribution<int>  count(1, 4);
    std::vector<FinMonoid>              ms;
    for (size_t n = 0; n <= 4; ++n) {
      ms.push_back(power_set_monoid(n));
    }
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::set<std::string>> family;
      for (int i = count(rng); i > 0; --i) {
        std::set<std::string> s;
        for (int p = 0; p < 4; ++p) {
          if (coin(rng) == 0) {
            s.insert(std::string(1, static_cast<char>('a' + p)));
          }
        }
        family.push_back(s);
      }
      ms.push_back(union_monoid(family));
    }
    for (auto const& m : ms) {
      CHECK(validate(m).empty());
      CHECK(m.is_commutative());
      CHECK(m.idempotents().size() == m.size());
      CHECK(m.name(m.identity()) == "{}");
    }
  }

  TEST_CASE("random monoids pass validation", "[monoid][property]") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      CHECK(validate(testing::random_monoid(rng, 5)).empty());
    }
  }

}  // namespace leechcoh
