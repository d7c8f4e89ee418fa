// leechcoh - exact Leech cohomology of finite monoids and monoid sequences

#include <random>

#include "catch_amalgamated.hpp"
#include "leechcoh/coeff.hpp"
#include "support.hpp"

namespace leechcoh {

  namespace {
    FgAbGroup const Z = FgAbGroup::free(1);

    std::vector<AbHom> negation(FinMonoid const& m, FgAbGroup const& g) {
      std::vector<AbHom> action;
      for (size_t a = 0; a < m.size(); ++a) {
        action.push_back(AbHom::scalar(CyclicSum(g), a % 2 == 0 ? 1 : -1));
      }
      return action;
    }
  }  // namespace

  TEST_CASE("constant systems validate", "[coeff]") {
    CHECK(validate_relations(constant_system(cyclic_group(2), Z)).empty());
    CHECK(validate_relations(constant_system(cyclic_group(1), FgAbGroup::cyclic(4)))
              .empty());
    CHECK(validate_relations(constant_system(power_set_monoid(2), FgAbGroup::cyclic(2)))
              .empty());
  }

  TEST_CASE("constant systems validate over random monoids", "[coeff][property]") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      auto const m = testing::random_monoid(rng, 5);
      for (auto const& g : testing::coefficient_groups()) {
        CHECK(validate_relations(constant_system(m, g)).empty());
      }
    }
  }

  TEST_CASE("negation action of Z/2 on Z", "[coeff]") {
    auto const z2 = cyclic_group(2);
    auto const c  = group_action_system(z2, Z, negation(z2, Z));
    CHECK(validate_relations(c).empty());
    // every triple by hand with the 1x1 matrices
    auto sign = [](size_t a) { return a == 0 ? 1 : -1; };
    for (size_t a = 0; a < 2; ++a) {
      for (size_t b = 0; b < 2; ++b) {
        for (size_t x = 0; x < 2; ++x) {
          CHECK(c.lstar(z2.product(a, b), x).matrix()(0, 0) == sign(a) * sign(b));
          CHECK(c.rstar(b, x).matrix()(0, 0) == 1);
        }
      }
    }
    // the trivial action is the constant system
    std::vector<AbHom> trivial(2, AbHom::identity(CyclicSum(Z)));
    CHECK(group_action_system(z2, Z, trivial) == constant_system(z2, Z));
  }

  TEST_CASE("negation of Z/3 on Z is not an action", "[coeff]") {
    auto const z3 = cyclic_group(3);
    std::vector<AbHom> action(3, AbHom::scalar(CyclicSum(Z), -1));
    action[0] = AbHom::identity(CyclicSum(Z));
    try {
      group_action_system(z3, Z, action);
      FAIL("expected ActionNotHomomorphic");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::action_not_homomorphic);
    }
  }

  TEST_CASE("group_action_system needs a group", "[coeff]") {
    auto const m = power_set_monoid(1);
    std::vector<AbHom> action(2, AbHom::identity(CyclicSum(Z)));
    try {
      group_action_system(m, Z, action);
      FAIL("expected NotAGroup");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::not_a_group);
    }
    CHECK(validate_relations(monoid_action_system(m, Z, action)).empty());
  }

  TEST_CASE("mixed relation violation is reported", "[coeff]") {
    // Over Z^2 let g act on the left by the swap and on the right by
    // diag(1, -1). Both are homomorphisms Z/2 -> Aut(Z^2) but they do not
    // commute, so only the mixed relation can fail.
    auto const      z2 = cyclic_group(2);
    FgAbGroup const z2z = FgAbGroup::free(2);
    CyclicSum const gens(z2z);
    AbHom const     id = AbHom::identity(gens);
    AbHom const     swap(gens, gens, IntMatrix{{0, 1}, {1, 0}});
    AbHom const     flip(gens, gens, IntMatrix{{1, 0}, {0, -1}});
    std::vector<AbHom> lstar{id, id, swap, swap};
    std::vector<AbHom> rstar{id, id, flip, flip};
    CoeffSystem const  c(z2, {z2z, z2z}, lstar, rstar);
    auto const         v = validate_relations(c);
    REQUIRE_FALSE(v.empty());
    for (auto const& w : v) {
      CHECK(w.relation == RelationViolation::Relation::mixed);
      // recompose by hand
      auto const lhs = compose(c.lstar(w.a, z2.product(w.x, w.b)), c.rstar(w.b, w.x));
      auto const rhs = compose(c.rstar(w.b, z2.product(w.a, w.x)), c.lstar(w.a, w.x));
      CHECK_FALSE(lhs == rhs);
    }
    CHECK(v.front().describe(z2).find("o rstar") != std::string::npos);
  }

  TEST_CASE("reported witnesses are genuine", "[coeff][property]") {
    // Random scalar maps on Z/4 over small monoids, most of which are not
    // coefficient systems.
    std::mt19937                       rng(3);
    std::uniform_int_distribution<int> scalar(0, 3);
    FgAbGroup const                    z4 = FgAbGroup::cyclic(4);
    CyclicSum const                    gens(z4);
    size_t                             broken = 0;
    for (int trial = 0; trial < 60; ++trial) {
      auto const   m = testing::random_monoid(rng, 4);
      size_t const n = m.size();
      std::vector<AbHom> lstar;
      std::vector<AbHom> rstar;
      for (size_t i = 0; i < n * n; ++i) {
        lstar.push_back(AbHom::scalar(gens, scalar(rng)));
        rstar.push_back(AbHom::scalar(gens, scalar(rng)));
      }
      CoeffSystem const c(m, std::vector<FgAbGroup>(n, z4), lstar, rstar);
      auto const        v = validate_relations(c);
      broken += v.empty() ? 0 : 1;
      using R = RelationViolation::Relation;
      for (auto const& w : v) {
        switch (w.relation) {
          case R::identity:
            CHECK((!(c.lstar(m.identity(), w.x) == AbHom::identity(gens))
                   || !(c.rstar(m.identity(), w.x) == AbHom::identity(gens))));
            break;
          case R::left_functor:
            CHECK_FALSE(c.lstar(m.product(w.a, w.b), w.x)
                        == compose(c.lstar(w.a, m.product(w.b, w.x)), c.lstar(w.b, w.x)));
            break;
          case R::right_functor:
            CHECK_FALSE(c.rstar(m.product(w.a, w.b), w.x)
                        == compose(c.rstar(w.b, m.product(w.x, w.a)), c.rstar(w.a, w.x)));
            break;
          case R::mixed:
            CHECK_FALSE(compose(c.lstar(w.a, m.product(w.x, w.b)), c.rstar(w.b, w.x))
                        == compose(c.rstar(w.b, m.product(w.a, w.x)), c.lstar(w.a, w.x)));
            break;
        }
      }
    }
    CHECK(broken > 0);
  }

  TEST_CASE("CoeffSystem shape errors", "[coeff]") {
    auto const z2 = cyclic_group(2);
    AbHom const id = AbHom::identity(CyclicSum(Z));
    CHECK_THROWS_AS(CoeffSystem(z2, {Z}, {id, id, id, id}, {id, id, id, id}), Error);
    CHECK_THROWS_AS(CoeffSystem(z2, {Z, Z}, {id, id, id}, {id, id, id, id}), Error);
    CHECK_THROWS_AS(CoeffSystem(z2, {Z, FgAbGroup::cyclic(2)},
                                {id, id, id, id}, {id, id, id, id}),
                    Error);
  }

}  // namespace leechcoh
