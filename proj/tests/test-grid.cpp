// leechcoh - exact Leech cohomology of finite monoids and monoid sequences

#include <random>

#include "catch_amalgamated.hpp"
#include "leechcoh/grid.hpp"
#include "support.hpp"

namespace leechcoh {

  namespace {
    FgAbGroup const Z = FgAbGroup::free(1);

    GridSpec grid(std::vector<CoeffSystem> floors, bool finite = true) {
      return GridSpec{std::move(floors), finite};
    }

    GridSpec three_floors() {
      return grid({constant_system(cyclic_group(2), Z),
                   constant_system(cyclic_group(3), Z),
                   constant_system(power_set_monoid(1), Z)});
    }

    bool is_prime(size_t n) {
      if (n < 2) {
        return false;
      }
      for (size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    template <typename F>
    ErrorKind kind_of(F&& f) {
      try {
        f();
      } catch (Error const& e) {
        return e.kind();
      }
      return ErrorKind::input;
    }

    std::vector<Couple> walked(PathCochain const& pc) {
      return pc.positions;
    }
  }  // namespace

  TEST_CASE("validate_path", "[grid]") {
    auto const g = three_floors();
    CHECK_NOTHROW(validate_path({"DRDR"}, g));
    CHECK_NOTHROW(validate_path({""}, g));
    CHECK(kind_of([&] { validate_path({"DDD"}, g); })
          == ErrorKind::descent_below_bottom_floor);
    auto two = grid({g.floors[0], g.floors[1]});
    CHECK(kind_of([&] { validate_path({"DDD"}, two); })
          == ErrorKind::descent_below_bottom_floor);
    two.finite = false;
    CHECK(kind_of([&] { validate_path({"DDD"}, two); })
          == ErrorKind::too_many_descents);
    CHECK(kind_of([&] { validate_path({"RXD"}, g); }) == ErrorKind::invalid_move);
  }

  TEST_CASE("DRDR visits the expected couples", "[grid]") {
    auto const pc = assemble_path_cochain(three_floors(), VerticalFamily::zero(),
                                          {"DRDR"}, 3);
    CHECK(walked(pc)
          == std::vector<Couple>{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {2, 3}, {2, 4}});
    CHECK(pc.moves.front() == Move::down);
    CHECK(pc.tail_reached);
  }

  TEST_CASE("the empty path stays on floor 0", "[grid]") {
    auto const pc = assemble_path_cochain(three_floors(), VerticalFamily::zero(), {""}, 2);
    CHECK(walked(pc) == std::vector<Couple>{{0, 0}, {0, 1}, {0, 2}, {0, 3}});
    CHECK(pc.floors.size() == 1);
  }

  TEST_CASE("path_from_rule", "[grid]") {
    std::vector<CoeffSystem> floors;
    for (size_t n = 1; n <= 5; ++n) {
      floors.push_back(constant_system(cyclic_group(n), Z));
    }
    auto const g = grid(floors);
    SECTION("prime columns") {
      auto const p = path_from_rule(is_prime, g, 10);
      CHECK(p.moves == "RRDRDRRDRRD");
      CHECK_NOTHROW(validate_path(p, g));
    }
    SECTION("primes above 30") {
      auto const p = path_from_rule([](size_t j) { return j > 30 && is_prime(j); }, g, 40);
      CHECK(p.moves == std::string(31, 'R') + "D" + std::string(6, 'R') + "D");
      CHECK(path_from_rule([](size_t j) { return j > 30 && is_prime(j); }, g, 10).moves
            == "");
    }
    SECTION("never") {
      CHECK(path_from_rule([](size_t) { return false; }, g, 10).moves.empty());
    }
    SECTION("always, clamped at the bottom floor") {
      auto const p = path_from_rule([](size_t) { return true; }, g, 10);
      CHECK(p.moves == "DRDRDRD");
    }
  }

  TEST_CASE("validate_eq23", "[grid]") {
    SECTION("zero family") {
      auto const g = three_floors();
      for (std::string m : {"", "D", "DD", "RDRD", "DRDR", "RRDD"}) {
        CHECK_FALSE(validate_eq23(g, VerticalFamily::zero(), {m}, 3));
      }
    }
    SECTION("single floor") {
      auto const g = grid({constant_system(cyclic_group(2), Z)});
      CHECK_FALSE(validate_eq23(g, VerticalFamily::explicit_maps({}), {""}, 4));
    }
    SECTION("nonzero mixed product") {
      // floor 0: Z/2 with Z, where d^1 is multiplication by 2
      // floor 1: Z/2 with Z/4, joined in degree 2 by Z -> Z/4, 1 -> 1
      FgAbGroup const z4 = FgAbGroup::cyclic(4);
      auto const      g  = grid({constant_system(cyclic_group(2), Z),
                                 constant_system(cyclic_group(2), z4)});
      auto const      f  = VerticalFamily::explicit_maps(
          {{{0, 2}, AbHom(CyclicSum(Z), CyclicSum(z4), IntMatrix{{1}})}});
      auto const v = validate_eq23(g, f, {"RRD"}, 3);
      REQUIRE(v);
      CHECK(v->index == 2);
      CHECK(v->position == Couple{0, 2});
      CHECK(v->before == Move::right);
      CHECK(v->after == Move::down);
      CHECK(v->product.matrix() == IntMatrix{{2}});
      CHECK(kind_of([&] { square_cohomology(g, f, {"RRD"}, 3); })
            == ErrorKind::path_condition);
      // the same family is harmless on a path that never uses it
      CHECK_FALSE(validate_eq23(g, f, {"D"}, 3));
    }
  }

  TEST_CASE("grid and family errors", "[grid]") {
    auto const c = constant_system(cyclic_group(2), Z);
    CHECK(kind_of([&] { validate_grid(grid({c, c})); }) == ErrorKind::duplicate_floor);
    CHECK(kind_of([&] { validate_grid(grid({})); }) == ErrorKind::invalid_argument);

    auto const g  = three_floors();
    AbHom const id = AbHom::identity(CyclicSum(Z));
    auto const col = VerticalFamily::explicit_maps({{{0, 0}, id}, {{1, 0}, id}});
    CHECK(kind_of([&] { check_column_condition(g, col); }) == ErrorKind::column_condition);
    auto const off = VerticalFamily::explicit_maps({{{2, 0}, id}});
    CHECK(kind_of([&] { check_column_condition(g, off); }) == ErrorKind::invalid_argument);
    auto const bad = VerticalFamily::explicit_maps(
        {{{0, 1}, AbHom::identity(CyclicSum(FgAbGroup::free(2)))}});
    CHECK(kind_of([&] { check_column_condition(g, bad); }) == ErrorKind::shape_mismatch);
  }

  TEST_CASE("square_cohomology examples", "[grid]") {
    SECTION("one floor reproduces Leech cohomology") {
      auto const c = constant_system(cyclic_group(2), Z);
      auto const h = square_cohomology(grid({c}), VerticalFamily::zero(), {""}, 4);
      REQUIRE(h.size() == 5);
      LeechComplex const cx(c, 5);
      for (size_t n = 0; n < 5; ++n) {
        CHECK(h[n].position == Couple{0, n});
        CHECK(h[n].group == cx.cohomology(n));
        CHECK(h[n].tag == Tag::floor_leech);
        CHECK_FALSE(h[n].extremal);
      }
    }
    SECTION("two floors, one descent") {
      auto const g = grid({constant_system(cyclic_group(2), Z),
                           constant_system(cyclic_group(3), Z)});
      auto const h = square_cohomology(g, VerticalFamily::zero(), {"D"}, 2);
      REQUIRE(h.size() == 4);
      CHECK(h[0].group == Z);
      CHECK(h[0].tag == Tag::full_cochain_group);
      CHECK(h[1].position == Couple{1, 0});
      CHECK(h[1].group == Z);
      CHECK(h[1].tag == Tag::kernel_group);
      CHECK(h[1].extremal);
      CHECK(h[2].group.is_trivial());
      CHECK(h[3].group == FgAbGroup::cyclic(3));
      CHECK(h[3].tag == Tag::floor_leech);
    }
    SECTION("DRDR tags") {
      auto const h = square_cohomology(three_floors(), VerticalFamily::zero(), {"DRDR"}, 3);
      std::vector<Tag> tags;
      for (auto const& s : h) {
        tags.push_back(s.tag);
      }
      CHECK(tags
            == std::vector<Tag>{Tag::full_cochain_group, Tag::kernel_group,
                                Tag::extremal, Tag::kernel_group, Tag::floor_leech,
                                Tag::floor_leech});
    }
    SECTION("DD prefix") {
      auto const h = square_cohomology(three_floors(), VerticalFamily::zero(), {"DD"}, 1);
      REQUIRE(h.size() == 4);
      CHECK(h[0].tag == Tag::full_cochain_group);
      CHECK(h[1].tag == Tag::full_cochain_group);
      CHECK(h[2].tag == Tag::kernel_group);
    }
    SECTION("explicit family: reduction mod 2 in degree 1") {
      FgAbGroup const z2 = FgAbGroup::cyclic(2);
      auto const      g  = grid({constant_system(cyclic_group(2), Z),
                                 constant_system(cyclic_group(2), z2)});
      auto const      f  = VerticalFamily::explicit_maps(
          {{{0, 1}, AbHom(CyclicSum(Z), CyclicSum(z2), IntMatrix{{1}})}});
      auto const h = square_cohomology(g, f, {"RD"}, 2);
      REQUIRE(h.size() == 4);
      CHECK(h[0].group == Z);
      CHECK(h[0].tag == Tag::floor_leech);
      CHECK(h[1].group == Z);
      CHECK(h[1].tag == Tag::extremal);
      CHECK(h[2].group.is_trivial());
      CHECK(h[2].tag == Tag::extremal);
      CHECK(h[3].group == z2);
      CHECK(h[3].tag == Tag::floor_leech);
    }
    SECTION("explicit family: vertical on both sides") {
      FgAbGroup const z4 = FgAbGroup::cyclic(4);
      CyclicSum const c4(z4);
      AbHom const     two(c4, c4, IntMatrix{{2}});
      auto const      g = grid({constant_system(cyclic_group(1), z4),
                                constant_system(cyclic_group(2), z4),
                                constant_system(cyclic_group(3), z4)});
      auto const      f = VerticalFamily::explicit_maps({{{0, 0}, two}, {{1, 0}, two}});
      auto const      h = square_cohomology(g, f, {"DD"}, 0);
      REQUIRE(h.size() == 3);
      CHECK(h[0].tag == Tag::column);
      CHECK(h[0].group == FgAbGroup::cyclic(2));
      CHECK(h[1].tag == Tag::column);
      CHECK(h[1].group.is_trivial());
      CHECK(h[2].tag == Tag::extremal);
    }
  }

  TEST_CASE("trivial groups match their descriptions", "[grid][property]") {
    std::mt19937                          rng(77);
    std::uniform_int_distribution<size_t> nfloors(1, 3);
    std::uniform_int_distribution<size_t> pmax(0, 3);
    std::uniform_int_distribution<int>    coin(0, 2);
    auto const                            groups = testing::coefficient_groups();
    std::uniform_int_distribution<size_t> pick(0, groups.size() - 1);
    size_t                                checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<CoeffSystem> floors;
      for (size_t n = nfloors(rng); n > 0; --n) {
        floors.push_back(constant_system(testing::random_monoid(rng, 3), groups[pick(rng)]));
      }
      GridSpec const g = grid(floors, trial % 2 == 0);
      if (kind_of([&] { validate_grid(g); }) == ErrorKind::duplicate_floor) {
        continue;
      }
      size_t const p = pmax(rng);
      std::string  moves;
      for (size_t d = 0; d + 1 < floors.size(); ++d) {
        moves += std::string(static_cast<size_t>(coin(rng)), 'R') + "D";
      }
      auto const pc = assemble_path_cochain(g, VerticalFamily::zero(), {moves}, p);
      auto const h  = path_cohomology(pc);
      for (auto const& s : h) {
        Couple const c = s.position;
        if (s.tag == Tag::full_cochain_group) {
          CHECK(s.group == pc.groups[s.index].total);
          ++checked;
        } else if (s.tag == Tag::kernel_group) {
          CHECK(s.group == kernel(pc.floors[c.floor].differential(c.degree)));
          ++checked;
        } else if (s.tag == Tag::floor_leech) {
          CHECK(s.group == leech_cohomology(g.floors[c.floor], c.degree));
        }
      }
    }
    CHECK(checked > 30);
  }

  TEST_CASE("local_exactness_report", "[grid]") {
    SECTION("all R") {
      auto const r = local_exactness_report(three_floors(), VerticalFamily::zero(), {""}, 3);
      REQUIRE(r.runs.size() == 1);
      CHECK(r.runs[0].unbounded);
      CHECK_FALSE(r.runs[0].is_short);
      CHECK(r.identifications.size() == 4);
      CHECK(r.identification_holds());
    }
    SECTION("DRDR") {
      auto const r = local_exactness_report(three_floors(), VerticalFamily::zero(), {"DRDR"}, 3);
      REQUIRE(r.runs.size() == 3);
      CHECK(r.runs[0].length == 0);
      CHECK(r.runs[1].floor == 1);
      CHECK(r.runs[1].length == 1);
      CHECK(r.runs[1].is_short);
      CHECK(r.runs[2].floor == 2);
      CHECK(r.runs[2].unbounded);
      CHECK(r.identifications.size() == 2);
      CHECK(r.identification_holds());
    }
    SECTION("walk ends before the prefix does") {
      auto const pc = assemble_path_cochain(three_floors(), VerticalFamily::zero(),
                                            {"RRRD"}, 1);
      auto const r  = local_exactness_report(pc, path_cohomology(pc));
      REQUIRE(r.runs.size() == 1);
      CHECK_FALSE(r.runs[0].unbounded);
      CHECK(r.runs[0].is_short);
    }
  }

}  // namespace leechcoh
