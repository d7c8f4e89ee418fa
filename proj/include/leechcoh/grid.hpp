// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// Square and rectangular cohomology of a sequence of monoids. Floor n of the
// grid is the Leech complex of (M_n, A_n); a vertical family supplies maps
// C^p(floor n) -> C^p(floor n + 1). A path starts at (0, 0) and moves either
// right (R, along a floor) or down (D, to the next floor); the groups it
// visits, joined by the maps it crosses, form a cochain complex whose
// cohomology is the square (or, for a finite grid, rectangular) cohomology.
//
// Positions are couples (floor, degree). A path is a finite move prefix
// followed by moves to the right forever; it is walked until the degree
// reaches p_max + 1, and H^t = ker d^t / im d^{t-1} is reported at each
// position t of degree at most p_max.

#ifndef LEECHCOH_GRID_HPP_
#define LEECHCOH_GRID_HPP_

#include <algorithm>   // for max
#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <utility>     // for pair, move
#include <vector>      // for vector

#include "abelian.hpp"
#include "coeff.hpp"
#include "error.hpp"
#include "leech.hpp"

namespace leechcoh {

  enum class Move { right, down };

  inline char to_char(Move m) {
    return m == Move::right ? 'R' : 'D';
  }

  inline std::string direction(Move m) {
    return m == Move::right ? "horizontal" : "vertical";
  }

  struct Couple {
    size_t floor  = 0;
    size_t degree = 0;

    [[nodiscard]] std::string to_string() const {
      return "(" + std::to_string(floor) + "," + std::to_string(degree) + ")";
    }

    friend bool operator==(Couple const&, Couple const&) = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Grid, vertical family, path
  ////////////////////////////////////////////////////////////////////////

  // finite = true is the rectangular case: the path may not leave the last
  // floor. Otherwise the floors are a truncation of an infinite sequence.
  struct GridSpec {
    std::vector<CoeffSystem> floors;
    bool                     finite = true;

    friend bool operator==(GridSpec const&, GridSpec const&) = default;
  };

  inline void validate_grid(GridSpec const& g) {
    if (g.floors.empty()) {
      throw Error(ErrorKind::invalid_argument, "a grid needs at least one floor");
    }
    for (size_t i = 0; i < g.floors.size(); ++i) {
      for (size_t j = i + 1; j < g.floors.size(); ++j) {
        if (g.floors[i] == g.floors[j]) {
          throw Error(ErrorKind::duplicate_floor,
                      "floors " + std::to_string(i) + " and "
                          + std::to_string(j) + " coincide");
        }
      }
    }
  }

  class VerticalFamily {
   public:
    using Key = std::pair<size_t, size_t>;

    static VerticalFamily zero() {
      return VerticalFamily();
    }

    // maps[{n, p}] : C^p(floor n) -> C^p(floor n + 1). Missing entries are
    // zero maps.
    static VerticalFamily explicit_maps(std::map<Key, AbHom> maps) {
      VerticalFamily f;
      f._zero = false;
      f._maps = std::move(maps);
      return f;
    }

    [[nodiscard]] bool is_zero_family() const noexcept {
      return _zero;
    }

    [[nodiscard]] std::map<Key, AbHom> const& maps() const noexcept {
      return _maps;
    }

    [[nodiscard]] AbHom at(size_t           n,
                           size_t           p,
                           CyclicSum const& from,
                           CyclicSum const& to) const {
      auto it = _maps.find({n, p});
      if (it == _maps.end()) {
        return AbHom::zero(from, to);
      }
      if (!(it->second.domain() == from) || !(it->second.codomain() == to)) {
        throw Error(ErrorKind::shape_mismatch,
                    "vertical map [" + std::to_string(n) + ","
                        + std::to_string(p) + "] does not match the cochain "
                        "groups it connects");
      }
      return it->second;
    }

    friend bool operator==(VerticalFamily const&, VerticalFamily const&) = default;

   private:
    VerticalFamily() = default;

    bool                 _zero = true;
    std::map<Key, AbHom> _maps;
  };

  // Checks every stored map against the cochain groups of its floors and
  // that vertically consecutive maps compose to zero.
  inline void check_column_condition(GridSpec const& g, VerticalFamily const& f) {
    std::map<VerticalFamily::Key, CochainGroup> groups;
    auto group = [&](size_t n, size_t p) -> CochainGroup const& {
      auto it = groups.find({n, p});
      if (it == groups.end()) {
        it = groups.emplace(VerticalFamily::Key{n, p},
                            cochain_group(g.floors[n], p))
                 .first;
      }
      return it->second;
    };
    for (auto const& [key, map] : f.maps()) {
      auto const [n, p] = key;
      if (n + 1 >= g.floors.size()) {
        throw Error(ErrorKind::invalid_argument,
                    "vertical map [" + std::to_string(n) + ","
                        + std::to_string(p) + "] leaves the last floor");
      }
      AbHom const here = f.at(n, p, group(n, p).generators, group(n + 1, p).generators);
      if (n + 2 < g.floors.size() && f.maps().count({n + 1, p}) != 0) {
        AbHom const next
            = f.at(n + 1, p, group(n + 1, p).generators, group(n + 2, p).generators);
        if (!compose(next, here).is_zero()) {
          throw Error(ErrorKind::column_condition,
                      "vertical maps [" + std::to_string(n + 1) + ","
                          + std::to_string(p) + "] o [" + std::to_string(n)
                          + "," + std::to_string(p) + "] are nonzero");
        }
      }
    }
  }

  // A move prefix over {R, D}; an infinite run of R follows it.
  struct PathSpec {
    std::string moves;
  };

  inline void validate_path(PathSpec const& path, GridSpec const& g) {
    size_t descents = 0;
    for (size_t i = 0; i < path.moves.size(); ++i) {
      char const c = path.moves[i];
      if (c != 'R' && c != 'D') {
        throw Error(ErrorKind::invalid_move,
                    std::string("move '") + c + "' at position "
                        + std::to_string(i) + " is neither R nor D");
      }
      if (c == 'D' && ++descents >= g.floors.size()) {
        if (g.finite) {
          throw Error(ErrorKind::descent_below_bottom_floor,
                      "move " + std::to_string(i) + " descends below floor "
                          + std::to_string(g.floors.size() - 1));
        }
        throw Error(ErrorKind::too_many_descents,
                    "path needs more than the "
                        + std::to_string(g.floors.size())
                        + " floors given");
      }
    }
  }

  // Walks right along the floor, descending once at every column where the
  // rule fires while a floor remains below. Trailing R moves are dropped
  // since the tail supplies them.
  inline PathSpec path_from_rule(std::function<bool(size_t)> const& rule,
                                 GridSpec const&                    g,
                                 size_t                             p_max) {
    std::string moves;
    size_t      floor = 0;
    for (size_t j = 0; j <= p_max; ++j) {
      if (rule(j) && floor + 1 < g.floors.size()) {
        moves += 'D';
        ++floor;
      }
      moves += 'R';
    }
    while (!moves.empty() && moves.back() == 'R') {
      moves.pop_back();
    }
    return {moves};
  }

  ////////////////////////////////////////////////////////////////////////
  // Path cochain
  ////////////////////////////////////////////////////////////////////////

  struct PathCochain {
    size_t p_max = 0;
    bool   zero_family = true;
    // False when the walk stopped before the end of the move prefix and a
    // later D would have left the last floor visited.
    bool                      tail_reached = true;
    std::vector<Couple>       positions;  // the last one has degree p_max + 1
    std::vector<Move>         moves;      // moves[t] : positions[t] -> positions[t + 1]
    std::vector<CochainGroup> groups;
    std::vector<AbHom>        maps;
    // Leech complexes of the floors visited, each built up to the largest
    // degree the path reaches on it.
    std::vector<LeechComplex> floors;

    // d^{t-1}, with d^{-1} the zero map from the trivial group.
    [[nodiscard]] AbHom incoming(size_t t) const {
      if (t == 0) {
        return AbHom::zero(CyclicSum(), groups[0].generators);
      }
      return maps[t - 1];
    }
  };

  inline PathCochain assemble_path_cochain(GridSpec const&       g,
                                           VerticalFamily const& f,
                                           PathSpec const&       path,
                                           size_t                p_max) {
    validate_grid(g);
    validate_path(path, g);
    check_column_condition(g, f);

    PathCochain pc;
    pc.p_max       = p_max;
    pc.zero_family = f.is_zero_family();
    pc.positions.push_back({0, 0});
    size_t next = 0;
    while (pc.positions.back().degree <= p_max) {
      Couple     here = pc.positions.back();
      Move const m    = next < path.moves.size() && path.moves[next] == 'D'
                            ? Move::down
                            : Move::right;
      ++next;
      if (m == Move::down) {
        ++here.floor;
      } else {
        ++here.degree;
      }
      pc.moves.push_back(m);
      pc.positions.push_back(here);
    }
    pc.tail_reached = path.moves.find('D', next) == std::string::npos;

    std::vector<size_t> top(pc.positions.back().floor + 1, 0);
    for (auto const& c : pc.positions) {
      top[c.floor] = std::max(top[c.floor], c.degree);
    }
    for (size_t n = 0; n < top.size(); ++n) {
      pc.floors.emplace_back(g.floors[n], top[n]);
    }
    for (auto const& c : pc.positions) {
      pc.groups.push_back(pc.floors[c.floor].group(c.degree));
    }
    for (size_t t = 0; t < pc.moves.size(); ++t) {
      Couple const c = pc.positions[t];
      if (pc.moves[t] == Move::right) {
        pc.maps.push_back(pc.floors[c.floor].differential(c.degree));
      } else {
        pc.maps.push_back(f.at(c.floor, c.degree, pc.groups[t].generators,
                               pc.groups[t + 1].generators));
      }
    }
    return pc;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cochain condition along the path
  ////////////////////////////////////////////////////////////////////////

  struct PathViolation {
    size_t index;  // the position where the two maps meet
    Couple position;
    Move   before;
    Move   after;
    AbHom  product;

    [[nodiscard]] std::string describe() const {
      return std::string("the ") + direction(after) + " map after "
             + position.to_string() + " composed with the "
             + direction(before) + " map into it is nonzero: "
             + product.matrix().to_string();
    }
  };

  // Every pair of consecutive maps along the path must compose to zero.
  // Pairs of the same direction hold by the floor and column conditions;
  // they are checked anyway.
  inline std::optional<PathViolation> validate_eq23(PathCochain const& pc) {
    for (size_t t = 0; t + 1 < pc.maps.size(); ++t) {
      AbHom product = compose(pc.maps[t + 1], pc.maps[t]);
      if (!product.is_zero()) {
        return PathViolation{t + 1, pc.positions[t + 1], pc.moves[t],
                             pc.moves[t + 1], std::move(product)};
      }
    }
    return std::nullopt;
  }

  inline std::optional<PathViolation> validate_eq23(GridSpec const&       g,
                                                    VerticalFamily const& f,
                                                    PathSpec const&       path,
                                                    size_t                p_max) {
    return validate_eq23(assemble_path_cochain(g, f, path, p_max));
  }

  ////////////////////////////////////////////////////////////////////////
  // Cohomology and classification
  ////////////////////////////////////////////////////////////////////////

  // floor_leech: both flanking maps horizontal (or none in and horizontal
  //   out), so H is the Leech group of the floor.
  // full_cochain_group: zero vertical maps on both sides; H is the cochain
  //   group itself.
  // kernel_group: zero vertical map in, horizontal map out; H is the kernel
  //   of the horizontal differential.
  // column: vertical on both sides with an explicit family; H is a
  //   cohomology group of the column complex.
  // extremal: any other mix of directions.
  enum class Tag { floor_leech, full_cochain_group, kernel_group, column, extremal };

  inline std::string to_string(Tag t) {
    switch (t) {
      case Tag::floor_leech: return "floor_leech";
      case Tag::full_cochain_group: return "full_cochain_group";
      case Tag::kernel_group: return "kernel_group";
      case Tag::column: return "column";
      case Tag::extremal: return "extremal";
    }
    return "";
  }

  inline Tag classify(std::optional<Move> in, Move out, bool zero_family) {
    if (out == Move::right) {
      if (!in || *in == Move::right) {
        return Tag::floor_leech;
      }
      return zero_family ? Tag::kernel_group : Tag::extremal;
    }
    if (in && *in == Move::right) {
      return Tag::extremal;
    }
    return zero_family ? Tag::full_cochain_group : Tag::column;
  }

  // Tags for every reported position of the path.
  inline std::vector<Tag> classify_trivial(PathCochain const& pc) {
    std::vector<Tag> result;
    for (size_t t = 0; t + 1 < pc.positions.size(); ++t) {
      std::optional<Move> in;
      if (t > 0) {
        in = pc.moves[t - 1];
      }
      result.push_back(classify(in, pc.moves[t], pc.zero_family));
    }
    return result;
  }

  struct SquareGroup {
    size_t              index;
    Couple              position;
    std::optional<Move> in;
    Move                out;
    FgAbGroup           group;
    Tag                 tag;
    // The flanking maps have different directions; the leading 0 -> C^0 of
    // floor 0 counts as horizontal.
    bool extremal;
  };

  inline std::vector<SquareGroup> path_cohomology(PathCochain const& pc) {
    if (auto v = validate_eq23(pc)) {
      throw Error(ErrorKind::path_condition, v->describe());
    }
    auto const               tags = classify_trivial(pc);
    std::vector<SquareGroup> result;
    for (size_t t = 0; t < tags.size(); ++t) {
      std::optional<Move> in;
      if (t > 0) {
        in = pc.moves[t - 1];
      }
      result.push_back({t, pc.positions[t], in, pc.moves[t],
                        cohomology_at(pc.incoming(t), pc.maps[t]), tags[t],
                        in.value_or(Move::right) != pc.moves[t]});
    }
    return result;
  }

  // The cochain read along the path, e.g. "0 -> C(0,0) -v-> C(1,0) -h-> ...";
  // h marks a horizontal differential and v a vertical map.
  inline std::string path_shape(std::vector<SquareGroup> const& h) {
    std::string s = "0 -> ";
    for (auto const& g : h) {
      s += "C" + g.position.to_string() + (g.out == Move::right ? " -h-> " : " -v-> ");
    }
    return s + "...";
  }

  inline std::vector<SquareGroup> square_cohomology(GridSpec const&       g,
                                                    VerticalFamily const& f,
                                                    PathSpec const&       path,
                                                    size_t                p_max) {
    return path_cohomology(assemble_path_cochain(g, f, path, p_max));
  }

  ////////////////////////////////////////////////////////////////////////
  // Local exactness
  ////////////////////////////////////////////////////////////////////////

  // A maximal stretch of the path on one floor.
  struct HorizontalRun {
    size_t floor;
    size_t first;  // path index of the first position
    size_t last;   // path index of the last position walked
    size_t length;  // R moves walked inside the run
    bool   unbounded;  // the run continues in the all-R tail
    bool   is_short;   // bounded with fewer than five groups
  };

  struct Identification {
    size_t    index;
    Couple    position;
    FgAbGroup square;
    FgAbGroup leech;

    [[nodiscard]] bool holds() const {
      return square == leech;
    }
  };

  struct ExactnessReport {
    std::vector<HorizontalRun>  runs;
    std::vector<Identification> identifications;

    [[nodiscard]] bool identification_holds() const {
      for (auto const& i : identifications) {
        if (!i.holds()) {
          return false;
        }
      }
      return true;
    }
  };

  inline ExactnessReport local_exactness_report(PathCochain const&              pc,
                                                std::vector<SquareGroup> const& h) {
    ExactnessReport report;
    size_t const    last = pc.positions.size() - 1;
    size_t          start = 0;
    for (size_t t = 1; t <= last + 1; ++t) {
      if (t == last + 1 || pc.moves[t - 1] == Move::down) {
        HorizontalRun run{pc.positions[start].floor, start, t - 1, t - 1 - start,
                          t == last + 1 && pc.tail_reached, false};
        run.is_short = !run.unbounded && run.length + 1 < 5;
        report.runs.push_back(run);
        start = t;
      }
    }
    // The floor complexes are rebuilt here so the comparison does not share
    // any state with the path.
    std::map<size_t, LeechComplex> rebuilt;
    for (auto const& s : h) {
      if (s.tag != Tag::floor_leech) {
        continue;
      }
      size_t const n  = s.position.floor;
      auto         it = rebuilt.find(n);
      if (it == rebuilt.end()) {
        it = rebuilt
                 .emplace(n, LeechComplex(pc.floors[n].coeffs(),
                                          pc.floors[n].max_degree()))
                 .first;
      }
      report.identifications.push_back(
          {s.index, s.position, s.group, it->second.cohomology(s.position.degree)});
    }
    return report;
  }

  inline ExactnessReport local_exactness_report(GridSpec const&       g,
                                                VerticalFamily const& f,
                                                PathSpec const&       path,
                                                size_t                p_max) {
    auto const pc = assemble_path_cochain(g, f, path, p_max);
    return local_exactness_report(pc, path_cohomology(pc));
  }

}  // namespace leechcoh

#endif  // LEECHCOH_GRID_HPP_
