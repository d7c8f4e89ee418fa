// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// Leech coefficient systems: an abelian group A(x) for each element x of a
// monoid M together with maps
//
//   lstar(a, x) : A(x) -> A(a x)     (left translation a_*)
//   rstar(b, x) : A(x) -> A(x b)     (right translation b^*)
//
// subject to
//
//   lstar(a b, x)            = lstar(a, b x) o lstar(b, x)
//   rstar(b c, x)            = rstar(c, x b) o rstar(b, x)
//   lstar(a, x c) o rstar(c, x) = rstar(c, a x) o lstar(a, x)
//   lstar(e, x) = rstar(e, x) = id.
//
// Maps are stored for every ordered pair so the validator has one code path.

#ifndef LEECHCOH_COEFF_HPP_
#define LEECHCOH_COEFF_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <string>   // for string
#include <utility>  // for move
#include <vector>   // for vector

#include "abelian.hpp"
#include "error.hpp"
#include "monoid.hpp"

namespace leechcoh {

  class CoeffSystem {
   public:
    // lstar and rstar are indexed by a * |M| + x. Throws if a map's domain or
    // codomain disagrees with the groups.
    CoeffSystem(FinMonoid          monoid,
                std::vector<FgAbGroup> groups,
                std::vector<AbHom>     lstar,
                std::vector<AbHom>     rstar)
        : _monoid(std::move(monoid)),
          _groups(std::move(groups)),
          _lstar(std::move(lstar)),
          _rstar(std::move(rstar)) {
      size_t const m = _monoid.size();
      if (_groups.size() != m || _lstar.size() != m * m
          || _rstar.size() != m * m) {
        throw Error(ErrorKind::invalid_coefficients,
                    "expected " + std::to_string(m) + " groups and "
                        + std::to_string(m * m) + " maps of each kind");
      }
      for (size_t a = 0; a < m; ++a) {
        for (size_t x = 0; x < m; ++x) {
          check_map(this->lstar(a, x), x, _monoid.product(a, x), "lstar", a);
          check_map(this->rstar(a, x), x, _monoid.product(x, a), "rstar", a);
        }
      }
    }

    [[nodiscard]] FinMonoid const& monoid() const noexcept {
      return _monoid;
    }

    [[nodiscard]] FgAbGroup const& group(element_index x) const {
      return _groups[x];
    }

    [[nodiscard]] std::vector<FgAbGroup> const& groups() const noexcept {
      return _groups;
    }

    [[nodiscard]] AbHom const& lstar(element_index a, element_index x) const {
      return _lstar[a * _monoid.size() + x];
    }

    [[nodiscard]] AbHom const& rstar(element_index b, element_index x) const {
      return _rstar[b * _monoid.size() + x];
    }

    friend bool operator==(CoeffSystem const&, CoeffSystem const&) = default;

   private:
    void check_map(AbHom const&       h,
                   element_index      from,
                   element_index      to,
                   std::string const& which,
                   element_index      a) const {
      if (!(h.domain() == CyclicSum(_groups[from]))
          || !(h.codomain() == CyclicSum(_groups[to]))) {
        throw Error(ErrorKind::invalid_coefficients,
                    which + "(" + _monoid.name(a) + ", " + _monoid.name(from)
                        + ") must map A(" + _monoid.name(from) + ") to A("
                        + _monoid.name(to) + ")");
      }
    }

    FinMonoid              _monoid;
    std::vector<FgAbGroup> _groups;
    std::vector<AbHom>     _lstar;
    std::vector<AbHom>     _rstar;
  };

  struct RelationViolation {
    enum class Relation { left_functor, right_functor, mixed, identity };
    Relation      relation;
    element_index a = 0;
    element_index b = 0;
    element_index x = 0;

    [[nodiscard]] std::string describe(FinMonoid const& m) const {
      auto n = [&m](element_index i) { return m.name(i); };
      switch (relation) {
        case Relation::left_functor:
          return "lstar(" + n(a) + n(b) + ", " + n(x) + ") != lstar(" + n(a)
                 + ", " + n(b) + n(x) + ") o lstar(" + n(b) + ", " + n(x) + ")";
        case Relation::right_functor:
          return "rstar(" + n(a) + n(b) + ", " + n(x) + ") != rstar(" + n(b)
                 + ", " + n(x) + n(a) + ") o rstar(" + n(a) + ", " + n(x) + ")";
        case Relation::mixed:
          return "lstar(" + n(a) + ", " + n(x) + n(b) + ") o rstar(" + n(b)
                 + ", " + n(x) + ") != rstar(" + n(b) + ", " + n(a) + n(x)
                 + ") o lstar(" + n(a) + ", " + n(x) + ")";
        case Relation::identity:
          return "lstar(e, " + n(x) + ") or rstar(e, " + n(x)
                 + ") is not the identity";
      }
      return "";
    }

    [[nodiscard]] static std::string name(Relation r) {
      switch (r) {
        case Relation::left_functor: return "(ab)_* = a_* b_*";
        case Relation::right_functor: return "(bc)^* = c^* b^*";
        case Relation::mixed: return "c^* a_* = a_* c^*";
        case Relation::identity: return "e_* = e^* = id";
      }
      return "";
    }
  };

  // Every violated relation with its witness. For left_functor the witness
  // (a, b, x) refers to lstar(ab, x); for right_functor (a, b, x) stands for
  // rstar(ab, x) = rstar(b, xa) o rstar(a, x); for mixed (a, b, x) is the
  // commutation of lstar(a, .) with rstar(b, .) at x.
  inline std::vector<RelationViolation> validate_relations(CoeffSystem const& c) {
    using R = RelationViolation::Relation;
    std::vector<RelationViolation> result;
    FinMonoid const&               m = c.monoid();
    size_t const                   n = m.size();
    auto const                     e = m.identity();
    for (size_t x = 0; x < n; ++x) {
      auto const id = AbHom::identity(CyclicSum(c.group(x)));
      if (!(c.lstar(e, x) == id) || !(c.rstar(e, x) == id)) {
        result.push_back({R::identity, e, e, x});
      }
    }
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        for (size_t x = 0; x < n; ++x) {
          if (!(c.lstar(m.product(a, b), x)
                == compose(c.lstar(a, m.product(b, x)), c.lstar(b, x)))) {
            result.push_back({R::left_functor, a, b, x});
          }
          if (!(c.rstar(m.product(a, b), x)
                == compose(c.rstar(b, m.product(x, a)), c.rstar(a, x)))) {
            result.push_back({R::right_functor, a, b, x});
          }
          if (!(compose(c.lstar(a, m.product(x, b)), c.rstar(b, x))
                == compose(c.rstar(b, m.product(a, x)), c.lstar(a, x)))) {
            result.push_back({R::mixed, a, b, x});
          }
        }
      }
    }
    return result;
  }

  // A(x) = g for every x, all translations the identity.
  inline CoeffSystem constant_system(FinMonoid const& m, FgAbGroup const& g) {
    size_t const       n  = m.size();
    AbHom const        id = AbHom::identity(CyclicSum(g));
    return CoeffSystem(m, std::vector<FgAbGroup>(n, g),
                       std::vector<AbHom>(n * n, id),
                       std::vector<AbHom>(n * n, id));
  }

  // A(x) = g, lstar(a, x) = action[a], rstar trivial. The action must be a
  // monoid homomorphism M -> End(g); this is checked by composing matrices.
  inline CoeffSystem monoid_action_system(FinMonoid const&          m,
                                          FgAbGroup const&          g,
                                          std::vector<AbHom> const& action) {
    size_t const n = m.size();
    CyclicSum const gens(g);
    if (action.size() != n) {
      throw Error(ErrorKind::invalid_coefficients,
                  "expected one action map per element");
    }
    for (size_t a = 0; a < n; ++a) {
      if (!(action[a].domain() == gens) || !(action[a].codomain() == gens)) {
        throw Error(ErrorKind::invalid_coefficients,
                    "action of " + m.name(a) + " is not an endomorphism of "
                        + g.to_string());
      }
    }
    if (!(action[m.identity()] == AbHom::identity(gens))) {
      throw Error(ErrorKind::action_not_homomorphic,
                  "the identity does not act as the identity");
    }
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        if (!(action[m.product(a, b)] == compose(action[a], action[b]))) {
          throw Error(ErrorKind::action_not_homomorphic,
                      "action(" + m.name(a) + m.name(b) + ") != action("
                          + m.name(a) + ") o action(" + m.name(b) + ")");
        }
      }
    }
    std::vector<AbHom> lstar;
    lstar.reserve(n * n);
    for (size_t a = 0; a < n; ++a) {
      for (size_t x = 0; x < n; ++x) {
        lstar.push_back(action[a]);
      }
    }
    return CoeffSystem(m, std::vector<FgAbGroup>(n, g), std::move(lstar),
                       std::vector<AbHom>(n * n, AbHom::identity(gens)));
  }

  inline CoeffSystem group_action_system(FinMonoid const&          g,
                                         FgAbGroup const&          group,
                                         std::vector<AbHom> const& action) {
    if (!g.is_group()) {
      throw Error(ErrorKind::not_a_group,
                  "group_action_system needs every element to be invertible");
    }
    return monoid_action_system(g, group, action);
  }

}  // namespace leechcoh

#endif  // LEECHCOH_COEFF_HPP_
