// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// Monoid sequences attached to structured spaces, and the pipelines that feed
// them to the grid.
//
// Structures: each algebraic structure A_n is described by an abstract
// signature. Equivalent signatures form one class; a product of structures
// only remembers which classes occur in it, so K_n is the monoid of subsets
// of the classes among A_0, ..., A_n under union, with the empty structure
// as identity.
//
// Set systems: for a cover U_0, ..., U_k the map h sends a point to the sets
// containing it. When every nonempty subcollection is some h(x) the sets can
// be taken in input order and g_r is the monoid of unions of U_0, ..., U_r.

#ifndef LEECHCOH_STRUCTURED_HPP_
#define LEECHCOH_STRUCTURED_HPP_

#include <algorithm>  // for sort
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <set>        // for set
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "abelian.hpp"
#include "coeff.hpp"
#include "error.hpp"
#include "grid.hpp"
#include "monoid.hpp"

namespace leechcoh {

  ////////////////////////////////////////////////////////////////////////
  // Structure descriptors and K_n
  ////////////////////////////////////////////////////////////////////////

  struct Operation {
    size_t                arity = 2;
    std::set<std::string> properties;

    friend auto operator<=>(Operation const&, Operation const&) = default;
  };

  struct StructureDescriptor {
    std::vector<Operation> operations;
    std::set<std::string>  nonalg;
    bool                   empty = false;

    static StructureDescriptor empty_structure() {
      StructureDescriptor d;
      d.empty = true;
      return d;
    }

    friend bool operator==(StructureDescriptor const&, StructureDescriptor const&)
        = default;
  };

  // Operations sorted by (arity, properties). Throws for a zero arity or an
  // empty structure that carries operations or tags.
  inline StructureDescriptor canonical(StructureDescriptor d) {
    if (d.empty && (!d.operations.empty() || !d.nonalg.empty())) {
      throw Error(ErrorKind::invalid_argument,
                  "the empty structure has no operations or tags");
    }
    for (auto const& op : d.operations) {
      if (op.arity == 0) {
        throw Error(ErrorKind::invalid_argument, "operations need arity >= 1");
      }
    }
    std::sort(d.operations.begin(), d.operations.end());
    return d;
  }

  inline bool descriptor_equiv(StructureDescriptor const& a,
                               StructureDescriptor const& b) {
    return canonical(a) == canonical(b);
  }

  // Bit i set when class i is a factor.
  using StructureClassSet = std::uint64_t;

  inline StructureClassSet
  structure_product(std::vector<StructureClassSet> const& factors) {
    StructureClassSet result = 0;
    for (auto f : factors) {
      result |= f;
    }
    return result;
  }

  inline std::string class_name(size_t i) {
    return "S" + std::to_string(i);
  }

  // Distinct classes in order of first appearance; class_of[n] is the class
  // of descriptor n, or npos for the empty structure.
  struct StructureClasses {
    static constexpr size_t npos = static_cast<size_t>(-1);

    std::vector<StructureDescriptor> classes;
    std::vector<size_t>              class_of;
  };

  inline StructureClasses
  structure_classes(std::vector<StructureDescriptor> const& descriptors) {
    StructureClasses result;
    for (auto const& d : descriptors) {
      auto const c = canonical(d);
      if (c.empty) {
        result.class_of.push_back(StructureClasses::npos);
        continue;
      }
      size_t i = 0;
      while (i < result.classes.size() && !(result.classes[i] == c)) {
        ++i;
      }
      if (i == result.classes.size()) {
        result.classes.push_back(c);
      }
      result.class_of.push_back(i);
    }
    return result;
  }

  inline FinMonoid class_monoid(size_t classes) {
    if (classes > 16) {
      throw Error(ErrorKind::invalid_argument,
                  std::to_string(classes) + " classes give a monoid too large "
                  "to tabulate");
    }
    std::vector<std::string>    points;
    std::vector<detail::Subset> family;
    for (size_t i = 0; i < classes; ++i) {
      points.push_back(class_name(i));
      detail::Subset s(classes, false);
      s[i] = true;
      family.push_back(std::move(s));
    }
    return detail::union_closure(family, points);
  }

  // K_n for the structures A_0, ..., A_n.
  inline FinMonoid build_Kn(std::vector<StructureDescriptor> const& descriptors) {
    if (descriptors.empty()) {
      throw Error(ErrorKind::invalid_argument, "build_Kn needs a descriptor");
    }
    return class_monoid(structure_classes(descriptors).classes.size());
  }

  // K_0, ..., K_k. Throws NoNewClass when some A_n with n >= 1 is equivalent
  // to an earlier structure, since K_n would repeat K_{n-1}.
  inline std::vector<FinMonoid>
  structure_floors(std::vector<StructureDescriptor> const& descriptors) {
    auto const             sc = structure_classes(descriptors);
    std::vector<FinMonoid> result;
    size_t                 seen = 0;
    for (size_t n = 0; n < descriptors.size(); ++n) {
      size_t const c = sc.class_of[n];
      if (c == StructureClasses::npos || c < seen) {
        if (n > 0) {
          throw Error(ErrorKind::no_new_class,
                      "structure " + std::to_string(n)
                          + " adds no new class, so K_" + std::to_string(n)
                          + " = K_" + std::to_string(n - 1));
        }
      } else {
        seen = c + 1;
      }
      result.push_back(class_monoid(seen));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Set systems and g_r
  ////////////////////////////////////////////////////////////////////////

  struct NamedSet {
    std::string      name;
    std::set<size_t> members;  // point indices

    friend bool operator==(NamedSet const&, NamedSet const&) = default;
  };

  struct SetSystem {
    std::vector<std::string> points;
    std::vector<NamedSet>    sets;

    friend bool operator==(SetSystem const&, SetSystem const&) = default;
  };

  inline void validate_set_system(SetSystem const& s) {
    if (s.sets.empty()) {
      throw Error(ErrorKind::invalid_argument, "a set system needs a set");
    }
    if (std::set<std::string>(s.points.begin(), s.points.end()).size()
        != s.points.size()) {
      throw Error(ErrorKind::invalid_argument, "point names are not unique");
    }
    for (size_t i = 0; i < s.sets.size(); ++i) {
      for (auto x : s.sets[i].members) {
        if (x >= s.points.size()) {
          throw Error(ErrorKind::invalid_argument,
                      "set " + s.sets[i].name + " has an unknown point");
        }
      }
      for (size_t j = 0; j < i; ++j) {
        if (s.sets[i].name == s.sets[j].name) {
          throw Error(ErrorKind::invalid_argument,
                      "set name " + s.sets[i].name + " is used twice");
        }
        if (s.sets[i].members == s.sets[j].members) {
          throw Error(ErrorKind::invalid_argument,
                      "sets " + s.sets[j].name + " and " + s.sets[i].name
                          + " are equal");
        }
      }
    }
  }

  // h[x] = indices of the sets containing point x.
  using HMap = std::vector<std::set<size_t>>;

  inline HMap h_map(SetSystem const& s) {
    HMap h(s.points.size());
    for (size_t p = 0; p < s.sets.size(); ++p) {
      for (auto x : s.sets[p].members) {
        h[x].insert(p);
      }
    }
    return h;
  }

  struct Surjectivity {
    HMap                          h;
    std::vector<std::set<size_t>> missing;  // by size, then lexicographic

    [[nodiscard]] bool ok() const noexcept {
      return missing.empty();
    }
  };

  inline std::string render_subcollection(SetSystem const&        s,
                                          std::set<size_t> const& c) {
    std::string result = "{";
    for (auto p : c) {
      result += (p == *c.begin() ? "" : ",") + s.sets[p].name;
    }
    return result + "}";
  }

  inline Surjectivity check_h_surjective(SetSystem const& s) {
    validate_set_system(s);
    size_t const k = s.sets.size();
    if (k > 20) {
      throw Error(ErrorKind::invalid_argument, "too many sets to enumerate");
    }
    Surjectivity result{h_map(s), {}};
    std::set<std::set<size_t>> hit(result.h.begin(), result.h.end());
    std::vector<detail::Subset> subsets;
    for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
      detail::Subset bits(k, false);
      for (size_t p = 0; p < k; ++p) {
        bits[p] = ((mask >> p) & 1U) != 0;
      }
      subsets.push_back(std::move(bits));
    }
    std::sort(subsets.begin(), subsets.end(), detail::subset_less);
    for (auto const& bits : subsets) {
      std::set<size_t> c;
      for (size_t p = 0; p < k; ++p) {
        if (bits[p]) {
          c.insert(p);
        }
      }
      if (hit.count(c) == 0) {
        result.missing.push_back(std::move(c));
      }
    }
    return result;
  }

  // order[r] is the set placed at position r; representatives[r] is the
  // first point x with h(x) = {U_0, ..., U_r}.
  struct Chain {
    std::vector<size_t> order;
    std::vector<size_t> representatives;
  };

  inline Chain reorder_chain(SetSystem const& s) {
    auto const surj = check_h_surjective(s);
    if (!surj.ok()) {
      throw Error(ErrorKind::not_surjective,
                  "no point lies in exactly "
                      + render_subcollection(s, surj.missing.front()));
    }
    Chain            chain;
    std::set<size_t> prefix;
    for (size_t r = 0; r < s.sets.size(); ++r) {
      chain.order.push_back(r);
      prefix.insert(r);
      size_t x = 0;
      while (surj.h[x] != prefix) {
        ++x;
      }
      chain.representatives.push_back(x);
    }
    return chain;
  }

  // All unions of U_0, ..., U_r under union.
  inline FinMonoid build_gr(SetSystem const& s, size_t r) {
    if (r >= s.sets.size()) {
      throw Error(ErrorKind::invalid_argument,
                  "g_" + std::to_string(r) + " needs " + std::to_string(r + 1)
                      + " sets");
    }
    std::vector<std::set<std::string>> family;
    for (size_t p = 0; p <= r; ++p) {
      std::set<std::string> members;
      for (auto x : s.sets[p].members) {
        members.insert(s.points[x]);
      }
      family.push_back(std::move(members));
    }
    return union_monoid(family);
  }

  ////////////////////////////////////////////////////////////////////////
  // Pipelines
  ////////////////////////////////////////////////////////////////////////

  struct PipelineResult {
    GridSpec                 grid;
    PathSpec                 path;
    std::vector<SquareGroup> cohomology;
    ExactnessReport          exactness;
  };

  inline PipelineResult run_grid(GridSpec              grid,
                                 VerticalFamily const& family,
                                 PathSpec const&       path,
                                 size_t                p_max) {
    auto const pc = assemble_path_cochain(grid, family, path, p_max);
    auto       h  = path_cohomology(pc);
    auto       r  = local_exactness_report(pc, h);
    return {std::move(grid), path, std::move(h), std::move(r)};
  }

  // Floors K_0, ..., K_k with constant coefficients in group.
  inline PipelineResult fs_pipeline(std::vector<StructureDescriptor> const& descriptors,
                                    FgAbGroup const&                        group,
                                    PathSpec const&                         path,
                                    size_t                                  p_max,
                                    bool                  finite = true,
                                    VerticalFamily const& family = VerticalFamily::zero()) {
    GridSpec grid;
    grid.finite = finite;
    for (auto const& k : structure_floors(descriptors)) {
      grid.floors.push_back(constant_system(k, group));
    }
    return run_grid(std::move(grid), family, path, p_max);
  }

  // Floors g_0, ..., g_k with constant coefficients in group; always a
  // rectangular grid.
  inline PipelineResult h_pipeline(SetSystem const&      s,
                                   FgAbGroup const&      group,
                                   PathSpec const&       path,
                                   size_t                p_max,
                                   VerticalFamily const& family = VerticalFamily::zero()) {
    auto const chain = reorder_chain(s);
    GridSpec   grid;
    for (size_t r = 0; r < chain.order.size(); ++r) {
      grid.floors.push_back(constant_system(build_gr(s, r), group));
    }
    return run_grid(std::move(grid), family, path, p_max);
  }

}  // namespace leechcoh

#endif  // LEECHCOH_STRUCTURED_HPP_
