// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// Finite monoids as Cayley tables, their validation, and the builders used by
// the rest of the library: cyclic groups, power sets and union monoids.

#ifndef LEECHCOH_MONOID_HPP_
#define LEECHCOH_MONOID_HPP_

#include <algorithm>  // for sort, find
#include <cstddef>    // for size_t
#include <map>        // for map
#include <set>        // for set
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "error.hpp"

namespace leechcoh {

  // Element indices are plain size_t throughout; table[a][b] = a * b.
  using element_index = size_t;
  using CayleyTable   = std::vector<std::vector<element_index>>;

  class FinMonoid {
   public:
    FinMonoid() : FinMonoid({"e"}, 0, {{0}}) {}

    // Checks shape, index ranges and name uniqueness. The identity and
    // associativity laws are reported by validate() instead, so that broken
    // tables can still be loaded and diagnosed.
    FinMonoid(std::vector<std::string> names,
              element_index            identity,
              CayleyTable              table)
        : _names(std::move(names)), _identity(identity), _table(std::move(table)) {
      size_t const m = _names.size();
      if (m == 0) {
        throw Error(ErrorKind::invalid_monoid, "a monoid needs an element");
      }
      if (_identity >= m) {
        throw Error(ErrorKind::invalid_monoid, "identity index out of range");
      }
      if (_table.size() != m) {
        throw Error(ErrorKind::invalid_monoid,
                    "table has " + std::to_string(_table.size())
                        + " rows for " + std::to_string(m) + " elements");
      }
      for (auto const& row : _table) {
        if (row.size() != m) {
          throw Error(ErrorKind::invalid_monoid, "table is not square");
        }
        for (auto x : row) {
          if (x >= m) {
            throw Error(ErrorKind::invalid_monoid,
                        "table entry " + std::to_string(x) + " out of range");
          }
        }
      }
      for (size_t i = 0; i < m; ++i) {
        _index.emplace(_names[i], i);
      }
      if (_index.size() != m) {
        throw Error(ErrorKind::invalid_monoid, "element names are not unique");
      }
    }

    [[nodiscard]] size_t size() const noexcept {
      return _names.size();
    }

    [[nodiscard]] element_index identity() const noexcept {
      return _identity;
    }

    [[nodiscard]] element_index product(element_index a, element_index b) const {
      return _table[a][b];
    }

    // Product of a word; the empty word is the identity.
    [[nodiscard]] element_index
    product(std::vector<element_index> const& word) const {
      element_index result = _identity;
      for (auto x : word) {
        result = _table[result][x];
      }
      return result;
    }

    [[nodiscard]] std::string const& name(element_index a) const {
      return _names[a];
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    [[nodiscard]] CayleyTable const& table() const noexcept {
      return _table;
    }

    [[nodiscard]] element_index index_of(std::string const& name) const {
      auto it = _index.find(name);
      if (it == _index.end()) {
        throw Error(ErrorKind::invalid_argument, "no element named " + name);
      }
      return it->second;
    }

    [[nodiscard]] bool contains(std::string const& name) const {
      return _index.count(name) != 0;
    }

    [[nodiscard]] bool is_commutative() const {
      for (size_t a = 0; a < size(); ++a) {
        for (size_t b = a + 1; b < size(); ++b) {
          if (_table[a][b] != _table[b][a]) {
            return false;
          }
        }
      }
      return true;
    }

    [[nodiscard]] std::vector<element_index> idempotents() const {
      std::vector<element_index> result;
      for (size_t a = 0; a < size(); ++a) {
        if (_table[a][a] == a) {
          result.push_back(a);
        }
      }
      return result;
    }

    // Every element has a two-sided inverse.
    [[nodiscard]] bool is_group() const {
      for (size_t a = 0; a < size(); ++a) {
        bool found = false;
        for (size_t b = 0; b < size() && !found; ++b) {
          found = _table[a][b] == _identity && _table[b][a] == _identity;
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(FinMonoid const& x, FinMonoid const& y) {
      return x._names == y._names && x._identity == y._identity
             && x._table == y._table;
    }

   private:
    std::vector<std::string>             _names;
    element_index                        _identity;
    CayleyTable                          _table;
    std::map<std::string, element_index> _index;
  };

  struct MonoidViolation {
    enum class Law { left_identity, right_identity, associativity };
    Law           law;
    element_index a = 0;
    element_index b = 0;
    element_index c = 0;

    [[nodiscard]] std::string describe(FinMonoid const& m) const {
      switch (law) {
        case Law::left_identity:
          return "left identity fails: (" + m.name(a) + ", " + m.name(b)
                 + ") gives " + m.name(m.product(a, b));
        case Law::right_identity:
          return "right identity fails: (" + m.name(a) + ", " + m.name(b)
                 + ") gives " + m.name(m.product(a, b));
        case Law::associativity:
          return "associativity fails at (" + m.name(a) + ", " + m.name(b)
                 + ", " + m.name(c) + ")";
      }
      return "";
    }
  };

  // Every identity and associativity violation, with witnesses. The identity
  // witnesses name (e, x) or (x, e).
  inline std::vector<MonoidViolation> validate(FinMonoid const& m) {
    std::vector<MonoidViolation> result;
    auto const                   e = m.identity();
    for (size_t x = 0; x < m.size(); ++x) {
      if (m.product(e, x) != x) {
        result.push_back({MonoidViolation::Law::left_identity, e, x, 0});
      }
      if (m.product(x, e) != x) {
        result.push_back({MonoidViolation::Law::right_identity, x, e, 0});
      }
    }
    for (size_t a = 0; a < m.size(); ++a) {
      for (size_t b = 0; b < m.size(); ++b) {
        for (size_t c = 0; c < m.size(); ++c) {
          if (m.product(m.product(a, b), c) != m.product(a, m.product(b, c))) {
            result.push_back({MonoidViolation::Law::associativity, a, b, c});
          }
        }
      }
    }
    return result;
  }

  inline FinMonoid cyclic_group(size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::invalid_argument, "cyclic_group needs n >= 1");
    }
    std::vector<std::string> names;
    CayleyTable              table(n, std::vector<element_index>(n));
    for (size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
      for (size_t j = 0; j < n; ++j) {
        table[i][j] = (i + j) % n;
      }
    }
    return FinMonoid(std::move(names), 0, std::move(table));
  }

  // Monoid obtained from a semigroup table on n elements by adjoining a new
  // identity, which becomes element 0. Semigroup element i becomes i + 1.
  inline FinMonoid adjoin_identity(CayleyTable const&       semigroup,
                                   std::vector<std::string> names,
                                   std::string const&       identity_name = "e") {
    size_t const n = semigroup.size();
    names.insert(names.begin(), identity_name);
    CayleyTable table(n + 1, std::vector<element_index>(n + 1));
    for (size_t i = 0; i <= n; ++i) {
      table[0][i] = i;
      table[i][0] = i;
    }
    for (size_t i = 0; i < n; ++i) {
      if (semigroup[i].size() != n) {
        throw Error(ErrorKind::invalid_monoid, "semigroup table is not square");
      }
      for (size_t j = 0; j < n; ++j) {
        table[i + 1][j + 1] = semigroup[i][j] + 1;
      }
    }
    return FinMonoid(std::move(names), 0, std::move(table));
  }

  namespace detail {

    using Subset = std::vector<bool>;

    // Cardinality first, then lexicographic on member positions.
    inline bool subset_less(Subset const& x, Subset const& y) {
      size_t cx = std::count(x.begin(), x.end(), true);
      size_t cy = std::count(y.begin(), y.end(), true);
      if (cx != cy) {
        return cx < cy;
      }
      for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) {
          return x[i];
        }
      }
      return false;
    }

    inline Subset subset_union(Subset const& x, Subset const& y) {
      Subset result(x.size());
      for (size_t i = 0; i < x.size(); ++i) {
        result[i] = x[i] || y[i];
      }
      return result;
    }

    inline std::string render_subset(Subset const&                   s,
                                     std::vector<std::string> const& points) {
      std::string result = "{";
      bool        first  = true;
      for (size_t i = 0; i < s.size(); ++i) {
        if (s[i]) {
          result += (first ? "" : ",") + points[i];
          first = false;
        }
      }
      return result + "}";
    }

    // All unions of subfamilies of family (the empty union included), ordered
    // and named, under union.
    inline FinMonoid union_closure(std::vector<Subset> const&      family,
                                   std::vector<std::string> const& points) {
      std::vector<Subset> elements{Subset(points.size(), false)};
      std::set<Subset>    seen(elements.begin(), elements.end());
      for (auto const& s : family) {
        size_t const count = elements.size();
        for (size_t i = 0; i < count; ++i) {
          Subset u = subset_union(elements[i], s);
          if (seen.insert(u).second) {
            elements.push_back(std::move(u));
          }
        }
      }
      std::sort(elements.begin(), elements.end(), subset_less);
      std::map<Subset, element_index> index;
      std::vector<std::string>        names;
      for (size_t i = 0; i < elements.size(); ++i) {
        index.emplace(elements[i], i);
        names.push_back(render_subset(elements[i], points));
      }
      size_t const m = elements.size();
      CayleyTable  table(m, std::vector<element_index>(m));
      for (size_t a = 0; a < m; ++a) {
        for (size_t b = 0; b < m; ++b) {
          table[a][b] = index.at(subset_union(elements[a], elements[b]));
        }
      }
      return FinMonoid(std::move(names), 0, std::move(table));
    }

  }  // namespace detail

  // Subsets of {0, ..., n - 1} under union, identity the empty set.
  inline FinMonoid power_set_monoid(size_t n) {
    std::vector<std::string> points;
    std::vector<detail::Subset> family;
    for (size_t i = 0; i < n; ++i) {
      points.push_back(std::to_string(i));
      detail::Subset s(n, false);
      s[i] = true;
      family.push_back(std::move(s));
    }
    return detail::union_closure(family, points);
  }

  // All distinct unions of subfamilies of family under union; the ground set
  // is the sorted set of points mentioned.
  inline FinMonoid
  union_monoid(std::vector<std::set<std::string>> const& family) {
    std::set<std::string> ground;
    for (auto const& s : family) {
      ground.insert(s.begin(), s.end());
    }
    std::vector<std::string> points(ground.begin(), ground.end());
    std::vector<detail::Subset> subsets;
    for (auto const& s : family) {
      detail::Subset bits(points.size(), false);
      for (auto const& x : s) {
        bits[std::distance(ground.begin(), ground.find(x))] = true;
      }
      subsets.push_back(std::move(bits));
    }
    return detail::union_closure(subsets, points);
  }

}  // namespace leechcoh

#endif  // LEECHCOH_MONOID_HPP_
