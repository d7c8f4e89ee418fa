// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// Normalized Leech cochains. C^n is the direct sum of A(a_1 ... a_n) over the
// n-tuples of non-identity elements (tuples containing the identity are
// forced to zero, so they are simply left out); C^0 = A(e). The coboundary
// of f at (a_1, ..., a_{n+1}) is
//
//     lstar(a_1, a_2...a_{n+1}) f(a_2, ..., a_{n+1})
//   + sum_j (-1)^j f(a_1, ..., a_j a_{j+1}, ..., a_{n+1})
//   + (-1)^{n+1} rstar(a_{n+1}, a_1...a_n) f(a_1, ..., a_n),
//
// where a middle term vanishes when a_j a_{j+1} = e.
//
// Degrees are indexed so that H^n = ker d^n / im d^{n-1} with d^{-1} = 0,
// which puts H^0 inside C^0 = A(e).

#ifndef LEECHCOH_LEECH_HPP_
#define LEECHCOH_LEECH_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <utility>  // for move
#include <vector>   // for vector

#include "abelian.hpp"
#include "coeff.hpp"
#include "error.hpp"
#include "monoid.hpp"

namespace leechcoh {

  struct CochainGroup {
    size_t                                  degree = 0;
    std::vector<std::vector<element_index>> tuples;
    std::vector<FgAbGroup>                  components;
    std::vector<size_t>                     generator_offsets;
    CyclicSum                               generators;
    FgAbGroup                               total;
  };

  namespace detail {

    // Non-identity elements in increasing index order.
    inline std::vector<element_index> non_identity(FinMonoid const& m) {
      std::vector<element_index> result;
      for (size_t a = 0; a < m.size(); ++a) {
        if (a != m.identity()) {
          result.push_back(a);
        }
      }
      return result;
    }

    // Position of an identity-free tuple in the lexicographic enumeration;
    // rank[a] is the position of a among the non-identity elements.
    inline size_t tuple_position(std::vector<element_index> const& tuple,
                                 std::vector<size_t> const&        rank,
                                 size_t                            base) {
      size_t pos = 0;
      for (auto a : tuple) {
        pos = pos * base + rank[a];
      }
      return pos;
    }

    inline std::vector<size_t> non_identity_rank(FinMonoid const& m) {
      std::vector<size_t> rank(m.size(), 0);
      size_t              r = 0;
      for (size_t a = 0; a < m.size(); ++a) {
        if (a != m.identity()) {
          rank[a] = r++;
        }
      }
      return rank;
    }

  }  // namespace detail

  inline CochainGroup cochain_group(CoeffSystem const& c, size_t n) {
    FinMonoid const& m     = c.monoid();
    auto const       elems = detail::non_identity(m);
    CochainGroup     result;
    result.degree = n;
    if (n == 0) {
      result.tuples.emplace_back();
    } else if (!elems.empty()) {
      std::vector<size_t> digits(n, 0);
      while (true) {
        std::vector<element_index> t(n);
        for (size_t i = 0; i < n; ++i) {
          t[i] = elems[digits[i]];
        }
        result.tuples.push_back(std::move(t));
        size_t i = n;
        while (i > 0 && ++digits[i - 1] == elems.size()) {
          digits[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
    }
    std::vector<CyclicSum> parts;
    size_t                 offset = 0;
    for (auto const& t : result.tuples) {
      FgAbGroup const& g = c.group(m.product(t));
      result.components.push_back(g);
      result.generator_offsets.push_back(offset);
      parts.emplace_back(g);
      offset += parts.back().size();
    }
    result.generators = CyclicSum::direct_sum(parts);
    result.total      = result.generators.canonical();
    return result;
  }

  inline CochainGroup cochain_group(FinMonoid const& m, CoeffSystem const& c, size_t n) {
    if (!(m == c.monoid())) {
      throw Error(ErrorKind::invalid_argument,
                  "coefficient system is over a different monoid");
    }
    return cochain_group(c, n);
  }

  // d^n : C^n -> C^{n+1}, given the two cochain groups.
  inline AbHom coboundary(CoeffSystem const&  c,
                          CochainGroup const& from,
                          CochainGroup const& to) {
    FinMonoid const& m    = c.monoid();
    size_t const     n    = from.degree;
    auto const       rank = detail::non_identity_rank(m);
    size_t const     base = m.size() - 1;
    auto const       e    = m.identity();
    IntMatrix        matrix(to.generators.size(), from.generators.size());

    for (size_t row = 0; row < to.tuples.size(); ++row) {
      auto const&  out    = to.tuples[row];
      size_t const r0     = to.generator_offsets[row];
      // first term: a_1 acting on the left of f(a_2, ..., a_{n+1})
      {
        std::vector<element_index> in(out.begin() + 1, out.end());
        size_t const col = detail::tuple_position(in, rank, base);
        matrix.add_block(r0, from.generator_offsets[col],
                         c.lstar(out[0], m.product(in)).matrix(), 1);
      }
      // middle terms: contract a_j a_{j+1}
      for (size_t j = 1; j <= n; ++j) {
        element_index const p = m.product(out[j - 1], out[j]);
        if (p == e) {
          continue;
        }
        std::vector<element_index> in(out.begin(), out.begin() + (j - 1));
        in.push_back(p);
        in.insert(in.end(), out.begin() + (j + 1), out.end());
        size_t const col = detail::tuple_position(in, rank, base);
        size_t const c0  = from.generator_offsets[col];
        size_t const k   = CyclicSum(to.components[row]).size();
        for (size_t i = 0; i < k; ++i) {
          matrix(r0 + i, c0 + i) += (j % 2 == 0) ? 1 : -1;
        }
      }
      // last term: a_{n+1} acting on the right of f(a_1, ..., a_n)
      {
        std::vector<element_index> in(out.begin(), out.end() - 1);
        size_t const col = detail::tuple_position(in, rank, base);
        matrix.add_block(r0, from.generator_offsets[col],
                         c.rstar(out.back(), m.product(in)).matrix(),
                         (n + 1) % 2 == 0 ? 1 : -1);
      }
    }
    return AbHom(from.generators, to.generators, std::move(matrix));
  }

  inline AbHom coboundary(CoeffSystem const& c, size_t n) {
    return coboundary(c, cochain_group(c, n), cochain_group(c, n + 1));
  }

  inline AbHom coboundary(FinMonoid const& m, CoeffSystem const& c, size_t n) {
    if (!(m == c.monoid())) {
      throw Error(ErrorKind::invalid_argument,
                  "coefficient system is over a different monoid");
    }
    return coboundary(c, n);
  }

  // The cochain complex C^0 -> ... -> C^P with every d^{n+1} o d^n = 0
  // verified on construction.
  class LeechComplex {
   public:
    LeechComplex(CoeffSystem coeffs, size_t max_degree)
        : _coeffs(std::move(coeffs)), _max_degree(max_degree) {
      for (size_t n = 0; n <= max_degree; ++n) {
        _groups.push_back(cochain_group(_coeffs, n));
      }
      for (size_t n = 0; n < max_degree; ++n) {
        _differentials.push_back(
            coboundary(_coeffs, _groups[n], _groups[n + 1]));
        if (n > 0 && !compose(_differentials[n], _differentials[n - 1]).is_zero()) {
          throw Error(ErrorKind::composition_nonzero,
                      "d^" + std::to_string(n) + " o d^" + std::to_string(n - 1)
                          + " is nonzero; the coefficient system violates "
                            "its relations");
        }
      }
    }

    [[nodiscard]] CoeffSystem const& coeffs() const noexcept {
      return _coeffs;
    }

    [[nodiscard]] FinMonoid const& monoid() const noexcept {
      return _coeffs.monoid();
    }

    [[nodiscard]] size_t max_degree() const noexcept {
      return _max_degree;
    }

    [[nodiscard]] CochainGroup const& group(size_t n) const {
      if (n > _max_degree) {
        throw Error(ErrorKind::invalid_argument,
                    "cochain degree " + std::to_string(n)
                        + " beyond the complex bound "
                        + std::to_string(_max_degree));
      }
      return _groups[n];
    }

    [[nodiscard]] AbHom const& differential(size_t n) const {
      if (n >= _max_degree) {
        throw Error(ErrorKind::invalid_argument,
                    "differential d^" + std::to_string(n)
                        + " beyond the complex bound "
                        + std::to_string(_max_degree));
      }
      return _differentials[n];
    }

    // d^{n-1}, with d^{-1} the zero map from the trivial group.
    [[nodiscard]] AbHom incoming(size_t n) const {
      if (n == 0) {
        return AbHom::zero(CyclicSum(), group(0).generators);
      }
      return differential(n - 1);
    }

    // H^n = ker d^n / im d^{n-1}; needs n < max_degree.
    [[nodiscard]] FgAbGroup cohomology(size_t n) const {
      return cohomology_at(incoming(n), differential(n));
    }

   private:
    CoeffSystem               _coeffs;
    size_t                    _max_degree;
    std::vector<CochainGroup> _groups;
    std::vector<AbHom>        _differentials;
  };

  inline FgAbGroup leech_cohomology(CoeffSystem const& c, size_t n) {
    return LeechComplex(c, n + 1).cohomology(n);
  }

  inline FgAbGroup
  leech_cohomology(FinMonoid const& m, CoeffSystem const& c, size_t n) {
    if (!(m == c.monoid())) {
      throw Error(ErrorKind::invalid_argument,
                  "coefficient system is over a different monoid");
    }
    return leech_cohomology(c, n);
  }

}  // namespace leechcoh

#endif  // LEECHCOH_LEECH_HPP_
