// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// Test-only helpers: brute-force group enumeration, random monoids and
// coefficient systems, and an unnormalized bar-complex implementation of
// group cohomology. None of these go through the library's Leech or grid
// code paths, so they can serve as independent oracles.

#ifndef LEECHCOH_TESTS_SUPPORT_HPP_
#define LEECHCOH_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "leechcoh/abelian.hpp"
#include "leechcoh/coeff.hpp"
#include "leechcoh/monoid.hpp"

namespace leechcoh::testing {

  ////////////////////////////////////////////////////////////////////////
  // Element enumeration for finite CyclicSums
  ////////////////////////////////////////////////////////////////////////

  using Element = std::vector<long>;

  inline std::vector<Element> elements(CyclicSum const& g) {
    std::vector<Element> result{Element(g.size(), 0)};
    for (size_t i = 0; i < g.size(); ++i) {
      long const                order = g.order(i).get_si();
      std::vector<Element> next;
      for (auto const& x : result) {
        for (long v = 0; v < order; ++v) {
          Element y = x;
          y[i]      = v;
          next.push_back(y);
        }
      }
      result = std::move(next);
    }
    return result;
  }

  inline Element apply(AbHom const& h, Element const& x) {
    Element y(h.codomain().size(), 0);
    for (size_t i = 0; i < y.size(); ++i) {
      Integer s = 0;
      for (size_t j = 0; j < x.size(); ++j) {
        s += h.matrix()(i, j) * x[j];
      }
      h.codomain().reduce(i, s);
      y[i] = s.get_si();
    }
    return y;
  }

  inline Element add(CyclicSum const& g, Element x, Element const& y) {
    for (size_t i = 0; i < x.size(); ++i) {
      x[i] = (x[i] + y[i]) % g.order(i).get_si();
    }
    return x;
  }

  inline bool is_zero(Element const& x) {
    for (long v : x) {
      if (v != 0) {
        return false;
      }
    }
    return true;
  }

  // Subgroup generated by gens, by closure.
  inline std::set<Element> span(CyclicSum const&            g,
                                std::vector<Element> const& gens) {
    std::set<Element>    result{Element(g.size(), 0)};
    std::vector<Element> frontier(result.begin(), result.end());
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (auto const& x : frontier) {
        for (auto const& s : gens) {
          Element y = add(g, x, s);
          if (result.insert(y).second) {
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    return result;
  }

  // Order of the quotient K / I and its exponent, by enumeration. I must be
  // a subgroup of K.
  struct QuotientStats {
    long order;
    long exponent;
  };

  inline QuotientStats quotient_stats(CyclicSum const&         g,
                                      std::set<Element> const& k,
                                      std::set<Element> const& i) {
    long exponent = 1;
    for (auto const& x : k) {
      long    n = 1;
      Element y = x;
      while (i.count(y) == 0) {
        y = add(g, y, x);
        ++n;
      }
      exponent = std::lcm(exponent, n);
    }
    return {static_cast<long>(k.size() / i.size()), exponent};
  }

  inline std::set<Element> kernel_elements(AbHom const& h) {
    std::set<Element> result;
    for (auto const& x : elements(h.domain())) {
      if (is_zero(apply(h, x))) {
        result.insert(x);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random data
  ////////////////////////////////////////////////////////////////////////

  inline IntMatrix random_matrix(std::mt19937& rng,
                                 size_t        rows,
                                 size_t        cols,
                                 long          lo,
                                 long          hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix                           a(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) {
        a(i, j) = dist(rng);
      }
    }
    return a;
  }

  // Random semigroup table on n points, by rejection sampling.
  inline CayleyTable random_semigroup(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<size_t> dist(0, n - 1);
    while (true) {
      CayleyTable t(n, std::vector<element_index>(n));
      for (auto& row : t) {
        for (auto& x : row) {
          x = dist(rng);
        }
      }
      bool ok = true;
      for (size_t a = 0; a < n && ok; ++a) {
        for (size_t b = 0; b < n && ok; ++b) {
          for (size_t c = 0; c < n && ok; ++c) {
            ok = t[t[a][b]][c] == t[a][t[b][c]];
          }
        }
      }
      if (ok) {
        return t;
      }
    }
  }

  // Random monoid of order between 1 and max_order, drawn from the named
  // builders and from random semigroups with an identity adjoined.
  inline FinMonoid random_monoid(std::mt19937& rng, size_t max_order) {
    std::vector<FinMonoid> pool;
    for (size_t n = 1; n <= max_order; ++n) {
      pool.push_back(cyclic_group(n));
    }
    for (size_t n = 0; (size_t{1} << n) <= max_order; ++n) {
      pool.push_back(power_set_monoid(n));
    }
    if (max_order >= 4) {
      // Klein four-group
      pool.push_back(FinMonoid({"e", "a", "b", "c"},
                               0,
                               {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));
    }
    std::uniform_int_distribution<size_t> pick(0, 2 * pool.size() - 1);
    size_t const                          k = pick(rng);
    if (k < pool.size()) {
      return pool[k];
    }
    std::uniform_int_distribution<size_t> size(1, max_order - 1 > 0 ? max_order - 1 : 1);
    size_t const n = max_order > 1 ? size(rng) : 0;
    if (n == 0) {
      return cyclic_group(1);
    }
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) {
      names.push_back("s" + std::to_string(i));
    }
    return adjoin_identity(random_semigroup(rng, n), names);
  }

  // All maps s : M -> {-1, 0, 1} with s(e) = 1 and s(ab) = s(a) s(b).
  inline std::vector<std::vector<int>> scalar_characters(FinMonoid const& m) {
    std::vector<std::vector<int>> result;
    size_t const                  n = m.size();
    std::vector<int>              s(n, 0);
    size_t                        total = 1;
    for (size_t i = 0; i < n; ++i) {
      total *= 3;
    }
    for (size_t code = 0; code < total; ++code) {
      size_t c = code;
      for (size_t i = 0; i < n; ++i) {
        s[i] = static_cast<int>(c % 3) - 1;
        c /= 3;
      }
      if (s[m.identity()] != 1) {
        continue;
      }
      bool ok = true;
      for (size_t a = 0; a < n && ok; ++a) {
        for (size_t b = 0; b < n && ok; ++b) {
          ok = s[m.product(a, b)] == s[a] * s[b];
        }
      }
      if (ok) {
        result.push_back(s);
      }
    }
    return result;
  }

  // Action system where each element acts by a scalar from a random
  // multiplicative character M -> {-1, 0, 1}.
  inline CoeffSystem random_action_system(std::mt19937&    rng,
                                          FinMonoid const& m,
                                          FgAbGroup const& g) {
    auto const chars = scalar_characters(m);
    std::uniform_int_distribution<size_t> pick(0, chars.size() - 1);
    auto const& s = chars[pick(rng)];
    std::vector<AbHom> action;
    for (size_t a = 0; a < m.size(); ++a) {
      action.push_back(AbHom::scalar(CyclicSum(g), s[a]));
    }
    return monoid_action_system(m, g, action);
  }

  inline std::vector<FgAbGroup> coefficient_groups() {
    return {FgAbGroup::free(1), FgAbGroup::cyclic(2), FgAbGroup::cyclic(4),
            FgAbGroup(1, {2})};
  }

  ////////////////////////////////////////////////////////////////////////
  // Bar-complex oracle for group cohomology
  ////////////////////////////////////////////////////////////////////////

  // Unnormalized inhomogeneous cochains C^n = Map(G^n, Z^k) for a group G
  // acting on Z^k through matrices action[g]:
  //   (d f)(g_1..g_{n+1}) = g_1 . f(g_2..g_{n+1})
  //                         + sum_j (-1)^j f(.., g_j g_{j+1}, ..)
  //                         + (-1)^{n+1} f(g_1..g_n)
  // Returns H^0 .. H^{max_degree}.
  inline std::vector<FgAbGroup>
  bar_cohomology(FinMonoid const&              g,
                 size_t                        rank,
                 std::vector<IntMatrix> const& action,
                 size_t                        max_degree) {
    size_t const m = g.size();
    auto         power = [m](size_t n) {
      size_t r = 1;
      for (size_t i = 0; i < n; ++i) {
        r *= m;
      }
      return r;
    };
    auto decode = [m](size_t code, size_t n) {
      std::vector<element_index> t(n);
      for (size_t i = n; i > 0; --i) {
        t[i - 1] = code % m;
        code /= m;
      }
      return t;
    };
    auto encode = [m](std::vector<element_index> const& t) {
      size_t code = 0;
      for (auto x : t) {
        code = code * m + x;
      }
      return code;
    };
    std::vector<AbHom> d;
    for (size_t n = 0; n <= max_degree; ++n) {
      size_t const cols = power(n) * rank;
      size_t const rows = power(n + 1) * rank;
      IntMatrix    a(rows, cols);
      for (size_t code = 0; code < power(n + 1); ++code) {
        auto const t = decode(code, n + 1);
        size_t     r = code * rank;
        // g_1 . f(g_2..)
        {
          std::vector<element_index> in(t.begin() + 1, t.end());
          a.add_block(r, encode(in) * rank, action[t[0]], 1);
        }
        for (size_t j = 1; j <= n; ++j) {
          std::vector<element_index> in(t.begin(), t.begin() + (j - 1));
          in.push_back(g.product(t[j - 1], t[j]));
          in.insert(in.end(), t.begin() + (j + 1), t.end());
          a.add_block(r, encode(in) * rank, IntMatrix::identity(rank),
                      j % 2 == 0 ? 1 : -1);
        }
        {
          std::vector<element_index> in(t.begin(), t.end() - 1);
          a.add_block(r, encode(in) * rank, IntMatrix::identity(rank),
                      (n + 1) % 2 == 0 ? 1 : -1);
        }
      }
      d.emplace_back(CyclicSum(std::vector<Integer>(cols, 0)),
                     CyclicSum(std::vector<Integer>(rows, 0)), a);
    }
    std::vector<FgAbGroup> result;
    for (size_t n = 0; n <= max_degree; ++n) {
      AbHom const in = n == 0 ? AbHom::zero(CyclicSum(), d[0].domain()) : d[n - 1];
      result.push_back(cohomology_at(in, d[n]));
    }
    return result;
  }

}  // namespace leechcoh::testing

#endif  // LEECHCOH_TESTS_SUPPORT_HPP_
