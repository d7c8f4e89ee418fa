// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// When every square of the grid commutes the floors and the vertical family
// form a double complex, and its total complex
//
//   Tot^k = sum over p + q = k of C^q(floor p)
//
// carries D = (-1)^p d_h + d_v on the summand of floor p. The sign sits on
// the horizontal map so that a commuting square gives D o D = 0 and a single
// floor gives back its Leech complex unchanged.

#ifndef LEECHCOH_TOTALCX_HPP_
#define LEECHCOH_TOTALCX_HPP_

#include <algorithm>   // for min
#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "abelian.hpp"
#include "error.hpp"
#include "grid.hpp"
#include "leech.hpp"

namespace leechcoh {

  // commutes[n][p] compares vertical(n, p + 1) o d(n, p) with
  // d(n + 1, p) o vertical(n, p).
  struct DoubleComplexView {
    std::vector<std::vector<bool>> commutes;
    std::optional<Couple>          first_failure;

    [[nodiscard]] bool is_double_complex() const noexcept {
      return !first_failure.has_value();
    }
  };

  namespace detail {

    inline std::vector<LeechComplex> floor_complexes(GridSpec const& g,
                                                     size_t          floors,
                                                     size_t          max_degree,
                                                     bool            shrink) {
      std::vector<LeechComplex> result;
      for (size_t n = 0; n < floors; ++n) {
        result.emplace_back(g.floors[n], shrink ? max_degree - n : max_degree);
      }
      return result;
    }

    // Squares whose corners all lie in cx; square (n, p) needs degree p + 1
    // on floors n and n + 1.
    inline DoubleComplexView
    check_squares(std::vector<LeechComplex> const& cx,
                  VerticalFamily const&            f,
                  std::function<bool(size_t, size_t)> const& wanted) {
      DoubleComplexView view;
      for (size_t n = 0; n + 1 < cx.size(); ++n) {
        view.commutes.emplace_back();
        size_t const top = std::min(cx[n].max_degree(), cx[n + 1].max_degree());
        for (size_t p = 0; p < top; ++p) {
          if (!wanted(n, p)) {
            continue;
          }
          auto vertical = [&](size_t q) {
            return f.at(n, q, cx[n].group(q).generators, cx[n + 1].group(q).generators);
          };
          bool const ok = compose(vertical(p + 1), cx[n].differential(p))
                          == compose(cx[n + 1].differential(p), vertical(p));
          view.commutes.back().push_back(ok);
          if (!ok && !view.first_failure) {
            view.first_failure = Couple{n, p};
          }
        }
      }
      return view;
    }

  }  // namespace detail

  // Checks every square with corners up to degree p_max.
  inline DoubleComplexView
  is_double_complex(GridSpec const& g, VerticalFamily const& f, size_t p_max) {
    validate_grid(g);
    check_column_condition(g, f);
    auto const cx = detail::floor_complexes(g, g.floors.size(), p_max, false);
    return detail::check_squares(cx, f, [](size_t, size_t) { return true; });
  }

  struct TotalComplex {
    std::vector<std::vector<Couple>> summands;  // (floor, degree) per Tot^k
    std::vector<CyclicSum>           groups;
    std::vector<AbHom>               differentials;

    [[nodiscard]] size_t max_degree() const noexcept {
      return groups.size() - 1;
    }

    [[nodiscard]] AbHom incoming(size_t k) const {
      if (k == 0) {
        return AbHom::zero(CyclicSum(), groups[0]);
      }
      return differentials[k - 1];
    }

    [[nodiscard]] FgAbGroup cohomology(size_t k) const {
      return cohomology_at(incoming(k), differentials.at(k));
    }
  };

  // Tot^0 ... Tot^{max_degree} and D^0 ... D^{max_degree - 1}.
  inline TotalComplex total_complex(GridSpec const&       g,
                                    VerticalFamily const& f,
                                    size_t                max_degree) {
    validate_grid(g);
    check_column_condition(g, f);
    size_t const floors = std::min(g.floors.size(), max_degree + 1);
    auto const   cx     = detail::floor_complexes(g, floors, max_degree, true);
    // squares that meet D o D inside the truncation
    auto const view = detail::check_squares(
        cx, f, [&](size_t n, size_t p) { return n + p + 2 <= max_degree; });
    if (!view.is_double_complex()) {
      throw Error(ErrorKind::not_a_double_complex,
                  "the square at " + view.first_failure->to_string()
                      + " does not commute");
    }

    TotalComplex tot;
    std::vector<std::vector<size_t>> offsets;  // per degree, per summand
    for (size_t k = 0; k <= max_degree; ++k) {
      tot.summands.emplace_back();
      offsets.emplace_back();
      std::vector<CyclicSum> parts;
      size_t                 offset = 0;
      for (size_t p = 0; p < floors && p <= k; ++p) {
        tot.summands.back().push_back({p, k - p});
        offsets.back().push_back(offset);
        parts.push_back(cx[p].group(k - p).generators);
        offset += parts.back().size();
      }
      tot.groups.push_back(CyclicSum::direct_sum(parts));
    }
    for (size_t k = 0; k < max_degree; ++k) {
      IntMatrix d(tot.groups[k + 1].size(), tot.groups[k].size());
      for (size_t s = 0; s < tot.summands[k].size(); ++s) {
        auto const [p, q] = tot.summands[k][s];
        size_t const col  = offsets[k][s];
        // same floor, one degree up: summand s of Tot^{k+1}
        d.add_block(offsets[k + 1][s], col, cx[p].differential(q).matrix(),
                    p % 2 == 0 ? 1 : -1);
        if (p + 1 < floors) {
          AbHom const v = f.at(p, q, cx[p].group(q).generators,
                               cx[p + 1].group(q).generators);
          d.add_block(offsets[k + 1][s + 1], col, v.matrix(), 1);
        }
      }
      tot.differentials.emplace_back(tot.groups[k], tot.groups[k + 1], std::move(d));
      if (k > 0
          && !compose(tot.differentials[k], tot.differentials[k - 1]).is_zero()) {
        throw Error(ErrorKind::composition_nonzero,
                    "D^" + std::to_string(k) + " o D^" + std::to_string(k - 1)
                        + " is nonzero");
      }
    }
    return tot;
  }

  // H^0 ... H^{count - 1} of the total complex.
  inline std::vector<FgAbGroup> total_cohomology(GridSpec const&       g,
                                                 VerticalFamily const& f,
                                                 size_t                count) {
    if (count == 0) {
      return {};
    }
    auto const             tot = total_complex(g, f, count);
    std::vector<FgAbGroup> result;
    for (size_t k = 0; k < count; ++k) {
      result.push_back(tot.cohomology(k));
    }
    return result;
  }

}  // namespace leechcoh

#endif  // LEECHCOH_TOTALCX_HPP_
