// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// Finitely generated abelian groups and the integer linear algebra behind
// every kernel, image and subquotient in the library.
//
// Two descriptions of a group coexist:
//
//   * FgAbGroup is the canonical invariant-factor form Z^r + Z/d_1 + ... with
//     d_i | d_{i+1}. Two groups are isomorphic iff their FgAbGroups compare
//     equal; this is the value type reported to users.
//
//   * CyclicSum is a direct sum of cyclic groups with explicit generators,
//     each with an order (0 meaning infinite). Cochain groups are direct sums
//     of coefficient groups, so homomorphisms are written against CyclicSums
//     and no change of basis is ever needed to assemble them.
//
// AbHom stores a homomorphism between CyclicSums as an integer matrix with
// one column per domain generator. Entries in rows of finite order n are
// reduced into [0, n), which makes equality of matrices equality of maps.

#ifndef LEECHCOH_ABELIAN_HPP_
#define LEECHCOH_ABELIAN_HPP_

#include <algorithm>  // for all_of
#include <cctype>     // for isdigit, isspace
#include <cstddef>    // for size_t
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "error.hpp"
#include "matrix.hpp"

namespace leechcoh {

  ////////////////////////////////////////////////////////////////////////
  // FgAbGroup
  ////////////////////////////////////////////////////////////////////////

  class FgAbGroup {
   public:
    FgAbGroup() = default;

    // Canonicalizes: torsion entries equal to 1 are dropped, the rest are
    // rearranged into a divisibility chain. Negative entries are taken in
    // absolute value; a 0 entry counts as a free summand.
    FgAbGroup(size_t free_rank, std::vector<Integer> const& torsion)
        : _free_rank(free_rank) {
      std::vector<Integer> orders;
      for (auto const& t : torsion) {
        Integer a = abs(t);
        if (a == 0) {
          ++_free_rank;
        } else if (a != 1) {
          orders.push_back(a);
        }
      }
      // After pass i, orders[i] is the gcd of orders[i..] and divides all of
      // them, so one double pass gives the invariant factors.
      for (size_t i = 0; i < orders.size(); ++i) {
        for (size_t j = i + 1; j < orders.size(); ++j) {
          Integer g, l;
          mpz_gcd(g.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
          mpz_lcm(l.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
          orders[i] = g;
          orders[j] = l;
        }
      }
      for (auto& o : orders) {
        if (o != 1) {
          _torsion.push_back(std::move(o));
        }
      }
    }

    // Group from a list of cyclic orders (0 = infinite cyclic).
    static FgAbGroup from_orders(std::vector<Integer> const& orders) {
      return FgAbGroup(0, orders);
    }

    static FgAbGroup free(size_t rank) {
      return FgAbGroup(rank, {});
    }

    static FgAbGroup cyclic(Integer const& n) {
      return FgAbGroup(0, {n});
    }

    static FgAbGroup parse(std::string const& text);

    [[nodiscard]] size_t free_rank() const noexcept {
      return _free_rank;
    }

    [[nodiscard]] std::vector<Integer> const& torsion() const noexcept {
      return _torsion;
    }

    [[nodiscard]] bool is_trivial() const noexcept {
      return _free_rank == 0 && _torsion.empty();
    }

    [[nodiscard]] bool is_finite() const noexcept {
      return _free_rank == 0;
    }

    // Order of the group, 0 if infinite.
    [[nodiscard]] Integer order() const {
      if (_free_rank != 0) {
        return 0;
      }
      Integer result = 1;
      for (auto const& t : _torsion) {
        result *= t;
      }
      return result;
    }

    // Exponent (largest invariant factor), 0 if infinite, 1 if trivial.
    [[nodiscard]] Integer exponent() const {
      if (_free_rank != 0) {
        return 0;
      }
      return _torsion.empty() ? Integer(1) : _torsion.back();
    }

    // Orders of the canonical generators: free ones first, then torsion.
    [[nodiscard]] std::vector<Integer> generator_orders() const {
      std::vector<Integer> result(_free_rank, Integer(0));
      result.insert(result.end(), _torsion.begin(), _torsion.end());
      return result;
    }

    [[nodiscard]] std::string to_string() const {
      if (is_trivial()) {
        return "0";
      }
      std::string result;
      auto        append = [&result](std::string const& term) {
        if (!result.empty()) {
          result += " x ";
        }
        result += term;
      };
      if (_free_rank == 1) {
        append("Z");
      } else if (_free_rank > 1) {
        append("Z^" + std::to_string(_free_rank));
      }
      for (auto const& t : _torsion) {
        append("Z/" + t.get_str());
      }
      return result;
    }

    friend bool operator==(FgAbGroup const&, FgAbGroup const&) = default;

   private:
    size_t               _free_rank = 0;
    std::vector<Integer> _torsion;
  };

  inline FgAbGroup direct_sum(FgAbGroup const& a, FgAbGroup const& b) {
    std::vector<Integer> torsion = a.torsion();
    torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
    return FgAbGroup(a.free_rank() + b.free_rank(), torsion);
  }

  inline FgAbGroup FgAbGroup::parse(std::string const& text) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s += c;
      }
    }
    auto fail = [&text](std::string const& why) -> Error {
      return Error(ErrorKind::input,
                   "cannot parse group \"" + text + "\": " + why);
    };
    if (s.empty()) {
      throw fail("empty descriptor");
    }
    if (s == "0") {
      return FgAbGroup();
    }
    auto is_number = [](std::string const& t) {
      return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
    };
    size_t               free = 0;
    std::vector<Integer> torsion;
    size_t               pos = 0;
    while (pos <= s.size()) {
      size_t      next = s.find('x', pos);
      std::string term = s.substr(pos, next == std::string::npos
                                           ? std::string::npos
                                           : next - pos);
      if (term == "Z") {
        free += 1;
      } else if (term == "0") {
        // trivial summand
      } else if (term.rfind("Z^", 0) == 0 && is_number(term.substr(2))) {
        free += std::stoul(term.substr(2));
      } else if (term.rfind("Z/", 0) == 0 && is_number(term.substr(2))) {
        Integer d(term.substr(2));
        if (d == 0) {
          throw fail("Z/0 is not allowed, write Z");
        }
        torsion.push_back(d);
      } else {
        throw fail("unexpected term \"" + term + "\"");
      }
      if (next == std::string::npos) {
        break;
      }
      pos = next + 1;
    }
    return FgAbGroup(free, torsion);
  }

  ////////////////////////////////////////////////////////////////////////
  // CyclicSum
  ////////////////////////////////////////////////////////////////////////

  class CyclicSum {
   public:
    CyclicSum() = default;

    explicit CyclicSum(std::vector<Integer> orders) : _orders(std::move(orders)) {
      for (auto& o : _orders) {
        o = abs(o);
      }
    }

    // The canonical generators of g.
    explicit CyclicSum(FgAbGroup const& g) : _orders(g.generator_orders()) {}

    static CyclicSum direct_sum(std::vector<CyclicSum> const& parts) {
      std::vector<Integer> orders;
      for (auto const& p : parts) {
        orders.insert(orders.end(), p._orders.begin(), p._orders.end());
      }
      return CyclicSum(std::move(orders));
    }

    [[nodiscard]] size_t size() const noexcept {
      return _orders.size();
    }

    [[nodiscard]] Integer const& order(size_t i) const {
      return _orders[i];
    }

    [[nodiscard]] std::vector<Integer> const& orders() const noexcept {
      return _orders;
    }

    [[nodiscard]] FgAbGroup canonical() const {
      return FgAbGroup::from_orders(_orders);
    }

    // Reduces x into the canonical representative for generator i.
    void reduce(size_t i, Integer& x) const {
      if (sgn(_orders[i]) != 0) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), _orders[i].get_mpz_t());
      }
    }

    // Relation lattice: one column order_j * e_j per finite generator j.
    [[nodiscard]] IntMatrix relations() const {
      size_t count = 0;
      for (auto const& o : _orders) {
        count += (sgn(o) != 0);
      }
      IntMatrix result(_orders.size(), count);
      size_t    c = 0;
      for (size_t i = 0; i < _orders.size(); ++i) {
        if (sgn(_orders[i]) != 0) {
          result(i, c++) = _orders[i];
        }
      }
      return result;
    }

    friend bool operator==(CyclicSum const&, CyclicSum const&) = default;

   private:
    std::vector<Integer> _orders;
  };

  ////////////////////////////////////////////////////////////////////////
  // AbHom
  ////////////////////////////////////////////////////////////////////////

  class AbHom {
   public:
    AbHom() = default;

    AbHom(CyclicSum domain, CyclicSum codomain, IntMatrix matrix)
        : _domain(std::move(domain)),
          _codomain(std::move(codomain)),
          _matrix(std::move(matrix)) {
      if (_matrix.rows() != _codomain.size()
          || _matrix.cols() != _domain.size()) {
        throw Error(ErrorKind::shape_mismatch,
                    "matrix is " + _matrix.shape() + " but the map goes from "
                        + std::to_string(_domain.size()) + " to "
                        + std::to_string(_codomain.size()) + " generators");
      }
      for (size_t j = 0; j < _domain.size(); ++j) {
        Integer const& d = _domain.order(j);
        if (sgn(d) == 0) {
          continue;
        }
        for (size_t i = 0; i < _codomain.size(); ++i) {
          Integer t = d * _matrix(i, j);
          _codomain.reduce(i, t);
          if (sgn(t) != 0) {
            throw Error(ErrorKind::not_well_defined,
                        "generator " + std::to_string(j) + " has order "
                            + d.get_str() + " but its image does not (row "
                            + std::to_string(i) + ")");
          }
        }
      }
      normalize();
    }

    AbHom(FgAbGroup const& domain, FgAbGroup const& codomain, IntMatrix matrix)
        : AbHom(CyclicSum(domain), CyclicSum(codomain), std::move(matrix)) {}

    static AbHom zero(CyclicSum const& domain, CyclicSum const& codomain) {
      return AbHom(domain, codomain, IntMatrix(codomain.size(), domain.size()));
    }

    static AbHom identity(CyclicSum const& g) {
      return AbHom(g, g, IntMatrix::identity(g.size()));
    }

    static AbHom scalar(CyclicSum const& g, Integer const& k) {
      return AbHom(g, g, k * IntMatrix::identity(g.size()));
    }

    [[nodiscard]] CyclicSum const& domain() const noexcept {
      return _domain;
    }

    [[nodiscard]] CyclicSum const& codomain() const noexcept {
      return _codomain;
    }

    [[nodiscard]] IntMatrix const& matrix() const noexcept {
      return _matrix;
    }

    [[nodiscard]] bool is_zero() const {
      return _matrix.is_zero();
    }

    // outer o inner
    friend AbHom compose(AbHom const& outer, AbHom const& inner) {
      if (!(inner.codomain() == outer.domain())) {
        throw Error(ErrorKind::shape_mismatch,
                    "cannot compose: inner codomain differs from outer domain");
      }
      AbHom result;
      result._domain   = inner._domain;
      result._codomain = outer._codomain;
      result._matrix   = outer._matrix * inner._matrix;
      result.normalize();
      return result;
    }

    friend AbHom operator+(AbHom const& a, AbHom const& b) {
      a.check_parallel(b);
      AbHom result(a);
      result._matrix = a._matrix + b._matrix;
      result.normalize();
      return result;
    }

    friend AbHom operator-(AbHom const& a, AbHom const& b) {
      a.check_parallel(b);
      AbHom result(a);
      result._matrix = a._matrix - b._matrix;
      result.normalize();
      return result;
    }

    friend AbHom operator-(AbHom const& a) {
      AbHom result(a);
      result._matrix = Integer(-1) * a._matrix;
      result.normalize();
      return result;
    }

    friend bool operator==(AbHom const&, AbHom const&) = default;

   private:
    void check_parallel(AbHom const& other) const {
      if (!(_domain == other._domain) || !(_codomain == other._codomain)) {
        throw Error(ErrorKind::shape_mismatch,
                    "homomorphisms have different domains or codomains");
      }
    }

    void normalize() {
      for (size_t i = 0; i < _matrix.rows(); ++i) {
        if (sgn(_codomain.order(i)) == 0) {
          continue;
        }
        for (size_t j = 0; j < _matrix.cols(); ++j) {
          _codomain.reduce(i, _matrix(i, j));
        }
      }
    }

    CyclicSum _domain;
    CyclicSum _codomain;
    IntMatrix _matrix;
  };

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  // U * A * V = D with U, V unimodular and D diagonal, nonnegative, with
  // d_1 | d_2 | ... and zeros at the tail.
  struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    [[nodiscard]] size_t rank() const {
      size_t r = 0;
      while (r < D.rows() && r < D.cols() && sgn(D(r, r)) != 0) {
        ++r;
      }
      return r;
    }

    [[nodiscard]] std::vector<Integer> diagonal() const {
      std::vector<Integer> result;
      for (size_t i = 0; i < D.rows() && i < D.cols(); ++i) {
        result.push_back(D(i, i));
      }
      return result;
    }
  };

  namespace detail {

    // Brings a to diagonal form in place by unimodular row and column
    // operations, accumulating them into u (rows) and v (columns) when those
    // are non-null. Returns the rank; the nonzero diagonal entries occupy
    // positions 0 .. rank - 1. Pivots are chosen as the entry of smallest
    // absolute value in the remaining block, first in row-major order, so
    // the result only depends on the input.
    inline size_t diagonalize(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
      size_t const m = a.rows();
      size_t const n = a.cols();
      size_t       t = 0;
      for (; t < m && t < n; ++t) {
        size_t pi = m, pj = n;
        for (size_t i = t; i < m; ++i) {
          for (size_t j = t; j < n; ++j) {
            Integer const& x = a(i, j);
            if (sgn(x) != 0
                && (pi == m || mpz_cmpabs(x.get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
              pi = i;
              pj = j;
            }
          }
        }
        if (pi == m) {
          break;
        }
        while (true) {
          if (pi != t) {
            a.swap_rows(t, pi);
            if (u != nullptr) {
              u->swap_rows(t, pi);
            }
          }
          if (pj != t) {
            a.swap_cols(t, pj);
            if (v != nullptr) {
              v->swap_cols(t, pj);
            }
          }
          Integer q;
          for (size_t i = t + 1; i < m; ++i) {
            if (sgn(a(i, t)) != 0) {
              mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
              q = -q;
              a.add_row_multiple(i, t, q);
              if (u != nullptr) {
                u->add_row_multiple(i, t, q);
              }
            }
          }
          for (size_t j = t + 1; j < n; ++j) {
            if (sgn(a(t, j)) != 0) {
              mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
              q = -q;
              a.add_col_multiple(j, t, q);
              if (v != nullptr) {
                v->add_col_multiple(j, t, q);
              }
            }
          }
          // Remainders left in row t or column t are strictly smaller than
          // the pivot; promote the smallest (row-major first) and repeat.
          pi = m;
          pj = n;
          for (size_t j = t + 1; j < n; ++j) {
            if (sgn(a(t, j)) != 0 && (pi == m || mpz_cmpabs(a(t, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
              pi = t;
              pj = j;
            }
          }
          for (size_t i = t + 1; i < m; ++i) {
            if (sgn(a(i, t)) != 0 && (pi == m || mpz_cmpabs(a(i, t).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
              pi = i;
              pj = t;
            }
          }
          if (pi == m) {
            break;
          }
        }
      }
      return t;
    }

    // rows (i, j) of m  <-  [[x, y], [p, q]] * rows (i, j)
    inline void transform_rows(IntMatrix& m,
                               size_t     i,
                               size_t     j,
                               Integer const& x,
                               Integer const& y,
                               Integer const& p,
                               Integer const& q) {
      for (size_t c = 0; c < m.cols(); ++c) {
        Integer ri = m(i, c), rj = m(j, c);
        m(i, c)    = x * ri + y * rj;
        m(j, c)    = p * ri + q * rj;
      }
    }

    // cols (i, j) of m  <-  cols (i, j) * [[x, y], [p, q]]
    inline void transform_cols(IntMatrix& m,
                               size_t     i,
                               size_t     j,
                               Integer const& x,
                               Integer const& y,
                               Integer const& p,
                               Integer const& q) {
      for (size_t r = 0; r < m.rows(); ++r) {
        Integer ci = m(r, i), cj = m(r, j);
        m(r, i)    = x * ci + p * cj;
        m(r, j)    = y * ci + q * cj;
      }
    }

    // Basis, as columns, of the integer null space {x : m x = 0}.
    inline IntMatrix null_space(IntMatrix m) {
      IntMatrix    v    = IntMatrix::identity(m.cols());
      size_t const rank = diagonalize(m, nullptr, &v);
      return v.block(0, rank, v.rows(), v.cols() - rank);
    }

    // L / N where the columns of l and n generate lattices in Z^d and
    // span(n) is contained in span(l).
    inline FgAbGroup subquotient(IntMatrix const& l, IntMatrix const& n) {
      if (l.rows() != n.rows()) {
        throw Error(ErrorKind::shape_mismatch,
                    "subquotient of lattices in different ambient ranks");
      }
      size_t const d = l.rows();
      IntMatrix    a = l;
      IntMatrix    u = IntMatrix::identity(d);
      size_t const r = diagonalize(a, &u, nullptr);
      // With U L V = S, a vector g of span(L) has coordinates (U g)_i / s_i
      // in the basis formed by the first r columns of L V.
      IntMatrix const un = u * n;
      IntMatrix       x(r, n.cols());
      for (size_t k = 0; k < n.cols(); ++k) {
        for (size_t i = 0; i < d; ++i) {
          Integer const& y = un(i, k);
          if (i >= r) {
            if (sgn(y) != 0) {
              throw Error(ErrorKind::shape_mismatch,
                          "subquotient: generator outside the ambient lattice");
            }
            continue;
          }
          if (!mpz_divisible_p(y.get_mpz_t(), a(i, i).get_mpz_t())) {
            throw Error(ErrorKind::shape_mismatch,
                        "subquotient: generator outside the ambient lattice");
          }
          mpz_divexact(x(i, k).get_mpz_t(), y.get_mpz_t(), a(i, i).get_mpz_t());
        }
      }
      size_t const         rho = diagonalize(x, nullptr, nullptr);
      std::vector<Integer> orders(r - rho, Integer(0));
      for (size_t i = 0; i < rho; ++i) {
        orders.push_back(x(i, i));
      }
      return FgAbGroup::from_orders(orders);
    }

    // The lattice {x in Z^n : h x lies in the relation lattice of the
    // codomain}, i.e. the preimage of ker h in the free cover of the domain.
    inline IntMatrix kernel_lattice(AbHom const& h) {
      IntMatrix const rel = h.codomain().relations();
      if (rel.cols() == 0) {
        return null_space(h.matrix());
      }
      IntMatrix const ns = null_space(IntMatrix::hcat(h.matrix(), rel));
      return ns.block(0, 0, h.domain().size(), ns.cols());
    }

  }  // namespace detail

  inline SmithDecomposition smith_normal_form(IntMatrix const& a) {
    SmithDecomposition result{IntMatrix::identity(a.rows()),
                              a,
                              IntMatrix::identity(a.cols())};
    IntMatrix&   u = result.U;
    IntMatrix&   d = result.D;
    IntMatrix&   v = result.V;
    size_t const r = detail::diagonalize(d, &u, &v);
    for (size_t i = 0; i < r; ++i) {
      if (sgn(d(i, i)) < 0) {
        d.negate_row(i);
        u.negate_row(i);
      }
    }
    // Divisibility chain: for a = d_i, b = d_j with g = gcd = a x + b y,
    //   [[x, y], [-b/g, a/g]] diag(a, b) [[1, -y b/g], [1, x a/g]]
    //     = diag(g, a b / g)
    // and both outer matrices have determinant 1.
    for (size_t i = 0; i < r; ++i) {
      for (size_t j = i + 1; j < r; ++j) {
        Integer const& a_ = d(i, i);
        Integer const& b_ = d(j, j);
        if (mpz_divisible_p(b_.get_mpz_t(), a_.get_mpz_t())) {
          continue;
        }
        Integer g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a_.get_mpz_t(),
                   b_.get_mpz_t());
        Integer const ag = a_ / g;
        Integer const bg = b_ / g;
        detail::transform_rows(u, i, j, x, y, -bg, ag);
        detail::transform_cols(v, i, j, 1, -y * bg, 1, x * ag);
        Integer const lcm = ag * b_;
        d(i, i)           = g;
        d(j, j)           = lcm;
      }
    }
    return result;
  }

  // Abstract kernel of h.
  inline FgAbGroup kernel(AbHom const& h) {
    return detail::subquotient(detail::kernel_lattice(h),
                               h.domain().relations());
  }

  // Abstract image of h.
  inline FgAbGroup image(AbHom const& h) {
    IntMatrix const rel = h.codomain().relations();
    return detail::subquotient(IntMatrix::hcat(h.matrix(), rel), rel);
  }

  inline FgAbGroup cokernel(AbHom const& h) {
    IntMatrix const rel = h.codomain().relations();
    return detail::subquotient(IntMatrix::identity(h.codomain().size()),
                               IntMatrix::hcat(h.matrix(), rel));
  }

  // ker(d_out) / im(d_in) for d_in : A -> B, d_out : B -> C.
  inline FgAbGroup cohomology_at(AbHom const& d_in, AbHom const& d_out) {
    if (!(d_in.codomain() == d_out.domain())) {
      throw Error(ErrorKind::shape_mismatch,
                  "codomain of the incoming map is not the domain of the "
                  "outgoing map");
    }
    if (!compose(d_out, d_in).is_zero()) {
      throw Error(ErrorKind::composition_nonzero,
                  "outgoing map composed with incoming map is nonzero");
    }
    return detail::subquotient(
        detail::kernel_lattice(d_out),
        IntMatrix::hcat(d_in.matrix(), d_in.codomain().relations()));
  }

}  // namespace leechcoh

#endif  // LEECHCOH_ABELIAN_HPP_
