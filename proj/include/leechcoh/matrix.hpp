// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// Dense integer matrices over arbitrary-precision integers. Everything in the
// library that represents a homomorphism ends up here, so the type stays
// deliberately small: storage, elementary row/column operations, products.

#ifndef LEECHCOH_MATRIX_HPP_
#define LEECHCOH_MATRIX_HPP_

#include <gmpxx.h>  // for mpz_class

#include <cstddef>           // for size_t
#include <initializer_list>  // for initializer_list
#include <sstream>           // for ostringstream
#include <string>            // for string
#include <utility>           // for swap
#include <vector>            // for vector

#include "error.hpp"

namespace leechcoh {

  using Integer = mpz_class;

  class IntMatrix {
   public:
    IntMatrix() = default;

    IntMatrix(size_t rows, size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
        : IntMatrix() {
      _rows = rows.size();
      _cols = _rows == 0 ? 0 : rows.begin()->size();
      _data.reserve(_rows * _cols);
      for (auto const& row : rows) {
        if (row.size() != _cols) {
          throw Error(ErrorKind::shape_mismatch, "ragged matrix literal");
        }
        for (long x : row) {
          _data.emplace_back(x);
        }
      }
    }

    static IntMatrix identity(size_t n) {
      IntMatrix result(n, n);
      for (size_t i = 0; i < n; ++i) {
        result(i, i) = 1;
      }
      return result;
    }

    static IntMatrix
    from_rows(std::vector<std::vector<Integer>> const& rows, size_t cols) {
      IntMatrix result(rows.size(), cols);
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
          throw Error(ErrorKind::shape_mismatch,
                      "row " + std::to_string(i) + " has "
                          + std::to_string(rows[i].size())
                          + " entries, expected " + std::to_string(cols));
        }
        for (size_t j = 0; j < cols; ++j) {
          result(i, j) = rows[i][j];
        }
      }
      return result;
    }

    [[nodiscard]] size_t rows() const noexcept {
      return _rows;
    }

    [[nodiscard]] size_t cols() const noexcept {
      return _cols;
    }

    Integer& operator()(size_t r, size_t c) {
      return _data[r * _cols + c];
    }

    Integer const& operator()(size_t r, size_t c) const {
      return _data[r * _cols + c];
    }

    [[nodiscard]] bool is_zero() const {
      for (auto const& x : _data) {
        if (sgn(x) != 0) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] bool is_square() const noexcept {
      return _rows == _cols;
    }

    void swap_rows(size_t a, size_t b) {
      if (a == b) {
        return;
      }
      for (size_t j = 0; j < _cols; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
      }
    }

    void swap_cols(size_t a, size_t b) {
      if (a == b) {
        return;
      }
      for (size_t i = 0; i < _rows; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
      }
    }

    // row[dst] += k * row[src]
    void add_row_multiple(size_t dst, size_t src, Integer const& k) {
      if (sgn(k) == 0) {
        return;
      }
      for (size_t j = 0; j < _cols; ++j) {
        Integer const& s = (*this)(src, j);
        if (sgn(s) != 0) {
          (*this)(dst, j) += k * s;
        }
      }
    }

    // col[dst] += k * col[src]
    void add_col_multiple(size_t dst, size_t src, Integer const& k) {
      if (sgn(k) == 0) {
        return;
      }
      for (size_t i = 0; i < _rows; ++i) {
        Integer const& s = (*this)(i, src);
        if (sgn(s) != 0) {
          (*this)(i, dst) += k * s;
        }
      }
    }

    void negate_row(size_t r) {
      for (size_t j = 0; j < _cols; ++j) {
        (*this)(r, j) = -(*this)(r, j);
      }
    }

    void negate_col(size_t c) {
      for (size_t i = 0; i < _rows; ++i) {
        (*this)(i, c) = -(*this)(i, c);
      }
    }

    [[nodiscard]] IntMatrix transpose() const {
      IntMatrix result(_cols, _rows);
      for (size_t i = 0; i < _rows; ++i) {
        for (size_t j = 0; j < _cols; ++j) {
          result(j, i) = (*this)(i, j);
        }
      }
      return result;
    }

    // Copy of the block [r0, r0 + nr) x [c0, c0 + nc).
    [[nodiscard]] IntMatrix
    block(size_t r0, size_t c0, size_t nr, size_t nc) const {
      IntMatrix result(nr, nc);
      for (size_t i = 0; i < nr; ++i) {
        for (size_t j = 0; j < nc; ++j) {
          result(i, j) = (*this)(r0 + i, c0 + j);
        }
      }
      return result;
    }

    // this[r0.., c0..] += sign * other
    void add_block(size_t r0, size_t c0, IntMatrix const& other, long sign) {
      for (size_t i = 0; i < other.rows(); ++i) {
        for (size_t j = 0; j < other.cols(); ++j) {
          Integer const& x = other(i, j);
          if (sgn(x) != 0) {
            if (sign == 1) {
              (*this)(r0 + i, c0 + j) += x;
            } else {
              (*this)(r0 + i, c0 + j) += sign * x;
            }
          }
        }
      }
    }

    // Columns side by side; row counts must agree.
    [[nodiscard]] static IntMatrix hcat(IntMatrix const& a, IntMatrix const& b) {
      if (a.rows() != b.rows()) {
        throw Error(ErrorKind::shape_mismatch,
                    "hcat of matrices with different row counts");
      }
      IntMatrix result(a.rows(), a.cols() + b.cols());
      for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
          result(i, j) = a(i, j);
        }
        for (size_t j = 0; j < b.cols(); ++j) {
          result(i, a.cols() + j) = b(i, j);
        }
      }
      return result;
    }

    friend bool operator==(IntMatrix const& a, IntMatrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
      if (a.cols() != b.rows()) {
        throw Error(ErrorKind::shape_mismatch,
                    "cannot multiply " + a.shape() + " by " + b.shape());
      }
      IntMatrix result(a.rows(), b.cols());
      for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) {
          Integer const& x = a(i, k);
          if (sgn(x) == 0) {
            continue;
          }
          for (size_t j = 0; j < b.cols(); ++j) {
            Integer const& y = b(k, j);
            if (sgn(y) != 0) {
              result(i, j) += x * y;
            }
          }
        }
      }
      return result;
    }

    friend IntMatrix operator+(IntMatrix a, IntMatrix const& b) {
      a.check_same_shape(b);
      for (size_t i = 0; i < a._data.size(); ++i) {
        a._data[i] += b._data[i];
      }
      return a;
    }

    friend IntMatrix operator-(IntMatrix a, IntMatrix const& b) {
      a.check_same_shape(b);
      for (size_t i = 0; i < a._data.size(); ++i) {
        a._data[i] -= b._data[i];
      }
      return a;
    }

    friend IntMatrix operator*(Integer const& k, IntMatrix a) {
      for (auto& x : a._data) {
        x *= k;
      }
      return a;
    }

    [[nodiscard]] std::vector<Integer> column(size_t c) const {
      std::vector<Integer> result(_rows);
      for (size_t i = 0; i < _rows; ++i) {
        result[i] = (*this)(i, c);
      }
      return result;
    }

    [[nodiscard]] std::string shape() const {
      return std::to_string(_rows) + "x" + std::to_string(_cols);
    }

    [[nodiscard]] std::string to_string() const {
      std::ostringstream os;
      os << "[";
      for (size_t i = 0; i < _rows; ++i) {
        os << (i == 0 ? "[" : ", [");
        for (size_t j = 0; j < _cols; ++j) {
          os << (j == 0 ? "" : ", ") << (*this)(i, j);
        }
        os << "]";
      }
      os << "]";
      return os.str();
    }

   private:
    void check_same_shape(IntMatrix const& other) const {
      if (_rows != other._rows || _cols != other._cols) {
        throw Error(ErrorKind::shape_mismatch,
                    "shapes " + shape() + " and " + other.shape() + " differ");
      }
    }

    size_t               _rows = 0;
    size_t               _cols = 0;
    std::vector<Integer> _data;
  };

  // Exact determinant by fraction-free (Bareiss) elimination.
  inline Integer determinant(IntMatrix a) {
    if (!a.is_square()) {
      throw Error(ErrorKind::shape_mismatch, "determinant of non-square matrix");
    }
    size_t const n    = a.rows();
    Integer      sign = 1;
    Integer      prev = 1;
    for (size_t k = 0; k < n; ++k) {
      if (sgn(a(k, k)) == 0) {
        size_t p = k + 1;
        while (p < n && sgn(a(p, k)) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        a.swap_rows(k, p);
        sign = -sign;
      }
      for (size_t i = k + 1; i < n; ++i) {
        for (size_t j = k + 1; j < n; ++j) {
          Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          a(i, j) = t;
        }
        a(i, k) = 0;
      }
      prev = a(k, k);
    }
    return n == 0 ? Integer(1) : Integer(sign * a(n - 1, n - 1));
  }

}  // namespace leechcoh

#endif  // LEECHCOH_MATRIX_HPP_
