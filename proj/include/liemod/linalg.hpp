#ifndef LIEMOD_LINALG_HPP
#define LIEMOD_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace liemod
{

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
///
/// GMP keeps every mpq_class produced by arithmetic in lowest terms, so the
/// entries stay reduced as long as they are only built from integers and
/// arithmetic results.
class RationalMatrix
{
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const RationalVector &d);
  /// Matrix whose columns are the given vectors (all of equal length).
  static RationalMatrix from_columns(const std::vector<RationalVector> &cols,
                                     std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const
  {
    return data_[i * cols_ + j];
  }

  RationalVector row(std::size_t i) const;
  RationalVector column(std::size_t j) const;

  bool is_zero() const;
  Rational trace() const;
  RationalMatrix transpose() const;
  /// Submatrix on the given row and column index lists.
  RationalMatrix restrict(const std::vector<std::size_t> &row_idx,
                          const std::vector<std::size_t> &col_idx) const;

  RationalMatrix &operator+=(const RationalMatrix &o);
  RationalMatrix &operator-=(const RationalMatrix &o);
  RationalMatrix &operator*=(const Rational &s);

  friend bool operator==(const RationalMatrix &a, const RationalMatrix &b)
  {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix &b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix &b);
RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix operator*(const Rational &s, RationalMatrix a);
RationalVector operator*(const RationalMatrix &a, const RationalVector &v);

/// a*b - b*a
RationalMatrix commutator(const RationalMatrix &a, const RationalMatrix &b);

/// Rank over Q by fraction-free (Bareiss) elimination on an integer copy.
std::size_t rank(const RationalMatrix &m);

/// Basis of the right null space; length is cols - rank.
std::vector<RationalVector> kernel_basis(const RationalMatrix &m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix &m);

/// Some x with m*x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix &m, const RationalVector &b);

/// Inverse of a square matrix; throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix &m);

/// Indices of a maximal linearly independent subset of the columns, chosen
/// greedily from the left.
std::vector<std::size_t> independent_columns(const RationalMatrix &m);

Rational dot(const RationalVector &a, const RationalVector &b);
bool is_zero(const RationalVector &v);

} // namespace liemod

#endif
