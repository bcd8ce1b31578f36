#include "liemod/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace liemod
{

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("RationalMatrix: ragged initializer");
    for (long x : r)
      data_.emplace_back(x);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector &d)
{
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector> &cols,
                                            std::size_t rows)
{
  RationalMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = cols[j][i];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const
{
  return RationalVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RationalVector RationalMatrix::column(std::size_t j) const
{
  RationalVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

bool RationalMatrix::is_zero() const
{
  for (const auto &x : data_)
    if (sgn(x) != 0)
      return false;
  return true;
}

Rational RationalMatrix::trace() const
{
  if (!square())
    throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::transpose() const
{
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::restrict(const std::vector<std::size_t> &row_idx,
                                        const std::vector<std::size_t> &col_idx) const
{
  RationalMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

RationalMatrix &RationalMatrix::operator+=(const RationalMatrix &o)
{
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(o.data_[k]) != 0)
      data_[k] += o.data_[k];
  return *this;
}

RationalMatrix &RationalMatrix::operator-=(const RationalMatrix &o)
{
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(o.data_[k]) != 0)
      data_[k] -= o.data_[k];
  return *this;
}

RationalMatrix &RationalMatrix::operator*=(const Rational &s)
{
  for (auto &x : data_)
    if (sgn(x) != 0)
      x *= s;
  return *this;
}

std::string RationalMatrix::to_string() const
{
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix &b)
{
  a += b;
  return a;
}

RationalMatrix operator-(RationalMatrix a, const RationalMatrix &b)
{
  a -= b;
  return a;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b)
{
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  Rational t;
  // Representation matrices are sparse; skipping zeros dominates the cost.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational &aik = a(i, k);
      if (sgn(aik) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational &bkj = b(k, j);
        if (sgn(bkj) == 0)
          continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  return c;
}

RationalMatrix operator*(const Rational &s, RationalMatrix a)
{
  a *= s;
  return a;
}

RationalVector operator*(const RationalMatrix &a, const RationalVector &v)
{
  if (a.cols() != v.size())
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  RationalVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0)
        r[i] += a(i, j) * v[j];
  return r;
}

RationalMatrix commutator(const RationalMatrix &a, const RationalMatrix &b)
{
  RationalMatrix c = a * b;
  c -= b * a;
  return c;
}

std::size_t rank(const RationalMatrix &m)
{
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<Integer> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(m(i, j)) != 0)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(m(i, j)) != 0)
        a[i * cols + j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer & { return a[i * cols + j]; };

  Integer prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(at(p, c)) == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(at(p, j), at(r, j));
    const Integer &piv = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * at(i, j);
        if (sgn(lead) != 0)
          t -= lead * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::vector<std::size_t> rref(RationalMatrix &m)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational t;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0)
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j)
        std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (sgn(m(r, j)) != 0)
        m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0)
        continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) {
          t = f * m(r, j);
          m(i, j) -= t;
        }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix &m)
{
  RationalMatrix e = m;
  const auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -e(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix &m, const RationalVector &b)
{
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: right-hand side length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols())
    return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = aug(k, m.cols());
  return x;
}

RationalMatrix inverse(const RationalMatrix &m)
{
  if (!m.square())
    throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw std::domain_error("inverse: singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::size_t> independent_columns(const RationalMatrix &m)
{
  RationalMatrix e = m;
  return rref(e);
}

Rational dot(const RationalVector &a, const RationalVector &b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
      s += a[i] * b[i];
  return s;
}

bool is_zero(const RationalVector &v)
{
  for (const auto &x : v)
    if (sgn(x) != 0)
      return false;
  return true;
}

} // namespace liemod
