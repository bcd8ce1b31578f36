#include "liemod/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace liemod
{

namespace
{

/// m = a / den with a an integer matrix stored row-major.
struct ScaledIntegerMatrix
{
  std::size_t n = 0;
  std::vector<Integer> a;
  Integer den = 1;
};

ScaledIntegerMatrix clear_denominators(const RationalMatrix &m)
{
  ScaledIntegerMatrix s;
  s.n = m.rows();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0)
        mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), m(i, j).get_den_mpz_t());
  s.a.resize(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0)
        s.a[i * s.n + j] = m(i, j).get_num() * (s.den / m(i, j).get_den());
  return s;
}

std::vector<Integer> multiply(const std::vector<Integer> &x, const std::vector<Integer> &y,
                              std::size_t n)
{
  std::vector<Integer> z(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Integer &xik = x[i * n + k];
      if (sgn(xik) == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(y[k * n + j]) != 0)
          mpz_addmul(z[i * n + j].get_mpz_t(), xik.get_mpz_t(), y[k * n + j].get_mpz_t());
    }
  return z;
}

/// Fraction-free Gaussian elimination.
Integer bareiss_determinant(std::vector<Integer> a, std::size_t n)
{
  Integer prev = 1, t;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p * n + c]) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j)
        std::swap(a[p * n + j], a[c * n + j]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      const Integer lead = a[i * n + c];
      for (std::size_t j = c + 1; j < n; ++j) {
        t = a[c * n + c] * a[i * n + j];
        if (sgn(lead) != 0)
          t -= lead * a[c * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[c * n + c];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

} // namespace

RationalPolynomial::RationalPolynomial(RationalVector coeffs) : coeffs_(std::move(coeffs))
{
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<long> coeffs)
{
  for (long c : coeffs)
    coeffs_.emplace_back(c);
  trim();
}

RationalPolynomial RationalPolynomial::monomial(const Rational &c, std::size_t degree)
{
  RationalVector v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim()
{
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
    coeffs_.pop_back();
}

const Rational &RationalPolynomial::leading() const
{
  if (coeffs_.empty())
    throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RationalPolynomial::coefficient(std::size_t k) const
{
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

RationalPolynomial RationalPolynomial::monic() const
{
  if (is_zero())
    return *this;
  const Rational inv = 1 / leading();
  RationalVector v = coeffs_;
  for (auto &c : v)
    c *= inv;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::derivative() const
{
  if (coeffs_.size() <= 1)
    return {};
  RationalVector v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::evaluate(const Rational &x) const
{
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * x + *it;
  return r;
}

RationalMatrix RationalPolynomial::evaluate(const RationalMatrix &x) const
{
  if (!x.square())
    throw std::invalid_argument("polynomial evaluated at a non-square matrix");
  const std::size_t n = x.rows();
  RationalMatrix r(n, n);
  if (is_zero())
    return r;
  // With x = b / d and c_k = C_k / D, p(x) = sum C_k d^(deg-k) b^k / (D d^deg);
  // Horner runs on integers.
  const ScaledIntegerMatrix b = clear_denominators(x);
  Integer D = 1;
  for (const auto &c : coeffs_)
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
  const std::size_t deg = coeffs_.size() - 1;
  std::vector<Integer> m(n * n);
  Integer dpow = 1;
  for (std::size_t k = deg + 1; k-- > 0;) {
    if (k != deg)
      m = multiply(m, b.a, n);
    const Integer shift = coeffs_[k].get_num() * (D / coeffs_[k].get_den()) * dpow;
    for (std::size_t i = 0; i < n; ++i)
      m[i * n + i] += shift;
    dpow *= b.den;
  }
  Integer scale = D;
  for (std::size_t k = 0; k < deg; ++k)
    scale *= b.den;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(m[i * n + j]) != 0) {
        r(i, j) = Rational(m[i * n + j]) / scale;
      }
  return r;
}

std::string RationalPolynomial::to_string(const char *var) const
{
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational &c = coeffs_[k];
    if (sgn(c) == 0)
      continue;
    Rational a = abs(c);
    if (!first)
      os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      os << "-";
    if (a != 1 || k == 0)
      os << a;
    if (k > 0)
      os << var;
    if (k > 1)
      os << "^" << k;
    first = false;
  }
  return os.str();
}

RationalPolynomial operator+(const RationalPolynomial &a, const RationalPolynomial &b)
{
  RationalVector v(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = a.coefficient(k) + b.coefficient(k);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial &a, const RationalPolynomial &b)
{
  RationalVector v(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = a.coefficient(k) - b.coefficient(k);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial &a, const RationalPolynomial &b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  const auto &x = a.coefficients();
  const auto &y = b.coefficients();
  RationalVector v(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      v[i + j] += x[i] * y[j];
  return RationalPolynomial(std::move(v));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial &a,
                                                         const RationalPolynomial &b)
{
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  RationalVector rem = a.coefficients();
  const auto &d = b.coefficients();
  if (rem.size() < d.size())
    return {RationalPolynomial(), a};
  RationalVector quo(rem.size() - d.size() + 1);
  const Rational inv = 1 / b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + d.size() - 1] * inv;
    quo[k] = q;
    if (sgn(q) == 0)
      continue;
    for (std::size_t j = 0; j < d.size(); ++j)
      rem[k + j] -= q * d[j];
  }
  rem.resize(d.size() - 1);
  return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b)
{
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

RationalPolynomial squarefree_part(const RationalPolynomial &p)
{
  if (p.degree() <= 0)
    return RationalPolynomial{1};
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<std::pair<RationalPolynomial, std::size_t>>
squarefree_decomposition(const RationalPolynomial &p)
{
  std::vector<std::pair<RationalPolynomial, std::size_t>> out;
  if (p.degree() <= 0)
    return out;
  // Yun's algorithm.
  RationalPolynomial a = p.monic();
  RationalPolynomial da = a.derivative();
  RationalPolynomial g = gcd(a, da);
  RationalPolynomial b = divmod(a, g).first;
  RationalPolynomial c = divmod(da, g).first;
  RationalPolynomial d = c - b.derivative();
  for (std::size_t k = 1; b.degree() > 0; ++k) {
    RationalPolynomial w = gcd(b, d);
    if (w.degree() > 0)
      out.emplace_back(w, k);
    b = divmod(b, w).first;
    c = divmod(d, w).first;
    d = c - b.derivative();
  }
  return out;
}

RationalPolynomial char_poly(const RationalMatrix &m)
{
  if (!m.square())
    throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return RationalPolynomial{1};
  // q(s) = det(s - b) for m = b / d, sampled at s = 0..n and interpolated;
  // then det(t - m) = q(d t) / d^n.
  const ScaledIntegerMatrix b = clear_denominators(m);
  std::vector<Rational> dd(n + 1);
  for (std::size_t s = 0; s <= n; ++s) {
    std::vector<Integer> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
      a[i] = -b.a[i];
    for (std::size_t i = 0; i < n; ++i)
      a[i * n + i] += static_cast<unsigned long>(s);
    dd[s] = bareiss_determinant(std::move(a), n);
  }
  // Newton divided differences on the nodes 0..n.
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t s = n; s >= k; --s)
      dd[s] = (dd[s] - dd[s - 1]) / static_cast<unsigned long>(k);
  RationalVector q{dd[n]};
  for (std::size_t k = n; k-- > 0;) {
    // q <- q * (s - k) + dd[k]
    RationalVector next(q.size() + 1);
    for (std::size_t j = 0; j < q.size(); ++j) {
      next[j + 1] += q[j];
      next[j] -= q[j] * static_cast<unsigned long>(k);
    }
    next[0] += dd[k];
    q = std::move(next);
  }
  Rational scale = 1;
  for (std::size_t k = 0; k < n; ++k)
    scale /= b.den;
  for (std::size_t k = 0; k <= n; ++k) {
    q[k] *= scale;
    scale *= b.den;
  }
  return RationalPolynomial(std::move(q));
}

std::pair<RationalPolynomial, RationalPolynomial> char_poly_squarefree(const RationalMatrix &m)
{
  auto p = char_poly(m);
  return {p, squarefree_part(p)};
}

} // namespace liemod
