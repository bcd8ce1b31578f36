#ifndef LIEMOD_POLYNOMIAL_HPP
#define LIEMOD_POLYNOMIAL_HPP

#include "liemod/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace liemod
{

/// Univariate polynomial over Q, coefficients in ascending degree order.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
class RationalPolynomial
{
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(RationalVector coeffs);
  RationalPolynomial(std::initializer_list<long> coeffs);

  static RationalPolynomial monomial(const Rational &c, std::size_t degree);

  const RationalVector &coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational &leading() const;
  Rational coefficient(std::size_t k) const;

  RationalPolynomial monic() const;
  RationalPolynomial derivative() const;

  Rational evaluate(const Rational &x) const;
  /// Horner evaluation at a square matrix.
  RationalMatrix evaluate(const RationalMatrix &x) const;

  friend bool operator==(const RationalPolynomial &a, const RationalPolynomial &b)
  {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const char *var = "t") const;

private:
  void trim();
  RationalVector coeffs_;
};

RationalPolynomial operator+(const RationalPolynomial &a, const RationalPolynomial &b);
RationalPolynomial operator-(const RationalPolynomial &a, const RationalPolynomial &b);
RationalPolynomial operator*(const RationalPolynomial &a, const RationalPolynomial &b);

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial &a,
                                                         const RationalPolynomial &b);

/// Monic gcd (zero if both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// p / gcd(p, p'), made monic.
RationalPolynomial squarefree_part(const RationalPolynomial &p);

/// Yun's decomposition p = c * prod_k w_k^k with the w_k squarefree, monic and
/// pairwise coprime. Only factors of positive degree are returned, as
/// (w_k, k) pairs in increasing k.
std::vector<std::pair<RationalPolynomial, std::size_t>>
squarefree_decomposition(const RationalPolynomial &p);

/// Characteristic polynomial det(tI - m), interpolated from fraction-free
/// determinants at integer points.
RationalPolynomial char_poly(const RationalMatrix &m);

/// (characteristic polynomial, its squarefree part).
std::pair<RationalPolynomial, RationalPolynomial> char_poly_squarefree(const RationalMatrix &m);

} // namespace liemod

#endif
