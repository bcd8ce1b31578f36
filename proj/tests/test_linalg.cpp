#include "liemod/linalg.hpp"
#include "liemod/polynomial.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace liemod;

namespace
{

std::vector<std::vector<mpq_class>> to_rows(const RationalMatrix &m)
{
  std::vector<std::vector<mpq_class>> r(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r[i][j] = m(i, j);
  return r;
}

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng,
                             long box = 3)
{
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long>(rng() % (2 * box + 1)) - box;
  return m;
}

} // namespace

TEST_CASE("rank of small examples")
{
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(RationalMatrix{{1, 1}, {1, 1}}) == 1);
  CHECK(rank(RationalMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(rank(RationalMatrix(3, 4)) == 0);
  CHECK(rank(RationalMatrix(0, 0)) == 0);
}

TEST_CASE("rank agrees with the largest nonvanishing minor")
{
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    RationalMatrix m = random_matrix(rows, cols, rng);
    // force low rank now and then
    if (t % 3 == 0 && rows > 1)
      for (std::size_t j = 0; j < cols; ++j)
        m(rows - 1, j) = 2 * m(0, j) - m(rows - 2, j);
    CHECK(rank(m) == oracle::rank_by_minors(to_rows(m)));
  }
}

TEST_CASE("rank with fractional entries")
{
  RationalMatrix m{{1, 2}, {3, 4}};
  m(0, 0) = Rational(1, 3);
  m(0, 1) = Rational(2, 3);
  m(1, 0) = Rational(1, 2);
  m(1, 1) = 1;
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel basis")
{
  CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
  CHECK(kernel_basis(RationalMatrix(2, 2)).size() == 2);
  const auto k = kernel_basis(RationalMatrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(sgn(k[0][0]) != 0);
  CHECK(k[0][0] == -k[0][1]);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const RationalMatrix m = random_matrix(1 + rng() % 4, 1 + rng() % 5, rng, 2);
    const auto basis = kernel_basis(m);
    CHECK(basis.size() + rank(m) == m.cols());
    for (const auto &v : basis)
      CHECK(is_zero(m * v));
    if (!basis.empty())
      CHECK(rank(RationalMatrix::from_columns(basis, m.cols())) == basis.size());
  }
}

TEST_CASE("inverse and solve")
{
  const RationalMatrix m{{2, 1}, {1, 1}};
  CHECK(m * inverse(m) == RationalMatrix::identity(2));
  CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2}, {2, 4}}), std::domain_error);
  const auto x = solve(m, RationalVector{Rational(3), Rational(2)});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve(RationalMatrix{{1, 1}, {1, 1}}, RationalVector{Rational(1), Rational(0)}));
}

TEST_CASE("characteristic polynomial and squarefree part")
{
  SUBCASE("identity")
  {
    const auto [p, s] = char_poly_squarefree(RationalMatrix::identity(2));
    CHECK(p == RationalPolynomial{1, -2, 1});
    CHECK(s == RationalPolynomial{-1, 1});
  }
  SUBCASE("nilpotent block")
  {
    const auto [p, s] = char_poly_squarefree(RationalMatrix{{0, 1}, {0, 0}});
    CHECK(p == RationalPolynomial{0, 0, 1});
    CHECK(s == RationalPolynomial{0, 1});
  }
  SUBCASE("distinct eigenvalues")
  {
    const auto [p, s] = char_poly_squarefree(RationalMatrix{{1, 0}, {0, 2}});
    CHECK(p == RationalPolynomial{2, -3, 1});
    CHECK(s == p);
  }
  SUBCASE("random matrices against Faddeev-LeVerrier")
  {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng() % 6;
      const RationalMatrix m = random_matrix(n, n, rng, 4);
      const auto ref = oracle::faddeev_leverrier(to_rows(m));
      const auto p = char_poly(m);
      REQUIRE(p.degree() == static_cast<long>(n));
      for (std::size_t k = 0; k <= n; ++k)
        CHECK(p.coefficient(k) == ref[k]);
      CHECK(p.evaluate(m).is_zero()); // Cayley-Hamilton
    }
  }
}

TEST_CASE("squarefree decomposition")
{
  // (t - 1) (t + 2)^2 t^3
  const RationalPolynomial a{-1, 1}, b{2, 1}, c{0, 1};
  const auto p = a * b * b * c * c * c;
  const auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 3);
  CHECK(dec[0] == std::make_pair(a, std::size_t{1}));
  CHECK(dec[1] == std::make_pair(b, std::size_t{2}));
  CHECK(dec[2] == std::make_pair(c, std::size_t{3}));
  CHECK(squarefree_part(p) == a * b * c);
  CHECK(gcd(p, p.derivative()) == b * c * c);
}

TEST_CASE("polynomial division")
{
  const RationalPolynomial p{1, 0, 0, 1}, d{1, 1};
  const auto [q, r] = divmod(p, d);
  CHECK(q * d + r == p);
  CHECK(r.is_zero());
  CHECK_THROWS(divmod(p, RationalPolynomial{}));
}

TEST_CASE("characteristic polynomial edge cases")
{
  CHECK(char_poly(RationalMatrix(0, 0)) == RationalPolynomial{1});
  CHECK(char_poly(RationalMatrix(1, 1)) == RationalPolynomial{0, 1});
  RationalMatrix m{{1, 2}, {3, 4}};
  m(0, 0) = Rational(1, 2);
  m(1, 1) = Rational(-2, 3);
  // t^2 - tr t + det with tr = -1/6, det = -1/3 - 6
  const auto p = char_poly(m);
  CHECK(p.coefficient(2) == 1);
  CHECK(p.coefficient(1) == Rational(1, 6));
  CHECK(p.coefficient(0) == Rational(-19, 3));
  CHECK(p.evaluate(m).is_zero());
}
