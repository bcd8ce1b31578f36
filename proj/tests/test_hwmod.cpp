#include "liemod/hw_module.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace liemod;

namespace
{

HWModule build(Family f, int r, IntVector w)
{
  return build_hw_module({{f, r}, Weight{std::move(w)}});
}

/// Chevalley-Serre relations for the generators in the module.
void check_relations(const HWModule &m)
{
  const RootSystem &rs = *m.roots;
  const int r = rs.rank();
  for (int i = 0; i < r; ++i) {
    CHECK(m.h[i].trace() == 0);
    for (int j = 0; j < r; ++j) {
      const RationalMatrix ef = commutator(m.e[i], m.f[j]);
      CHECK(ef == (i == j ? m.h[i] : RationalMatrix(m.dimension, m.dimension)));
      CHECK(commutator(m.h[i], m.h[j]).is_zero());
      CHECK(commutator(m.h[i], m.e[j]) == Rational(rs.cartan(j, i)) * m.e[j]);
      CHECK(commutator(m.h[i], m.f[j]) == Rational(-rs.cartan(j, i)) * m.f[j]);
      if (i != j) {
        RationalMatrix x = m.e[j], y = m.f[j];
        for (long k = 0; k < 1 - rs.cartan(j, i); ++k) {
          x = commutator(m.e[i], x);
          y = commutator(m.f[i], y);
        }
        CHECK(x.is_zero());
        CHECK(y.is_zero());
      }
    }
  }
}

RationalMatrix elementary(std::size_t n, std::size_t i, std::size_t j)
{
  RationalMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

} // namespace

TEST_CASE("Weyl dimension formula")
{
  for (long n = 0; n <= 8; ++n)
    CHECK(weyl_dim({{Family::A, 1}, Weight{{n}}}) == n + 1);
  CHECK(weyl_dim({{Family::A, 2}, Weight{{1, 1}}}) == 8);
  CHECK(weyl_dim({{Family::A, 3}, Weight{{0, 1, 0}}}) == 6);
  CHECK(weyl_dim({{Family::E, 8}, Weight{{0, 0, 0, 0, 0, 0, 0, 1}}}) == 248);
  CHECK(weyl_dim({{Family::E, 7}, Weight{{0, 0, 0, 0, 0, 0, 1}}}) == 56);
  CHECK(weyl_dim({{Family::F, 4}, Weight{{0, 0, 0, 1}}}) == 26);
  CHECK(weyl_dim({{Family::G, 2}, Weight{{1, 0}}}) == 7);
  CHECK(weyl_dim({{Family::B, 6}, Weight{{0, 0, 0, 0, 0, 1}}}) == 64);
  CHECK_THROWS(weyl_dim({{Family::A, 2}, Weight{{-1, 1}}}));
}

TEST_CASE("Weyl dimension matches hook-content formula in type A")
{
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const int r = 1 + static_cast<int>(rng() % 5);
    IntVector w(r);
    for (auto &x : w)
      x = static_cast<long>(rng() % 4);
    CAPTURE(to_string(Weight{w}));
    CHECK(weyl_dim({{Family::A, r}, Weight{w}}) == oracle::typeA_dimension(w));
  }
}

TEST_CASE("enumerating small modules")
{
  const auto a1 = enumerate_dominant_up_to_dim({Family::A, 1}, 4);
  CHECK(a1 == std::vector<Weight>{Weight{{1}}, Weight{{2}}, Weight{{3}}});
  const auto a2 = enumerate_dominant_up_to_dim({Family::A, 2}, 3);
  CHECK(a2 == std::vector<Weight>{Weight{{0, 1}}, Weight{{1, 0}}});
  CHECK(enumerate_dominant_up_to_dim({Family::E, 8}, 1).empty());
  CHECK(enumerate_dominant_up_to_dim({Family::G, 2}, 1).empty());

  // Against a brute-force box search.
  const RootSystemType b3{Family::B, 3};
  std::vector<Weight> brute;
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b)
      for (long c = 0; c <= 6; ++c)
        if (a + b + c > 0 && weyl_dim({b3, Weight{{a, b, c}}}) <= 100)
          brute.push_back(Weight{{a, b, c}});
  std::sort(brute.begin(), brute.end());
  CHECK(enumerate_dominant_up_to_dim(b3, 100) == brute);
}

TEST_CASE("defining representation of sl2")
{
  const HWModule m = build(Family::A, 1, {1});
  REQUIRE(m.dimension == 2);
  check_relations(m);
  CHECK(m.h[0] == RationalMatrix::diagonal({Rational(1), Rational(-1)}));
}

TEST_CASE("adjoint of sl2 has h-eigenvalues 2, 0, -2")
{
  const HWModule m = build(Family::A, 1, {2});
  REQUIRE(m.dimension == 3);
  check_relations(m);
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < 3; ++i)
    diag.push_back(m.h[0](i, i));
  CHECK(diag == std::vector<Rational>{2, 0, -2});
  CHECK(RationalMatrix::diagonal(diag) == m.h[0]);
}

TEST_CASE("natural module of sl3 has the weights of the trace-zero realisation")
{
  const HWModule m = build(Family::A, 2, {1, 0});
  REQUIRE(m.dimension == 3);
  check_relations(m);
  // E_11 - E_22 and E_22 - E_33 act with eigenvalues (1,-1,0) and (0,1,-1).
  for (int i = 0; i < 2; ++i) {
    std::vector<Rational> got, want;
    for (std::size_t k = 0; k < 3; ++k) {
      got.push_back(m.h[i](k, k));
      want.push_back((k == std::size_t(i)) ? 1 : (k == std::size_t(i + 1)) ? -1 : 0);
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
  // and its structure constants agree with those of E_ij
  HWModule full = m;
  extend_to_full_algebra(full);
  std::vector<RationalMatrix> std_basis = {elementary(3, 0, 1), elementary(3, 1, 2)};
  std_basis.push_back(commutator(std_basis[0], std_basis[1]));
  std_basis.push_back(elementary(3, 1, 0));
  std_basis.push_back(elementary(3, 2, 1));
  std_basis.push_back(commutator(std_basis[3], std_basis[4]));
  std_basis.push_back(elementary(3, 0, 0) - elementary(3, 1, 1));
  std_basis.push_back(elementary(3, 1, 1) - elementary(3, 2, 2));
  const auto c = structure_constants(full);
  REQUIRE(full.full_basis.size() == 8);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      RationalMatrix rhs(3, 3);
      for (std::size_t k = 0; k < 8; ++k)
        rhs += c[a][b][k] * std_basis[k];
      CHECK(commutator(std_basis[a], std_basis[b]) == rhs);
    }
}

TEST_CASE("generator relations across types")
{
  for (const auto &[t, w] : std::vector<std::pair<RootSystemType, IntVector>>{
           {{Family::A, 3}, {0, 1, 0}},
           {{Family::B, 2}, {1, 1}},
           {{Family::C, 3}, {0, 0, 1}},
           {{Family::D, 4}, {0, 0, 0, 1}},
           {{Family::G, 2}, {1, 0}},
           {{Family::G, 2}, {0, 1}},
           {{Family::F, 4}, {0, 0, 0, 1}},
           {{Family::A, 1}, {5}}}) {
    CAPTURE(to_string(t));
    const HWModule m = build_hw_module({t, Weight{w}});
    CHECK(weyl_dim({t, Weight{w}}) == static_cast<unsigned long>(m.dimension));
    check_relations(m);
  }
}

TEST_CASE("full algebra basis")
{
  HWModule a1 = build(Family::A, 1, {1});
  extend_to_full_algebra(a1);
  CHECK(a1.full_basis.size() == 3);

  SUBCASE("sl3 adjoint and natural modules give the same structure constants")
  {
    HWModule adj = build(Family::A, 2, {1, 1});
    HWModule nat = build(Family::A, 2, {1, 0});
    extend_to_full_algebra(adj);
    extend_to_full_algebra(nat);
    CHECK(adj.full_basis.size() == 8);
    CHECK(structure_constants(adj) == structure_constants(nat));
  }

  SUBCASE("G2 on its 7-dimensional module is closed under brackets")
  {
    HWModule g2 = build(Family::G, 2, {1, 0});
    REQUIRE(g2.dimension == 7);
    extend_to_full_algebra(g2);
    REQUIRE(g2.full_basis.size() == 14);
    std::vector<RationalVector> cols;
    auto flatten = [](const RationalMatrix &x) {
      RationalVector v;
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
          v.push_back(x(i, j));
      return v;
    };
    for (const auto &x : g2.full_basis)
      cols.push_back(flatten(x));
    CHECK(rank(RationalMatrix::from_columns(cols, 49)) == 14);
    for (std::size_t a = 0; a < 14; ++a)
      for (std::size_t b = a + 1; b < 14; ++b) {
        auto more = cols;
        more.push_back(flatten(commutator(g2.full_basis[a], g2.full_basis[b])));
        CHECK(rank(RationalMatrix::from_columns(more, 49)) == 14);
      }
    CHECK_NOTHROW(structure_constants(g2));
  }
}

TEST_CASE("trivial module and build ceiling")
{
  const HWModule triv = build(Family::B, 3, {0, 0, 0});
  CHECK(triv.dimension == 1);
  CHECK_THROWS_AS(build_hw_module({{Family::E, 8}, Weight{{0, 0, 0, 0, 0, 0, 0, 1}}}, 100),
                  CeilingExceeded);
  CHECK_THROWS(build_hw_module({{Family::A, 2}, Weight{{1}}}));
}

TEST_CASE("Weyl dimension increases along the dominance of dominant weights")
{
  std::mt19937_64 rng(17);
  for (const RootSystemType t : {RootSystemType{Family::A, 4}, RootSystemType{Family::D, 5},
                                 RootSystemType{Family::G, 2}, RootSystemType{Family::E, 6}}) {
    const RootSystem rs(t);
    for (int s = 0; s < 30; ++s) {
      IntVector lo(t.rank), hi(t.rank);
      bool bigger = false;
      for (int i = 0; i < t.rank; ++i) {
        lo[i] = static_cast<long>(rng() % 3);
        hi[i] = lo[i] + static_cast<long>(rng() % 2);
        bigger = bigger || hi[i] > lo[i];
      }
      if (!bigger)
        ++hi[0];
      CHECK(weyl_dim(rs, Weight{lo}) < weyl_dim(rs, Weight{hi}));
    }
  }
}
