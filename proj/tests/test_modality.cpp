#include "liemod/modality.hpp"
#include "liemod/tables.hpp"

#include <doctest.h>

#include <functional>

using namespace liemod;

namespace
{

ActionSpec module_action(Family f, int r, IntVector w)
{
  HWModule m = build_hw_module({{f, r}, Weight{std::move(w)}});
  return ActionSpec::from_module(m);
}

} // namespace

TEST_CASE("stabilizer dimension")
{
  const ActionSpec nat = module_action(Family::A, 1, {1});
  CHECK(stabilizer_dim_at(nat, RationalVector(2)) == 3);
  // the highest weight vector is killed by e only
  const HWModule m = build_hw_module({{Family::A, 1}, Weight{{1}}});
  RationalVector top(2);
  top[0] = 1;
  CHECK(m.e[0] * top == RationalVector(2));
  CHECK(stabilizer_dim_at(nat, top) == 1);
  CHECK(orbit_dim_at(nat, top) == 2);

  // A_2 adjoint at a regular semisimple element of the Cartan
  HWModule adj = build_hw_module({{Family::A, 2}, Weight{{1, 1}}});
  extend_to_full_algebra(adj);
  const auto c = structure_constants(adj);
  ActionSpec ad;
  ad.space_dim = 8;
  for (std::size_t a = 0; a < 8; ++a) {
    RationalMatrix x(8, 8);
    for (std::size_t b = 0; b < 8; ++b)
      for (std::size_t k = 0; k < 8; ++k)
        x(k, b) = c[a][b][k];
    ad.action_matrices.push_back(x);
  }
  RationalVector h(8);
  h[6] = 1;
  h[7] = 3;
  CHECK(stabilizer_dim_at(ad, h) == 2);
}

TEST_CASE("generic orbit dimension")
{
  ActionSpec trivial{4, {RationalMatrix(4, 4), RationalMatrix(4, 4)}};
  CHECK(generic_orbit_dim(trivial, 5, 1).generic_orbit_dim == 0);
  CHECK(generic_orbit_dim(module_action(Family::A, 1, {1}), 5, 1).generic_orbit_dim == 2);
  CHECK(generic_orbit_dim(module_action(Family::A, 1, {3}), 5, 1).generic_orbit_dim == 3);
  CHECK_THROWS(generic_orbit_dim(trivial, 0, 1));
  ActionSpec bad{3, {RationalMatrix(2, 2)}};
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);
}

TEST_CASE("same seed and trials give the same report")
{
  const ActionSpec a = module_action(Family::B, 2, {1, 0});
  CHECK(generic_orbit_dim(a, 4, 99) == generic_orbit_dim(a, 4, 99));
}

TEST_CASE("modality of visible representations")
{
  CHECK(modality_visible(module_action(Family::A, 3, {1, 0, 0}), 5, 2) == 0);
  CHECK(modality_visible(module_action(Family::A, 1, {4}), 5, 2) == 2);
  CHECK(modality_visible(module_action(Family::E, 6, {1, 0, 0, 0, 0, 0}), 5, 2) == 1);
}

TEST_CASE("SL2 closed form")
{
  CHECK(sl2_modality({3}) == 1);
  CHECK(sl2_modality({0, 0}) == 2);
  CHECK(sl2_modality({2}) == 1);
  CHECK(sl2_modality({0, 0, 0}) == 3);
  CHECK(sl2_modality({1}) == 0);
  CHECK(sl2_modality({}) == 0);
  CHECK(sl2_action({}).space_dim == 0);
  CHECK(sl2_action({0, 2}).space_dim == 4);
}

TEST_CASE("SL2 closed form against explicit matrices for dim <= 8")
{
  std::size_t cases = 0;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned minpart) {
    if (!cur.empty()) {
      const ActionSpec a = sl2_action(cur);
      const long matrix = static_cast<long>(a.space_dim) -
                          static_cast<long>(generic_orbit_dim(a, 5, 3).generic_orbit_dim);
      CAPTURE(cur.size());
      CHECK(sl2_modality(cur) == matrix);
      ++cases;
    }
    for (unsigned d = minpart; d + 1 <= left; ++d) {
      cur.push_back(d);
      rec(left - d - 1, d);
      cur.pop_back();
    }
  };
  rec(8, 0);
  CHECK(cases == 66);
}

TEST_CASE("modality from a cover")
{
  CHECK(modality_from_cover({{3, 2}}) == 1);
  CHECK(modality_from_cover({{3, 2}, {2, 2}, {0, 0}}) == 1);
  // a trivial factor of dimension f adds f to every closure
  const std::vector<CoverPiece> base{{8, 6}, {5, 4}, {6, 6}, {0, 0}};
  std::vector<CoverPiece> shifted = base;
  for (auto &p : shifted)
    p.closure_dim += 3;
  CHECK(modality_from_cover(shifted) == modality_from_cover(base) + 3);
  CHECK_THROWS(modality_from_cover({}));
  CHECK_THROWS(modality_from_cover({{1, 2}}));
}

TEST_CASE("table entries")
{
  const TableData data = load_tables(default_table_path());
  auto verify = [&](Family f, int r, IntVector w, int expected) {
    TableEntry e{"", {f, r}, Weight{std::move(w)}, expected, 0};
    const auto v = verify_table_entry(e, 5, 1);
    CHECK(v.computed == expected);
    CHECK(v.matches);
    CHECK(v.dimension == v.weyl_dimension);
  };
  verify(Family::C, 2, {0, 1}, 1);
  verify(Family::G, 2, {0, 1}, 2);
  verify(Family::D, 5, {0, 0, 0, 0, 1}, 0);
  CHECK(lookup_expected_modality(data, {Family::D, 5}, Weight{{0, 0, 0, 1, 0}}) == 0);
  CHECK(lookup_expected_modality(data, {Family::A, 4}, Weight{{0, 0, 1, 0}}) == 0);
  CHECK(lookup_expected_modality(data, {Family::A, 1}, Weight{{4}}) == 2);
  CHECK_FALSE(lookup_expected_modality(data, {Family::A, 1}, Weight{{7}}));

  const auto m3 = expand_tables(data, "m3", 8);
  CHECK(m3.size() == 8);
  CHECK(expand_tables(data, "m1", 3).size() < expand_tables(data, "m1", 8).size());
  CHECK_THROWS(load_tables("/nonexistent/tables.json"));

  TableEntry huge{"m2", {Family::E, 8}, Weight{{0, 0, 0, 0, 0, 0, 0, 1}}, 1, 0};
  const auto skipped = verify_table_entry(huge, 5, 1, 64);
  CHECK(skipped.skipped);
}

TEST_CASE("d copies of the natural module")
{
  const ExmoReport r = exmo_family_check(3, 2, 1);
  CHECK(r.regular_sheet_modality == 0);
  CHECK(r.family_lower_bound == 1);
  CHECK_FALSE(r.modality_regular);
  const ExmoReport r4 = exmo_family_check(4, 3, 1);
  CHECK(r4.regular_sheet_modality == 0);
  CHECK(r4.family_lower_bound == 2);
  CHECK_THROWS(exmo_family_check(3, 3, 1));
  CHECK_THROWS(exmo_family_check(2, 2, 1));
}
