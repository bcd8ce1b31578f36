#include "liemod/modality.hpp"
#include "liemod/packets.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace liemod;

namespace
{

JordanTypeA jt(std::vector<std::pair<unsigned, Partition>> blocks)
{
  JordanTypeA t{std::move(blocks)};
  t.normalize();
  return t;
}

const PacketDescriptor &find(const std::vector<PacketDescriptor> &ps, const JordanTypeA &t)
{
  for (const auto &p : ps)
    if (p.datum == t)
      return p;
  throw std::runtime_error("packet not found: " + t.to_string());
}

} // namespace

TEST_CASE("partitions")
{
  CHECK(partitions_of(4).size() == 5);
  for (unsigned n = 1; n <= 10; ++n)
    CHECK(static_cast<long>(partitions_of(n).size()) == oracle::partition_count(n));
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({2, 2}) == Partition{2, 2});
  CHECK(conjugate(conjugate({4, 2, 2, 1})) == Partition{4, 2, 2, 1});
}

TEST_CASE("packet counts")
{
  for (unsigned n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long>(enumerate_packets_adjoint_typeA(n).size()) == oracle::packet_count(n));
  }
  CHECK(enumerate_packets_adjoint_typeA(2).size() == 3);
  CHECK(enumerate_packets_adjoint_typeA(3).size() == 6);
  CHECK_THROWS(enumerate_packets_adjoint_typeA(1));
}

TEST_CASE("sl2 packets")
{
  const auto ps = enumerate_packets_adjoint_typeA(2);
  const auto &rs = find(ps, jt({{1, {1}}, {1, {1}}}));
  CHECK(rs.closure_dim == 3);
  CHECK(rs.modality == 1);
  const auto &rn = find(ps, jt({{2, {2}}}));
  CHECK(rn.closure_dim == 2);
  CHECK(rn.modality == 0);
  const auto &z = find(ps, jt({{2, {1, 1}}}));
  CHECK(z.closure_dim == 0);
  CHECK(z.orbit_dim == 0);
}

TEST_CASE("packet dimensions recomputed from representatives")
{
  for (unsigned n = 2; n <= 5; ++n) {
    const RootSystem rs({Family::A, static_cast<int>(n - 1)});
    for (const auto &p : enumerate_packets_adjoint_typeA(n)) {
      CAPTURE(p.datum.to_string());
      const PacketDims d = packet_dims(p, rs);
      CHECK(d.orbit_dim == p.orbit_dim);
      CHECK(d.closure_dim == p.closure_dim);
      CHECK(d.modality == p.modality);
      CHECK(classify_adjoint_typeA(packet_representative(p.datum)) == p.datum);
    }
  }
  const auto ps = enumerate_packets_adjoint_typeA(3);
  const RootSystem a2({Family::A, 2});
  const PacketDims nil = packet_dims(find(ps, jt({{3, {3}}})), a2);
  CHECK(nil.closure_dim == 6);
  CHECK(nil.modality == 0);
  const PacketDims reg = packet_dims(find(ps, jt({{1, {1}}, {1, {1}}, {1, {1}}})), a2);
  CHECK(reg.closure_dim == 8);
  CHECK(reg.modality == 2);
  CHECK(packet_dims(find(ps, jt({{3, {1, 1, 1}}})), a2).closure_dim == 0);
  CHECK_THROWS(packet_dims(ps.front(), RootSystem({Family::A, 3})));
  PacketDescriptor broken = ps.front();
  broken.cell.flat = {0};
  CHECK_THROWS(packet_dims(broken, a2));
}

TEST_CASE("classification of matrices")
{
  CHECK(classify_adjoint_typeA(RationalMatrix{{1, 0}, {0, -1}}) == jt({{1, {1}}, {1, {1}}}));
  CHECK(classify_adjoint_typeA(RationalMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}) ==
        jt({{3, {3}}}));
  CHECK(classify_adjoint_typeA(RationalMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -2}}) ==
        jt({{2, {1, 1}}, {1, {1}}}));
  // irreducible quadratic factor t^2 - 2: two conjugate eigenvalues
  CHECK(classify_adjoint_typeA(RationalMatrix{{0, 2}, {1, 0}}) == jt({{1, {1}}, {1, {1}}}));
  CHECK_THROWS(classify_adjoint_typeA(RationalMatrix(2, 3)));

  std::mt19937_64 rng(31);
  for (const auto &p : enumerate_packets_adjoint_typeA(4))
    for (int k = 0; k < 3; ++k) {
      const RationalMatrix x = sample_packet_point(p.datum, rng);
      CHECK(x.trace() == 0);
      CHECK(classify_adjoint_typeA(x) == p.datum);
      const auto [g, ginv] = random_unimodular(4, rng);
      CHECK(g * ginv == RationalMatrix::identity(4));
      CHECK(classify_adjoint_typeA(g * x * ginv) == p.datum);
      CHECK(static_cast<long>(sl_orbit_dim(x)) == p.orbit_dim);
    }
}

TEST_CASE("centralizers")
{
  const RationalMatrix reg{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  CHECK(sl_centralizer(reg).size() == 2);
  CHECK(center_of_centralizer(reg).size() == 2);
  CHECK(sl_orbit_dim(reg) == 6);
  CHECK(sl_centralizer(RationalMatrix(3, 3)).size() == 8);
  CHECK(center_of_centralizer(RationalMatrix(3, 3)).empty());
  CHECK(sl_basis(3).size() == 8);
}

TEST_CASE("max packet modality through the cover aggregator")
{
  for (unsigned n = 2; n <= 5; ++n) {
    std::vector<CoverPiece> pieces;
    for (const auto &p : enumerate_packets_adjoint_typeA(n))
      pieces.push_back({p.closure_dim, p.orbit_dim});
    CHECK(modality_from_cover(pieces) == static_cast<long>(n) - 1);
  }
}

TEST_CASE("sanity suite")
{
  const auto r2 = packet_sanity_suite(2, 1000, 1);
  CHECK(r2.coverage_ok);
  CHECK(r2.cover_modality == 1);
  CHECK(r2.sheets.size() == 2);
  CHECK(r2.sheets_ok);
  CHECK(r2.passed);
  const auto r3 = packet_sanity_suite(3, 200, 2);
  CHECK(r3.sheets.size() == 3);
  CHECK(r3.passed);
  CHECK(r3.nilpotent_checked == 3);
  const auto r4 = packet_sanity_suite(4, 200, 3);
  CHECK(r4.cover_modality == 3);
  CHECK(r4.passed);
  CHECK_THROWS(packet_sanity_suite(5, 10, 1));
}
