#ifndef LIEMOD_PACKETS_HPP
#define LIEMOD_PACKETS_HPP

#include "liemod/cells.hpp"
#include "liemod/linalg.hpp"
#include "liemod/root_system.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace liemod
{

using Partition = std::vector<unsigned>; ///< parts in nonincreasing order

/// Jordan type of an n x n matrix: one (algebraic multiplicity, partition of
/// it) pair per eigenvalue, as a sorted multiset. Two elements of sl_n lie in
/// the same packet exactly when their Jordan types agree.
struct JordanTypeA
{
  std::vector<std::pair<unsigned, Partition>> blocks;

  unsigned size() const;
  std::string to_string() const;
  void normalize();

  friend bool operator==(const JordanTypeA &, const JordanTypeA &) = default;
  friend auto operator<=>(const JordanTypeA &, const JordanTypeA &) = default;
};

struct PacketDescriptor
{
  JordanTypeA datum;
  /// Cell of the semisimple part in the Cartan of sl_n.
  Cell cell;
  long orbit_dim = 0;
  long closure_dim = 0;
  long modality = 0;
};

struct PacketDims
{
  long orbit_dim = 0;
  long closure_dim = 0;
  long modality = 0;
};

std::vector<Partition> partitions_of(unsigned n);
Partition conjugate(const Partition &p);

/// All packets of sl_n, 2 <= n <= 5, sorted by Jordan type.
std::vector<PacketDescriptor> enumerate_packets_adjoint_typeA(unsigned n);

/// Block-diagonal element of sl_n with distinct block eigenvalues summing to
/// zero with multiplicity, Jordan blocks along the partitions.
RationalMatrix packet_representative(const JordanTypeA &jt);

/// Basis of sl_n: E_ij (i != j) followed by E_ii - E_{i+1,i+1}.
std::vector<RationalMatrix> sl_basis(unsigned n);
/// dim sl_n minus the dimension of the centralizer of x in sl_n.
std::size_t sl_orbit_dim(const RationalMatrix &x);
/// Basis of the centralizer of x in sl_n.
std::vector<RationalMatrix> sl_centralizer(const RationalMatrix &x);
/// Basis of the center of the centralizer of x in sl_n.
std::vector<RationalMatrix> center_of_centralizer(const RationalMatrix &x);

/// Recomputes the orbit dimension from a representative matrix and returns
/// (orbit dim, orbit dim + cell dim, cell dim). Throws std::invalid_argument
/// when the descriptor does not fit rs.
PacketDims packet_dims(const PacketDescriptor &p, const RootSystem &rs);

/// Jordan type from ranks of powers of polynomials in x; exact and
/// conjugation-invariant. Throws std::invalid_argument for non-square input.
JordanTypeA classify_adjoint_typeA(const RationalMatrix &x);

/// Random element of the packet: generic point of its cell plus the
/// nilpotent datum, conjugated by a random unimodular matrix.
RationalMatrix sample_packet_point(const JordanTypeA &jt, std::mt19937_64 &rng);
/// Random unimodular integer matrix and its inverse.
std::pair<RationalMatrix, RationalMatrix> random_unimodular(unsigned n, std::mt19937_64 &rng);
/// Random trace-zero integer matrix with entries in [-10, 10].
RationalMatrix random_trace_zero(unsigned n, std::mt19937_64 &rng);

/// Sheet of sl_n listed by hand: its dimension, the orbit dimension along
/// it, and the Jordan types it is made of.
struct SheetSpec
{
  std::string label;
  long dim = 0;
  long orbit_dim = 0;
  std::vector<JordanTypeA> members;
};

/// Hand-derived sheet lists for sl_2 and sl_3; empty for other n.
std::vector<SheetSpec> known_sheets(unsigned n);

struct SheetMatch
{
  std::string label;
  long dim = 0;
  std::size_t matching_packets = 0;
  std::string packet;
  bool points_ok = false;
  bool ok = false;
};

struct PacketSanityReport
{
  unsigned n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t packet_count = 0;
  std::size_t unclassified = 0;
  bool coverage_ok = false;
  long cover_modality = 0;
  bool aggregation_ok = false;
  bool constant_orbit_dim_ok = false;
  std::vector<SheetMatch> sheets;
  bool sheets_ok = false;
  std::size_t nilpotent_checked = 0;
  bool nilpotent_center_ok = false;
  bool passed = false;
};

/// Coverage, aggregation through modality_from_cover, sheet matching and the
/// center-of-centralizer check for nilpotent elements; 2 <= n <= 4.
PacketSanityReport packet_sanity_suite(unsigned n, std::size_t samples, std::uint64_t seed);

} // namespace liemod

#endif
