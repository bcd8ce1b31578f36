#ifndef LIEMOD_MODALITY_HPP
#define LIEMOD_MODALITY_HPP

#include "liemod/hw_module.hpp"
#include "liemod/linalg.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace liemod
{

inline constexpr std::size_t default_trials = 5;
inline constexpr long sample_box = 10;

/// Infinitesimal linear action: one dim V x dim V matrix per basis element of
/// the acting Lie algebra.
struct ActionSpec
{
  std::size_t space_dim = 0;
  std::vector<RationalMatrix> action_matrices;

  std::size_t algebra_dim() const { return action_matrices.size(); }
  /// Throws std::invalid_argument if some matrix has the wrong shape.
  void check() const;

  static ActionSpec from_module(const HWModule &m);
};

struct OrbitDimReport
{
  std::size_t generic_orbit_dim = 0;
  std::size_t stabilizer_dim = 0;
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const OrbitDimReport &, const OrbitDimReport &) = default;
};

/// Integer vector with entries uniform in [-box, box].
RationalVector sample_vector(std::size_t n, std::mt19937_64 &rng, long box = sample_box);

/// Dimension of the Lie algebra of the stabilizer of v.
std::size_t stabilizer_dim_at(const ActionSpec &a, const RationalVector &v);
/// algebra_dim - stabilizer_dim_at.
std::size_t orbit_dim_at(const ActionSpec &a, const RationalVector &v);

/// Max orbit dimension over `trials` seeded samples.
OrbitDimReport generic_orbit_dim(const ActionSpec &a, std::size_t trials, std::uint64_t seed);

/// space_dim - generic orbit dim. Equals the modality only for visible actions.
std::size_t modality_visible(const ActionSpec &a, std::size_t trials, std::uint64_t seed);

/// Closed form for SL_2 acting on the direct sum of binary forms of the
/// given degrees.
long sl2_modality(const std::vector<unsigned> &summands);

/// The direct sum of the SL_2 modules of the given degrees as an action.
ActionSpec sl2_action(const std::vector<unsigned> &summands);

struct CoverPiece
{
  long closure_dim = 0;
  long orbit_dim = 0;
};

/// max over pieces of closure_dim - orbit_dim; throws on an empty cover or an
/// ill-formed piece.
long modality_from_cover(const std::vector<CoverPiece> &pieces);

struct ExmoReport
{
  unsigned n = 0, d = 0;
  std::size_t space_dim = 0;
  std::size_t generic_orbit_dim = 0;
  long regular_sheet_modality = 0;
  std::size_t family_dim = 0;
  std::size_t family_orbit_dim = 0;
  long family_lower_bound = 0;
  bool modality_regular = true;
};

/// d copies of the natural SL_n module: the regular sheet has an open orbit
/// while the family (v, l_1 v, ..., l_{d-1} v) has d - 1 parameters.
/// Requires n >= 3 and 2 <= d <= n - 1.
ExmoReport exmo_family_check(unsigned n, unsigned d, std::uint64_t seed);

} // namespace liemod

#endif
