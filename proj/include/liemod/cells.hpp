#ifndef LIEMOD_CELLS_HPP
#define LIEMOD_CELLS_HPP

#include "liemod/linalg.hpp"
#include "liemod/root_system.hpp"

#include <random>
#include <vector>

namespace liemod
{

/// Finite set of linear functionals on a vector space of dimension
/// ambient_dim, stored as covectors.
struct FunctionalSet
{
  std::size_t ambient_dim = 0;
  std::vector<RationalVector> functionals;

  /// Positive roots as functionals on the Cartan subalgebra, in the basis of
  /// simple coroots: alpha(h_i) = <alpha, alpha_i^vee>.
  static FunctionalSet from_roots(const RootSystem &rs);
};

/// Cell C_L: points where exactly the functionals of the flat vanish.
struct Cell
{
  /// Sorted indices into FunctionalSet::functionals.
  std::vector<std::size_t> flat;
  /// Dimension of the linear span of the cell.
  std::size_t closure_dim = 0;

  friend bool operator==(const Cell &, const Cell &) = default;
};

/// Indices of functionals lying in the span of the given ones.
std::vector<std::size_t> span_closure(const FunctionalSet &F,
                                      const std::vector<std::size_t> &subset);

Cell make_cell(const FunctionalSet &F, std::vector<std::size_t> flat);

/// One cell per flat, sorted by flat size then lexicographically.
std::vector<Cell> enumerate_cells(const FunctionalSet &F);

Cell cell_of_point(const FunctionalSet &F, const RationalVector &v);

/// True iff v lies in the cell (vanishing set equals the flat).
bool cell_contains(const FunctionalSet &F, const Cell &c, const RationalVector &v);

/// Basis of the linear subspace {v : alpha(v) = 0 for alpha in the flat}.
std::vector<RationalVector> closure_basis(const FunctionalSet &F, const Cell &c);

/// Random point of the cell (rejection sampling on its closure).
RationalVector sample_cell_point(const FunctionalSet &F, const Cell &c, std::mt19937_64 &rng);

struct CentralizerData
{
  Cell cell;
  /// Positive roots vanishing on the cell; R_c is these together with their
  /// negatives.
  std::vector<std::size_t> vanishing_roots;
  std::size_t dim_centralizer = 0;
  std::size_t dim_center = 0;
  std::size_t dim_derived = 0;
  /// Two independent random points of the cell had the same flat.
  bool independent_of_point = false;
};

CentralizerData centralizer_data(const RootSystem &rs, const Cell &c, std::mt19937_64 &rng);

} // namespace liemod

#endif
