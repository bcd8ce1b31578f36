#ifndef LIEMOD_HW_MODULE_HPP
#define LIEMOD_HW_MODULE_HPP

#include "liemod/linalg.hpp"
#include "liemod/root_system.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace liemod
{

struct IrrepSpec
{
  RootSystemType type;
  Weight highest_weight;
};

inline constexpr std::size_t default_build_ceiling = 256;

/// Thrown when a requested module exceeds the configured dimension ceiling.
class CeilingExceeded : public std::runtime_error
{
public:
  CeilingExceeded(std::size_t dim, std::size_t ceiling);
  std::size_t dimension;
  std::size_t ceiling;
};

/// Basis element of the Lie algebra as used by full_basis_matrices:
/// positive root vectors first (root-system order), then the negative root
/// vectors in the same order, then the Cartan elements h_1..h_r.
struct AlgebraBasisLabel
{
  enum class Kind { Positive, Negative, Cartan } kind;
  std::size_t index; ///< positive-root index, or simple index for Cartan
};

/// Irreducible highest-weight module realised by exact rational matrices.
struct HWModule
{
  IrrepSpec spec;
  std::shared_ptr<const RootSystem> roots;
  std::size_t dimension = 0;
  /// Fundamental coordinates of the weight of each basis vector.
  std::vector<IntVector> weights;
  /// Lowering word f_{i1} ... f_{ik} v_lambda that produced each basis vector.
  std::vector<std::vector<int>> words;
  std::vector<RationalMatrix> e, f, h;
  /// Empty until extend_to_full_algebra.
  std::vector<RationalMatrix> full_basis;
  std::vector<AlgebraBasisLabel> full_basis_labels;
};

/// prod over positive roots of <lambda+rho, a^vee> / <rho, a^vee>.
Integer weyl_dim(const IrrepSpec &spec);
Integer weyl_dim(const RootSystem &rs, const Weight &lambda);

/// Nonzero dominant weights with weyl_dim <= maxdim, in lexicographic order.
std::vector<Weight> enumerate_dominant_up_to_dim(const RootSystemType &t, std::size_t maxdim);

/// Builds the module weight space by weight space. Each candidate
/// f_i * b (b in the basis of the weight mu + alpha_i) is tested through the
/// raising map w -> (e_1 w, ..., e_r w), evaluated with [e_j, f_i] = delta h_i.
/// In an irreducible module that map is injective below the highest weight,
/// so its rank decides linear dependence exactly.
HWModule build_hw_module(const IrrepSpec &spec,
                         std::size_t ceiling = default_build_ceiling);

/// Populates full_basis with one matrix per root plus the Cartan elements.
void extend_to_full_algebra(HWModule &m);

/// Weight (in simple-root coordinates) of a basis element of the algebra.
IntVector basis_root(const RootSystem &rs, const AlgebraBasisLabel &label);

/// Structure constants c with [X_a, X_b] = sum_k c[a][b][k] X_k in the basis
/// of full_basis. Every decomposition is checked exactly against the matrices;
/// throws std::logic_error if a commutator leaves the span.
using StructureConstants = std::vector<std::vector<RationalVector>>;
StructureConstants structure_constants(const HWModule &m);

/// Direct sum of the given matrix families (block diagonal).
std::vector<RationalMatrix> direct_sum(const std::vector<std::vector<RationalMatrix>> &parts);

} // namespace liemod

#endif
