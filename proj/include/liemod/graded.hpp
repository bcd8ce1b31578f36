#ifndef LIEMOD_GRADED_HPP
#define LIEMOD_GRADED_HPP

#include "liemod/hw_module.hpp"
#include "liemod/modality.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace liemod
{

/// Inner Z_m-grading given by degrees of the simple root vectors. An empty
/// period means m = infinity (a Z-grading).
struct GradingSpec
{
  RootSystemType type;
  std::optional<long> period;
  std::vector<long> labels;

  std::string describe() const;
};

/// Lie algebra with a grading, in the Chevalley-type basis of
/// extend_to_full_algebra (positive roots, negative roots, Cartan).
struct GradedAlgebra
{
  GradingSpec spec;
  std::shared_ptr<const RootSystem> roots;
  std::vector<AlgebraBasisLabel> basis_labels;
  std::vector<long> degree;
  StructureConstants constants;
  /// ad(X_a) in the algebra basis.
  std::vector<RationalMatrix> ad;
  std::map<long, std::vector<std::size_t>> components;
  std::vector<std::size_t> g0, g1;
  /// Adjoint action of the g0 basis on g1 (in the g1 basis).
  ActionSpec g0_on_g1;
  /// Trace form tr(ad x ad y) in the algebra basis, and its inverse.
  RationalMatrix trace_form;
  RationalMatrix trace_form_inverse;

  std::size_t dim() const { return basis_labels.size(); }
  long normalize(long d) const;
  long add_degrees(long a, long b) const { return normalize(a + b); }

  RationalMatrix ad_of(const RationalVector &x) const;
  /// Coordinates of x given ad(x); throws std::domain_error when the matrix
  /// is not in ad(g).
  RationalVector coordinates_of(const RationalMatrix &adx) const;
  /// Degree of x if x is nonzero and homogeneous.
  std::optional<long> homogeneous_degree(const RationalVector &x) const;
  RationalVector bracket(const RationalVector &x, const RationalVector &y) const;
};

/// Throws std::invalid_argument on bad labels or period.
GradedAlgebra build_grading(const GradingSpec &spec);

/// Exhaustive check that [g_i, g_j] lies in g_{i+j}.
bool degree_additivity_holds(const GradedAlgebra &ga);
/// <g_i, g_j> = 0 unless i + j = 0, and g_i pairs nondegenerately with g_{-i}.
bool trace_form_compatible(const GradedAlgebra &ga);

/// dim g1 - generic orbit dimension of G0 on g1.
std::size_t rank_of_grading(const GradedAlgebra &ga, std::size_t trials, std::uint64_t seed);

struct JordanPair
{
  RationalMatrix semisimple;
  RationalMatrix nilpotent;
};

/// Newton iteration y <- y - p(y) p'(y)^{-1} on the squarefree part p of the
/// characteristic polynomial; converges in ceil(log2 n) steps.
JordanPair jordan_chevalley(const RationalMatrix &x);

bool is_nilpotent(const RationalMatrix &x);
/// Minimal polynomial squarefree, i.e. diagonalizable over the algebraic closure.
bool is_semisimple(const RationalMatrix &x);

/// Jordan decomposition of an element of g via its adjoint matrix.
std::pair<RationalVector, RationalVector> jordan_chevalley_element(const GradedAlgebra &ga,
                                                                   const RationalVector &x);

/// Pairwise commuting semisimple elements of g1 spanning a Cartan subspace.
std::vector<RationalVector> cartan_subspace(const GradedAlgebra &ga, std::uint64_t seed,
                                            std::size_t trials = default_trials);

} // namespace liemod

#endif
