#include "liemod/modality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liemod
{

void ActionSpec::check() const
{
  for (const auto &x : action_matrices)
    if (x.rows() != space_dim || x.cols() != space_dim)
      throw std::invalid_argument("ActionSpec: matrix shape does not match space_dim");
}

ActionSpec ActionSpec::from_module(const HWModule &m)
{
  if (!m.full_basis.empty())
    return ActionSpec{m.dimension, m.full_basis};
  HWModule full = m;
  extend_to_full_algebra(full);
  return ActionSpec{full.dimension, std::move(full.full_basis)};
}

RationalVector sample_vector(std::size_t n, std::mt19937_64 &rng, long box)
{
  const auto width = static_cast<std::uint64_t>(2 * box + 1);
  RationalVector v(n);
  for (auto &x : v)
    x = static_cast<long>(rng() % width) - box;
  return v;
}

std::size_t orbit_dim_at(const ActionSpec &a, const RationalVector &v)
{
  if (v.size() != a.space_dim)
    throw std::invalid_argument("orbit_dim_at: vector length does not match space_dim");
  // Columns X_k v span the tangent space of the orbit at v.
  RationalMatrix tangent(a.space_dim, a.algebra_dim());
  for (std::size_t k = 0; k < a.algebra_dim(); ++k) {
    const RationalVector col = a.action_matrices[k] * v;
    for (std::size_t i = 0; i < a.space_dim; ++i)
      tangent(i, k) = col[i];
  }
  return rank(tangent);
}

std::size_t stabilizer_dim_at(const ActionSpec &a, const RationalVector &v)
{
  return a.algebra_dim() - orbit_dim_at(a, v);
}

OrbitDimReport generic_orbit_dim(const ActionSpec &a, std::size_t trials, std::uint64_t seed)
{
  if (trials < 1)
    throw std::invalid_argument("generic_orbit_dim: trials must be positive");
  a.check();
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  const std::size_t cap = std::min(a.algebra_dim(), a.space_dim);
  std::size_t used = 0;
  for (; used < trials; ++used) {
    best = std::max(best, orbit_dim_at(a, sample_vector(a.space_dim, rng)));
    if (best == cap) {
      ++used;
      break;
    }
  }
  return OrbitDimReport{best, a.algebra_dim() - best, used, seed};
}

std::size_t modality_visible(const ActionSpec &a, std::size_t trials, std::uint64_t seed)
{
  return a.space_dim - generic_orbit_dim(a, trials, seed).generic_orbit_dim;
}

long sl2_modality(const std::vector<unsigned> &summands)
{
  long dim = 0;
  std::vector<unsigned> nontrivial;
  for (unsigned n : summands) {
    dim += static_cast<long>(n) + 1;
    if (n > 0)
      nontrivial.push_back(n);
  }
  if (nontrivial.empty())
    return dim;
  if (nontrivial.size() == 1 && (nontrivial[0] == 1 || nontrivial[0] == 2))
    return dim - 2;
  return dim - 3;
}

ActionSpec sl2_action(const std::vector<unsigned> &summands)
{
  std::map<unsigned, std::vector<RationalMatrix>> cache;
  std::vector<std::vector<RationalMatrix>> parts;
  for (unsigned n : summands) {
    auto it = cache.find(n);
    if (it == cache.end()) {
      std::vector<RationalMatrix> mats;
      if (n == 0) {
        mats.assign(3, RationalMatrix(1, 1));
      } else {
        HWModule m = build_hw_module({{Family::A, 1}, Weight{{static_cast<long>(n)}}});
        extend_to_full_algebra(m);
        mats = m.full_basis;
      }
      it = cache.emplace(n, std::move(mats)).first;
    }
    parts.push_back(it->second);
  }
  if (parts.empty())
    return ActionSpec{0, std::vector<RationalMatrix>(3, RationalMatrix(0, 0))};
  auto mats = direct_sum(parts);
  const std::size_t dim = mats.front().rows();
  return ActionSpec{dim, std::move(mats)};
}

long modality_from_cover(const std::vector<CoverPiece> &pieces)
{
  if (pieces.empty())
    throw std::invalid_argument("modality_from_cover: empty cover");
  long best = 0;
  bool first = true;
  for (const auto &p : pieces) {
    if (p.orbit_dim < 0 || p.orbit_dim > p.closure_dim)
      throw std::invalid_argument("modality_from_cover: need 0 <= orbit_dim <= closure_dim");
    const long mod = p.closure_dim - p.orbit_dim;
    if (first || mod > best)
      best = mod;
    first = false;
  }
  return best;
}

ExmoReport exmo_family_check(unsigned n, unsigned d, std::uint64_t seed)
{
  if (n < 3 || d < 2 || d > n - 1)
    throw std::invalid_argument("exmo_family_check: need n >= 3 and 2 <= d <= n - 1");
  HWModule natural = build_hw_module(
      {{Family::A, static_cast<int>(n - 1)}, Weight{[&] {
         IntVector w(n - 1, 0);
         w[0] = 1;
         return w;
       }()}});
  extend_to_full_algebra(natural);
  std::vector<std::vector<RationalMatrix>> copies(d, natural.full_basis);
  ActionSpec action{static_cast<std::size_t>(n) * d, direct_sum(copies)};

  ExmoReport rep;
  rep.n = n;
  rep.d = d;
  rep.space_dim = action.space_dim;
  rep.generic_orbit_dim = generic_orbit_dim(action, default_trials, seed).generic_orbit_dim;
  rep.regular_sheet_modality =
      static_cast<long>(rep.space_dim) - static_cast<long>(rep.generic_orbit_dim);

  // A point (v, l_1 v, ..., l_{d-1} v) with v and the l_i nonzero.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  RationalVector v;
  do
    v = sample_vector(n, rng);
  while (is_zero(v));
  std::vector<Rational> scale(d, Rational(1));
  for (unsigned k = 1; k < d; ++k)
    do
      scale[k] = sample_vector(1, rng)[0];
    while (sgn(scale[k]) == 0);
  RationalVector point(action.space_dim);
  for (unsigned k = 0; k < d; ++k)
    for (unsigned i = 0; i < n; ++i)
      point[k * n + i] = scale[k] * v[i];
  rep.family_orbit_dim = orbit_dim_at(action, point);

  // Rank of the differential of (v, l) -> (v, l_1 v, ...) at that parameter.
  RationalMatrix jac(action.space_dim, n + d - 1);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < d; ++k)
      jac(k * n + i, i) = scale[k];
  for (unsigned k = 1; k < d; ++k)
    for (unsigned i = 0; i < n; ++i)
      jac(k * n + i, n + k - 1) = v[i];
  rep.family_dim = rank(jac);

  rep.family_lower_bound =
      static_cast<long>(rep.family_dim) - static_cast<long>(rep.family_orbit_dim);
  rep.modality_regular = rep.family_lower_bound <= rep.regular_sheet_modality;
  return rep;
}

} // namespace liemod
