#include "liemod/graded.hpp"

#include "liemod/polynomial.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace liemod
{

std::string GradingSpec::describe() const
{
  std::ostringstream os;
  os << to_string(type) << " m=" << (period ? std::to_string(*period) : std::string("inf"))
     << " labels=";
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << (i ? "," : "") << labels[i];
  return os.str();
}

long GradedAlgebra::normalize(long d) const
{
  if (!spec.period)
    return d;
  const long m = *spec.period;
  return ((d % m) + m) % m;
}

RationalMatrix GradedAlgebra::ad_of(const RationalVector &x) const
{
  if (x.size() != dim())
    throw std::invalid_argument("ad_of: element has wrong length");
  RationalMatrix m(dim(), dim());
  for (std::size_t a = 0; a < dim(); ++a)
    if (sgn(x[a]) != 0)
      m += x[a] * ad[a];
  return m;
}

RationalVector GradedAlgebra::coordinates_of(const RationalMatrix &adx) const
{
  const std::size_t n = dim();
  RationalVector t(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(adx(i, j)) != 0 && sgn(ad[k](j, i)) != 0)
          s += adx(i, j) * ad[k](j, i);
    t[k] = s;
  }
  RationalVector x = trace_form_inverse * t;
  if (!(ad_of(x) == adx))
    throw std::domain_error("coordinates_of: matrix is not an inner derivation");
  return x;
}

std::optional<long> GradedAlgebra::homogeneous_degree(const RationalVector &x) const
{
  std::optional<long> deg;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (sgn(x[a]) == 0)
      continue;
    if (deg && *deg != degree[a])
      return std::nullopt;
    deg = degree[a];
  }
  return deg;
}

RationalVector GradedAlgebra::bracket(const RationalVector &x, const RationalVector &y) const
{
  return ad_of(x) * y;
}

GradedAlgebra build_grading(const GradingSpec &spec)
{
  validate(spec.type);
  if (static_cast<int>(spec.labels.size()) != spec.type.rank)
    throw std::invalid_argument("build_grading: need one label per simple root");
  if (spec.period && *spec.period < 1)
    throw std::invalid_argument("build_grading: period must be positive");
  for (long l : spec.labels) {
    if (l < 0)
      throw std::invalid_argument("build_grading: labels must be nonnegative");
    if (spec.period && l >= *spec.period)
      throw std::invalid_argument("build_grading: labels must lie in [0, m)");
  }

  GradedAlgebra ga;
  ga.spec = spec;
  auto rs = std::make_shared<const RootSystem>(spec.type);
  ga.roots = rs;

  HWModule adjoint = build_hw_module({spec.type, rs->highest_root_weight()});
  extend_to_full_algebra(adjoint);
  ga.basis_labels = adjoint.full_basis_labels;
  ga.constants = structure_constants(adjoint);

  const std::size_t n = ga.dim();
  for (std::size_t a = 0; a < n; ++a) {
    const IntVector root = basis_root(*rs, ga.basis_labels[a]);
    long d = 0;
    for (int i = 0; i < rs->rank(); ++i)
      d += root[i] * spec.labels[i];
    ga.degree.push_back(ga.normalize(d));
    ga.components[ga.degree.back()].push_back(a);
  }
  ga.g0 = ga.components[ga.normalize(0)];
  ga.g1 = ga.components[ga.normalize(1)];

  for (std::size_t a = 0; a < n; ++a) {
    RationalMatrix m(n, n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k)
        m(k, b) = ga.constants[a][b][k];
    ga.ad.push_back(std::move(m));
  }

  ga.g0_on_g1.space_dim = ga.g1.size();
  for (std::size_t a : ga.g0)
    ga.g0_on_g1.action_matrices.push_back(ga.ad[a].restrict(ga.g1, ga.g1));

  ga.trace_form = RationalMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Rational t = (ga.ad[a] * ga.ad[b]).trace();
      ga.trace_form(a, b) = t;
      ga.trace_form(b, a) = t;
    }
  ga.trace_form_inverse = inverse(ga.trace_form);
  return ga;
}

bool degree_additivity_holds(const GradedAlgebra &ga)
{
  for (std::size_t a = 0; a < ga.dim(); ++a)
    for (std::size_t b = 0; b < ga.dim(); ++b)
      for (std::size_t k = 0; k < ga.dim(); ++k)
        if (sgn(ga.constants[a][b][k]) != 0 &&
            ga.degree[k] != ga.add_degrees(ga.degree[a], ga.degree[b]))
          return false;
  return true;
}

bool trace_form_compatible(const GradedAlgebra &ga)
{
  for (std::size_t a = 0; a < ga.dim(); ++a)
    for (std::size_t b = 0; b < ga.dim(); ++b)
      if (sgn(ga.trace_form(a, b)) != 0 && ga.add_degrees(ga.degree[a], ga.degree[b]) != 0)
        return false;
  for (const auto &[deg, idx] : ga.components) {
    auto it = ga.components.find(ga.normalize(-deg));
    if (it == ga.components.end() || it->second.size() != idx.size())
      return false;
    if (rank(ga.trace_form.restrict(idx, it->second)) != idx.size())
      return false;
  }
  return true;
}

std::size_t rank_of_grading(const GradedAlgebra &ga, std::size_t trials, std::uint64_t seed)
{
  if (ga.g1.empty())
    return 0;
  return ga.g1.size() - generic_orbit_dim(ga.g0_on_g1, trials, seed).generic_orbit_dim;
}

JordanPair jordan_chevalley(const RationalMatrix &x)
{
  if (!x.square())
    throw std::invalid_argument("jordan_chevalley: matrix must be square");
  const std::size_t n = x.rows();
  if (n == 0)
    return {x, x};
  const RationalPolynomial p = char_poly_squarefree(x).second;
  const RationalPolynomial dp = p.derivative();
  const int steps = static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
  RationalMatrix y = x;
  for (int s = 0; s <= steps; ++s) {
    const RationalMatrix py = p.evaluate(y);
    if (py.is_zero())
      return {y, x - y};
    y -= py * inverse(dp.evaluate(y));
  }
  throw std::logic_error("jordan_chevalley: Newton iteration did not converge");
}

bool is_nilpotent(const RationalMatrix &x)
{
  const auto p = char_poly(x);
  return p == RationalPolynomial::monomial(1, x.rows());
}

bool is_semisimple(const RationalMatrix &x)
{
  return squarefree_part(char_poly(x)).evaluate(x).is_zero();
}

std::pair<RationalVector, RationalVector> jordan_chevalley_element(const GradedAlgebra &ga,
                                                                   const RationalVector &x)
{
  const RationalMatrix adx = ga.ad_of(x);
  const JordanPair jp = jordan_chevalley(adx);
  if (jp.nilpotent.is_zero())
    return {x, RationalVector(ga.dim())};
  RationalVector xs = ga.coordinates_of(jp.semisimple);
  RationalVector xn(ga.dim());
  for (std::size_t a = 0; a < ga.dim(); ++a)
    xn[a] = x[a] - xs[a];
  return {std::move(xs), std::move(xn)};
}

std::vector<RationalVector> cartan_subspace(const GradedAlgebra &ga, std::uint64_t seed,
                                            std::size_t trials)
{
  const std::size_t n = ga.dim();
  std::mt19937_64 rng(seed);
  std::vector<RationalVector> found;
  std::vector<RationalVector> space; // spans z(found) intersected with g1
  for (std::size_t a : ga.g1) {
    RationalVector e(n);
    e[a] = 1;
    space.push_back(std::move(e));
  }

  auto in_span = [&](const RationalVector &v) {
    if (found.empty())
      return is_zero(v);
    auto cols = found;
    const std::size_t before = rank(RationalMatrix::from_columns(cols, n));
    cols.push_back(v);
    return rank(RationalMatrix::from_columns(cols, n)) == before;
  };

  while (!space.empty()) {
    std::optional<RationalVector> fresh;
    for (std::size_t attempt = 0; attempt < trials && !fresh; ++attempt) {
      const RationalVector coef = sample_vector(space.size(), rng);
      RationalVector x(n);
      for (std::size_t k = 0; k < space.size(); ++k)
        if (sgn(coef[k]) != 0)
          for (std::size_t i = 0; i < n; ++i)
            x[i] += coef[k] * space[k][i];
      // Elements of the span of commuting semisimple elements are semisimple.
      if (in_span(x))
        continue;
      RationalVector xs = jordan_chevalley_element(ga, x).first;
      if (!in_span(xs))
        fresh = std::move(xs);
    }
    if (!fresh)
      break;
    const RationalMatrix adxs = ga.ad_of(*fresh);
    found.push_back(*fresh);
    std::vector<RationalVector> images;
    for (const auto &w : space)
      images.push_back(adxs * w);
    const auto kernel = kernel_basis(RationalMatrix::from_columns(images, n));
    std::vector<RationalVector> next;
    for (const auto &k : kernel) {
      RationalVector v(n);
      for (std::size_t j = 0; j < space.size(); ++j)
        if (sgn(k[j]) != 0)
          for (std::size_t i = 0; i < n; ++i)
            v[i] += k[j] * space[j][i];
      next.push_back(std::move(v));
    }
    space = std::move(next);
  }
  return found;
}

} // namespace liemod
