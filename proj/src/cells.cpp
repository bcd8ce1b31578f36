#include "liemod/cells.hpp"

#include "liemod/modality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liemod
{

FunctionalSet FunctionalSet::from_roots(const RootSystem &rs)
{
  FunctionalSet F;
  F.ambient_dim = static_cast<std::size_t>(rs.rank());
  for (const auto &alpha : rs.positive_roots()) {
    RationalVector cov(rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
      for (int k = 0; k < rs.rank(); ++k)
        cov[i] += alpha[k] * rs.cartan(k, i);
    F.functionals.push_back(std::move(cov));
  }
  return F;
}

namespace
{

RationalMatrix stack(const FunctionalSet &F, const std::vector<std::size_t> &idx)
{
  RationalMatrix m(idx.size(), F.ambient_dim);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < F.ambient_dim; ++c)
      m(r, c) = F.functionals[idx[r]][c];
  return m;
}

void check_point(const FunctionalSet &F, const RationalVector &v)
{
  if (v.size() != F.ambient_dim)
    throw std::invalid_argument("point dimension does not match the functional set");
}

} // namespace

std::vector<std::size_t> span_closure(const FunctionalSet &F,
                                      const std::vector<std::size_t> &subset)
{
  // A functional lies in the span iff it kills the common kernel.
  const auto kernel = kernel_basis(stack(F, subset));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < F.functionals.size(); ++k) {
    bool in_span = true;
    for (const auto &v : kernel)
      if (sgn(dot(F.functionals[k], v)) != 0) {
        in_span = false;
        break;
      }
    if (in_span)
      out.push_back(k);
  }
  return out;
}

Cell make_cell(const FunctionalSet &F, std::vector<std::size_t> flat)
{
  std::sort(flat.begin(), flat.end());
  const std::size_t rk = flat.empty() ? 0 : rank(stack(F, flat));
  return Cell{std::move(flat), F.ambient_dim - rk};
}

std::vector<Cell> enumerate_cells(const FunctionalSet &F)
{
  std::set<std::vector<std::size_t>> flats;
  std::vector<std::vector<std::size_t>> frontier{span_closure(F, {})};
  flats.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto &flat : frontier)
      for (std::size_t k = 0; k < F.functionals.size(); ++k) {
        if (std::binary_search(flat.begin(), flat.end(), k))
          continue;
        auto grown = flat;
        grown.push_back(k);
        auto closed = span_closure(F, grown);
        if (flats.insert(closed).second)
          next.push_back(std::move(closed));
      }
    frontier = std::move(next);
  }
  std::vector<Cell> cells;
  for (const auto &flat : flats)
    cells.push_back(make_cell(F, flat));
  std::sort(cells.begin(), cells.end(), [](const Cell &a, const Cell &b) {
    if (a.flat.size() != b.flat.size())
      return a.flat.size() < b.flat.size();
    return a.flat < b.flat;
  });
  return cells;
}

Cell cell_of_point(const FunctionalSet &F, const RationalVector &v)
{
  check_point(F, v);
  std::vector<std::size_t> flat;
  for (std::size_t k = 0; k < F.functionals.size(); ++k)
    if (sgn(dot(F.functionals[k], v)) == 0)
      flat.push_back(k);
  return make_cell(F, std::move(flat));
}

bool cell_contains(const FunctionalSet &F, const Cell &c, const RationalVector &v)
{
  check_point(F, v);
  std::size_t pos = 0;
  for (std::size_t k = 0; k < F.functionals.size(); ++k) {
    const bool in_flat = pos < c.flat.size() && c.flat[pos] == k;
    if (in_flat)
      ++pos;
    if ((sgn(dot(F.functionals[k], v)) == 0) != in_flat)
      return false;
  }
  return true;
}

std::vector<RationalVector> closure_basis(const FunctionalSet &F, const Cell &c)
{
  if (c.flat.empty()) {
    std::vector<RationalVector> basis;
    for (std::size_t i = 0; i < F.ambient_dim; ++i) {
      RationalVector e(F.ambient_dim);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return kernel_basis(stack(F, c.flat));
}

RationalVector sample_cell_point(const FunctionalSet &F, const Cell &c, std::mt19937_64 &rng)
{
  const auto basis = closure_basis(F, c);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const RationalVector coef = sample_vector(basis.size(), rng);
    RationalVector v(F.ambient_dim);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < F.ambient_dim; ++i)
        v[i] += coef[k] * basis[k][i];
    if (cell_contains(F, c, v))
      return v;
  }
  throw std::runtime_error("sample_cell_point: no point found (is the flat closed?)");
}

CentralizerData centralizer_data(const RootSystem &rs, const Cell &c, std::mt19937_64 &rng)
{
  const FunctionalSet F = FunctionalSet::from_roots(rs);
  for (std::size_t k : c.flat)
    if (k >= F.functionals.size())
      throw std::invalid_argument("centralizer_data: cell does not belong to this root system");
  if (span_closure(F, c.flat) != c.flat)
    throw std::invalid_argument("centralizer_data: flat is not closed");

  CentralizerData d;
  d.cell = c;
  d.vanishing_roots = c.flat;
  d.dim_centralizer = F.ambient_dim + 2 * c.flat.size();
  d.dim_center = c.closure_dim;
  d.dim_derived = d.dim_centralizer - d.dim_center;
  const auto p = sample_cell_point(F, c, rng);
  const auto q = sample_cell_point(F, c, rng);
  d.independent_of_point = cell_of_point(F, p).flat == cell_of_point(F, q).flat;
  return d;
}

} // namespace liemod
