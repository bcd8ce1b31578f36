#include "liemod/hw_module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace liemod
{

CeilingExceeded::CeilingExceeded(std::size_t dim, std::size_t ceil)
    : std::runtime_error("module dimension " + std::to_string(dim) +
                         " exceeds build ceiling " + std::to_string(ceil)),
      dimension(dim), ceiling(ceil)
{
}

Integer weyl_dim(const RootSystem &rs, const Weight &lambda)
{
  if (static_cast<int>(lambda.coords.size()) != rs.rank())
    throw std::invalid_argument("weyl_dim: weight has wrong length");
  if (!lambda.dominant())
    throw std::invalid_argument("weyl_dim: weight is not dominant");
  IntVector shifted = lambda.coords;
  IntVector rho(rs.rank(), 1);
  for (auto &x : shifted)
    x += 1;
  Rational num = 1, den = 1;
  for (const auto &alpha : rs.positive_roots()) {
    num *= rs.coroot_pairing(shifted, alpha);
    den *= rs.coroot_pairing(rho, alpha);
  }
  const Rational d = num / den;
  if (d.get_den() != 1)
    throw std::logic_error("weyl_dim: non-integral result");
  return d.get_num();
}

Integer weyl_dim(const IrrepSpec &spec)
{
  return weyl_dim(RootSystem(spec.type), spec.highest_weight);
}

std::vector<Weight> enumerate_dominant_up_to_dim(const RootSystemType &t, std::size_t maxdim)
{
  if (maxdim < 1)
    throw std::invalid_argument("enumerate_dominant_up_to_dim: maxdim must be positive");
  const RootSystem rs(t);
  const Integer bound(static_cast<unsigned long>(maxdim));
  std::vector<Weight> out;
  // Each weight is reached once as a nondecreasing sequence of unit steps;
  // dim grows strictly along the componentwise order, so an exceedance
  // prunes the whole cone above it.
  std::function<void(IntVector &, int)> grow = [&](IntVector &lambda, int start) {
    for (int i = start; i < rs.rank(); ++i) {
      ++lambda[i];
      if (weyl_dim(rs, Weight{lambda}) <= bound) {
        out.push_back(Weight{lambda});
        grow(lambda, i);
      }
      --lambda[i];
    }
  };
  IntVector zero(rs.rank(), 0);
  grow(zero, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace
{

using Sparse = std::vector<std::pair<std::size_t, Rational>>;

struct Candidate
{
  int lower;         // index i of f_i
  std::size_t from;  // basis vector b it is applied to
  std::vector<int> word;
};

} // namespace

HWModule build_hw_module(const IrrepSpec &spec, std::size_t ceiling)
{
  auto rs = std::make_shared<const RootSystem>(spec.type);
  const int r = rs->rank();
  const IntVector &lambda = spec.highest_weight.coords;
  if (static_cast<int>(lambda.size()) != r)
    throw std::invalid_argument("build_hw_module: weight has wrong length");
  if (!spec.highest_weight.dominant())
    throw std::invalid_argument("build_hw_module: weight is not dominant");
  const Integer expected = weyl_dim(*rs, spec.highest_weight);
  if (expected > Integer(static_cast<unsigned long>(ceiling)))
    throw CeilingExceeded(expected.get_ui(), ceiling);

  HWModule m;
  m.spec = spec;
  m.roots = rs;

  std::vector<std::vector<Sparse>> e_img(r), f_img(r);
  auto add_basis_vector = [&](IntVector weight, std::vector<int> word) {
    m.weights.push_back(std::move(weight));
    m.words.push_back(std::move(word));
    for (int i = 0; i < r; ++i) {
      e_img[i].emplace_back();
      f_img[i].emplace_back();
    }
    return m.weights.size() - 1;
  };

  // Weight spaces keyed by the simple-root coefficients of lambda - mu.
  std::map<IntVector, std::vector<std::size_t>> spaces;
  spaces[IntVector(r, 0)] = {add_basis_vector(lambda, {})};

  std::set<IntVector> level = {IntVector(r, 0)};
  while (!level.empty()) {
    std::set<IntVector> next;
    for (const auto &k : level)
      if (!spaces[k].empty())
        for (int i = 0; i < r; ++i) {
          IntVector n = k;
          ++n[i];
          next.insert(n);
        }

    for (const auto &key : next) {
      IntVector mu = lambda;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          mu[j] -= key[i] * rs->cartan(i, j);

      auto above = [&](int i) -> const std::vector<std::size_t> * {
        if (key[i] == 0)
          return nullptr;
        IntVector up = key;
        --up[i];
        auto it = spaces.find(up);
        return it == spaces.end() ? nullptr : &it->second;
      };

      std::vector<Candidate> cands;
      for (int i = 0; i < r; ++i)
        if (auto sp = above(i))
          for (std::size_t b : *sp) {
            std::vector<int> w{i};
            w.insert(w.end(), m.words[b].begin(), m.words[b].end());
            cands.push_back({i, b, std::move(w)});
          }
      std::sort(cands.begin(), cands.end(),
                [](const Candidate &a, const Candidate &b) { return a.word < b.word; });

      // Rows: concatenation of the weight spaces mu + alpha_j.
      std::vector<std::size_t> offset(r, 0);
      std::unordered_map<std::size_t, std::size_t> local;
      std::size_t rows = 0;
      for (int j = 0; j < r; ++j)
        if (auto sp = above(j)) {
          offset[j] = rows;
          for (std::size_t q = 0; q < sp->size(); ++q)
            local[(*sp)[q]] = q;
          rows += sp->size();
        }

      RationalMatrix images(rows, cands.size());
      for (std::size_t c = 0; c < cands.size(); ++c) {
        const int i = cands[c].lower;
        const std::size_t b = cands[c].from;
        for (int j = 0; j < r; ++j) {
          if (!above(j))
            continue;
          // e_j f_i b = f_i e_j b + delta_ij <mu + alpha_i, alpha_i^vee> b
          for (const auto &[src, coef] : e_img[j][b])
            for (const auto &[dst, coef2] : f_img[i][src])
              images(offset[j] + local.at(dst), c) += coef * coef2;
          if (i == j)
            images(offset[i] + local.at(b), c) += mu[i] + 2;
        }
      }

      RationalMatrix reduced = images;
      const auto pivots = rref(reduced);
      std::vector<std::size_t> fresh;
      for (std::size_t p : pivots) {
        const std::size_t g = add_basis_vector(mu, cands[p].word);
        fresh.push_back(g);
        for (int j = 0; j < r; ++j)
          if (auto sp = above(j))
            for (std::size_t q = 0; q < sp->size(); ++q)
              if (sgn(images(offset[j] + q, p)) != 0)
                e_img[j][g].emplace_back((*sp)[q], images(offset[j] + q, p));
      }
      std::vector<long> pivot_slot(cands.size(), -1);
      for (std::size_t q = 0; q < pivots.size(); ++q)
        pivot_slot[pivots[q]] = static_cast<long>(q);
      for (std::size_t c = 0; c < cands.size(); ++c) {
        Sparse img;
        if (pivot_slot[c] >= 0)
          img.emplace_back(fresh[pivot_slot[c]], Rational(1));
        else
          for (std::size_t q = 0; q < pivots.size(); ++q)
            if (sgn(reduced(q, c)) != 0)
              img.emplace_back(fresh[q], reduced(q, c));
        f_img[cands[c].lower][cands[c].from] = std::move(img);
      }
      spaces[key] = std::move(fresh);
      if (Integer(static_cast<unsigned long>(m.weights.size())) > expected)
        throw std::logic_error("build_hw_module: basis outgrew the Weyl dimension");
    }
    level = std::move(next);
  }

  const std::size_t n = m.weights.size();
  m.dimension = n;
  for (int i = 0; i < r; ++i) {
    RationalMatrix e(n, n), f(n, n), h(n, n);
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto &[t, c] : e_img[i][b])
        e(t, b) = c;
      for (const auto &[t, c] : f_img[i][b])
        f(t, b) = c;
      h(b, b) = m.weights[b][i];
    }
    m.e.push_back(std::move(e));
    m.f.push_back(std::move(f));
    m.h.push_back(std::move(h));
  }
  return m;
}

void extend_to_full_algebra(HWModule &m)
{
  const RootSystem &rs = *m.roots;
  const auto &pos = rs.positive_roots();
  const int r = rs.rank();
  std::vector<RationalMatrix> xs, ys;
  for (std::size_t p = 0; p < pos.size(); ++p) {
    if (static_cast<int>(p) < r) {
      xs.push_back(m.e[p]);
      ys.push_back(m.f[p]);
      continue;
    }
    // Left-normed along the smallest simple index that peels off a root.
    bool done = false;
    for (int i = 0; i < r && !done; ++i) {
      IntVector gamma = pos[p];
      if (gamma[i] == 0)
        continue;
      --gamma[i];
      const long q = rs.find_positive_root(gamma);
      if (q < 0)
        continue;
      xs.push_back(commutator(m.e[i], xs[q]));
      ys.push_back(commutator(m.f[i], ys[q]));
      done = true;
    }
    if (!done)
      throw std::logic_error("extend_to_full_algebra: root has no decomposition");
  }
  m.full_basis.clear();
  m.full_basis_labels.clear();
  for (std::size_t p = 0; p < pos.size(); ++p) {
    m.full_basis.push_back(std::move(xs[p]));
    m.full_basis_labels.push_back({AlgebraBasisLabel::Kind::Positive, p});
  }
  for (std::size_t p = 0; p < pos.size(); ++p) {
    m.full_basis.push_back(std::move(ys[p]));
    m.full_basis_labels.push_back({AlgebraBasisLabel::Kind::Negative, p});
  }
  for (int i = 0; i < r; ++i) {
    m.full_basis.push_back(m.h[i]);
    m.full_basis_labels.push_back({AlgebraBasisLabel::Kind::Cartan, static_cast<std::size_t>(i)});
  }
}

IntVector basis_root(const RootSystem &rs, const AlgebraBasisLabel &label)
{
  switch (label.kind) {
  case AlgebraBasisLabel::Kind::Positive:
    return rs.positive_roots()[label.index];
  case AlgebraBasisLabel::Kind::Negative: {
    IntVector v = rs.positive_roots()[label.index];
    for (auto &x : v)
      x = -x;
    return v;
  }
  case AlgebraBasisLabel::Kind::Cartan:
    break;
  }
  return IntVector(rs.rank(), 0);
}

StructureConstants structure_constants(const HWModule &m)
{
  if (m.full_basis.empty())
    throw std::invalid_argument("structure_constants: call extend_to_full_algebra first");
  const RootSystem &rs = *m.roots;
  const std::size_t n = m.full_basis.size();
  const std::size_t P = rs.num_positive_roots();
  const int r = rs.rank();

  std::map<IntVector, std::size_t> by_root;
  for (std::size_t a = 0; a < 2 * P; ++a)
    by_root[basis_root(rs, m.full_basis_labels[a])] = a;

  // First nonzero entry of each root vector.
  std::vector<std::pair<std::size_t, std::size_t>> probe(n);
  for (std::size_t a = 0; a < 2 * P; ++a) {
    const auto &x = m.full_basis[a];
    bool found = false;
    for (std::size_t i = 0; i < x.rows() && !found; ++i)
      for (std::size_t j = 0; j < x.cols() && !found; ++j)
        if (sgn(x(i, j)) != 0) {
          probe[a] = {i, j};
          found = true;
        }
    if (!found)
      throw std::logic_error("structure_constants: zero root vector (module not faithful)");
  }

  RationalMatrix cartan_diag(m.dimension, r);
  for (std::size_t b = 0; b < m.dimension; ++b)
    for (int i = 0; i < r; ++i)
      cartan_diag(b, i) = m.weights[b][i];

  StructureConstants c(n, std::vector<RationalVector>(n, RationalVector(n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const RationalMatrix comm = commutator(m.full_basis[a], m.full_basis[b]);
      IntVector w = basis_root(rs, m.full_basis_labels[a]);
      const IntVector wb = basis_root(rs, m.full_basis_labels[b]);
      for (int i = 0; i < r; ++i)
        w[i] += wb[i];
      RationalVector coeffs(n);
      RationalMatrix rebuilt(m.dimension, m.dimension);
      if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; })) {
        RationalVector d(m.dimension);
        for (std::size_t q = 0; q < m.dimension; ++q)
          d[q] = comm(q, q);
        auto sol = solve(cartan_diag, d);
        if (!sol)
          throw std::logic_error("structure_constants: bracket leaves the Cartan span");
        for (int i = 0; i < r; ++i) {
          coeffs[2 * P + i] = (*sol)[i];
          if (sgn((*sol)[i]) != 0)
            rebuilt += (*sol)[i] * m.full_basis[2 * P + i];
        }
      } else if (auto it = by_root.find(w); it != by_root.end()) {
        const std::size_t k = it->second;
        const auto [pi, pj] = probe[k];
        coeffs[k] = comm(pi, pj) / m.full_basis[k](pi, pj);
        if (sgn(coeffs[k]) != 0)
          rebuilt = coeffs[k] * m.full_basis[k];
      }
      if (!(rebuilt == comm))
        throw std::logic_error("structure_constants: bracket not in the expected span");
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(coeffs[k]) != 0) {
          c[a][b][k] = coeffs[k];
          c[b][a][k] = -coeffs[k];
        }
    }
  return c;
}

std::vector<RationalMatrix> direct_sum(const std::vector<std::vector<RationalMatrix>> &parts)
{
  if (parts.empty())
    return {};
  const std::size_t count = parts.front().size();
  std::size_t total = 0;
  for (const auto &p : parts) {
    if (p.size() != count)
      throw std::invalid_argument("direct_sum: families have different lengths");
    total += count == 0 ? 0 : p.front().rows();
  }
  std::vector<RationalMatrix> out(count, RationalMatrix(total, total));
  std::size_t off = 0;
  for (const auto &p : parts) {
    const std::size_t d = count == 0 ? 0 : p.front().rows();
    for (std::size_t k = 0; k < count; ++k)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          out[k](off + i, off + j) = p[k](i, j);
    off += d;
  }
  return out;
}

} // namespace liemod
