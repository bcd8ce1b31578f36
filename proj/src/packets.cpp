#include "liemod/packets.hpp"

#include "liemod/modality.hpp"
#include "liemod/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace liemod
{

unsigned JordanTypeA::size() const
{
  unsigned s = 0;
  for (const auto &b : blocks)
    s += b.first;
  return s;
}

void JordanTypeA::normalize()
{
  for (auto &b : blocks)
    std::sort(b.second.begin(), b.second.end(), std::greater<>());
  std::sort(blocks.begin(), blocks.end());
}

std::string JordanTypeA::to_string() const
{
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    os << (k ? ", " : "") << "(" << blocks[k].first << ",[";
    for (std::size_t j = 0; j < blocks[k].second.size(); ++j)
      os << (j ? "," : "") << blocks[k].second[j];
    os << "])";
  }
  os << "}";
  return os.str();
}

std::vector<Partition> partitions_of(unsigned n)
{
  std::vector<Partition> out;
  Partition cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate(const Partition &p)
{
  Partition c;
  if (p.empty())
    return c;
  for (unsigned j = 1; j <= p.front(); ++j) {
    unsigned count = 0;
    for (unsigned part : p)
      if (part >= j)
        ++count;
    c.push_back(count);
  }
  return c;
}

namespace
{

void check_datum(const JordanTypeA &jt)
{
  for (const auto &[k, part] : jt.blocks) {
    unsigned s = 0;
    for (unsigned x : part)
      s += x;
    if (k == 0 || s != k)
      throw std::invalid_argument("Jordan type: partition does not match its block size " +
                                  jt.to_string());
  }
}

/// Distinct block eigenvalues with sum_j k_j c_j = 0.
std::vector<Rational> default_eigenvalues(const JordanTypeA &jt)
{
  const std::size_t s = jt.blocks.size();
  std::vector<Rational> c(s, Rational(0));
  if (s <= 1)
    return c;
  Rational acc = 0;
  for (std::size_t j = 0; j + 1 < s; ++j) {
    c[j] = static_cast<long>(j + 1);
    acc += c[j] * static_cast<long>(jt.blocks[j].first);
  }
  c[s - 1] = -acc / static_cast<long>(jt.blocks[s - 1].first);
  return c;
}

RationalMatrix block_matrix(const JordanTypeA &jt, const std::vector<Rational> &eig)
{
  const unsigned n = jt.size();
  RationalMatrix x(n, n);
  std::size_t pos = 0;
  for (std::size_t b = 0; b < jt.blocks.size(); ++b)
    for (unsigned part : jt.blocks[b].second) {
      for (unsigned i = 0; i < part; ++i) {
        x(pos + i, pos + i) = eig[b];
        if (i + 1 < part)
          x(pos + i, pos + i + 1) = 1;
      }
      pos += part;
    }
  return x;
}

/// Coroot coordinates of a diagonal trace-zero matrix.
RationalVector cartan_coordinates(const RationalMatrix &diag)
{
  const std::size_t n = diag.rows();
  RationalVector x(n - 1);
  Rational acc = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    acc += diag(i, i);
    x[i] = acc;
  }
  return x;
}

long formula_orbit_dim(const JordanTypeA &jt)
{
  const long n = jt.size();
  long cent = 0;
  for (const auto &[k, part] : jt.blocks)
    for (unsigned c : conjugate(part))
      cent += static_cast<long>(c) * c;
  return n * n - cent;
}

Cell cell_for(const JordanTypeA &jt, const FunctionalSet &F)
{
  const RationalMatrix semisimple = block_matrix(
      JordanTypeA{[&] {
        auto b = jt.blocks;
        for (auto &[k, part] : b)
          part.assign(k, 1);
        return b;
      }()},
      default_eigenvalues(jt));
  return cell_of_point(F, cartan_coordinates(semisimple));
}

RationalVector vec(const RationalMatrix &m)
{
  RationalVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      v.push_back(m(i, j));
  return v;
}

RationalMatrix tangent_matrix(const std::vector<RationalMatrix> &basis, const RationalMatrix &x)
{
  std::vector<RationalVector> cols;
  for (const auto &b : basis)
    cols.push_back(vec(commutator(b, x)));
  return RationalMatrix::from_columns(cols, x.rows() * x.cols());
}

std::vector<RationalMatrix> combine(const std::vector<RationalMatrix> &basis,
                                    const std::vector<RationalVector> &coeffs)
{
  std::vector<RationalMatrix> out;
  for (const auto &c : coeffs) {
    RationalMatrix m(basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (sgn(c[k]) != 0)
        m += c[k] * basis[k];
    out.push_back(std::move(m));
  }
  return out;
}

} // namespace

RationalMatrix packet_representative(const JordanTypeA &jt)
{
  check_datum(jt);
  return block_matrix(jt, default_eigenvalues(jt));
}

std::vector<PacketDescriptor> enumerate_packets_adjoint_typeA(unsigned n)
{
  if (n < 2 || n > 5)
    throw std::invalid_argument("enumerate_packets_adjoint_typeA: need 2 <= n <= 5");
  std::vector<std::pair<unsigned, Partition>> kinds;
  for (unsigned k = 1; k <= n; ++k)
    for (auto &p : partitions_of(k))
      kinds.emplace_back(k, std::move(p));

  std::vector<JordanTypeA> types;
  JordanTypeA cur;
  std::function<void(unsigned, std::size_t)> rec = [&](unsigned left, std::size_t from) {
    if (left == 0) {
      JordanTypeA t = cur;
      t.normalize();
      types.push_back(std::move(t));
      return;
    }
    for (std::size_t k = from; k < kinds.size(); ++k)
      if (kinds[k].first <= left) {
        cur.blocks.push_back(kinds[k]);
        rec(left - kinds[k].first, k);
        cur.blocks.pop_back();
      }
  };
  rec(n, 0);
  std::sort(types.begin(), types.end());

  const RootSystem rs({Family::A, static_cast<int>(n - 1)});
  const FunctionalSet F = FunctionalSet::from_roots(rs);
  std::vector<PacketDescriptor> out;
  for (auto &t : types) {
    PacketDescriptor p;
    p.cell = cell_for(t, F);
    p.orbit_dim = formula_orbit_dim(t);
    p.modality = static_cast<long>(p.cell.closure_dim);
    p.closure_dim = p.orbit_dim + p.modality;
    p.datum = std::move(t);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<RationalMatrix> sl_basis(unsigned n)
{
  std::vector<RationalMatrix> b;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i != j) {
        RationalMatrix e(n, n);
        e(i, j) = 1;
        b.push_back(std::move(e));
      }
  for (unsigned i = 0; i + 1 < n; ++i) {
    RationalMatrix h(n, n);
    h(i, i) = 1;
    h(i + 1, i + 1) = -1;
    b.push_back(std::move(h));
  }
  return b;
}

std::size_t sl_orbit_dim(const RationalMatrix &x)
{
  if (!x.square())
    throw std::invalid_argument("sl_orbit_dim: matrix must be square");
  return rank(tangent_matrix(sl_basis(static_cast<unsigned>(x.rows())), x));
}

std::vector<RationalMatrix> sl_centralizer(const RationalMatrix &x)
{
  const auto basis = sl_basis(static_cast<unsigned>(x.rows()));
  return combine(basis, kernel_basis(tangent_matrix(basis, x)));
}

std::vector<RationalMatrix> center_of_centralizer(const RationalMatrix &x)
{
  const auto cent = sl_centralizer(x);
  if (cent.empty())
    return {};
  const std::size_t n2 = x.rows() * x.cols();
  RationalMatrix sys(cent.size() * n2, cent.size());
  for (std::size_t k = 0; k < cent.size(); ++k)
    for (std::size_t l = 0; l < cent.size(); ++l) {
      const RationalVector v = vec(commutator(cent[k], cent[l]));
      for (std::size_t i = 0; i < n2; ++i)
        sys(l * n2 + i, k) = v[i];
    }
  const auto coeffs = kernel_basis(sys);
  if (coeffs.empty())
    return {};
  return combine(cent, coeffs);
}

PacketDims packet_dims(const PacketDescriptor &p, const RootSystem &rs)
{
  check_datum(p.datum);
  const unsigned n = p.datum.size();
  if (rs.type().family != Family::A || rs.rank() + 1 != static_cast<int>(n))
    throw std::invalid_argument("packet_dims: descriptor does not match the root system");
  const FunctionalSet F = FunctionalSet::from_roots(rs);
  for (std::size_t k : p.cell.flat)
    if (k >= F.functionals.size())
      throw std::invalid_argument("packet_dims: cell does not belong to the root system");
  if (span_closure(F, p.cell.flat) != p.cell.flat)
    throw std::invalid_argument("packet_dims: cell flat is not closed");
  if (cell_for(p.datum, F).flat != p.cell.flat)
    throw std::invalid_argument("packet_dims: cell does not match the Levi blocks");

  PacketDims d;
  d.orbit_dim = static_cast<long>(sl_orbit_dim(packet_representative(p.datum)));
  d.modality = static_cast<long>(p.cell.closure_dim);
  d.closure_dim = d.orbit_dim + d.modality;
  return d;
}

JordanTypeA classify_adjoint_typeA(const RationalMatrix &x)
{
  if (!x.square())
    throw std::invalid_argument("classify_adjoint_typeA: matrix must be square");
  const std::size_t n = x.rows();
  JordanTypeA jt;
  if (n == 0)
    return jt;
  const RationalPolynomial g = char_poly_squarefree(x).second;
  const RationalMatrix gx = g.evaluate(x);

  // Roots of g are refined by d_j(r) = dim ker (x - r)^j, read off from the
  // characteristic polynomial of x on ker g(x)^j.
  std::vector<std::pair<RationalPolynomial, std::vector<std::size_t>>> classes{{g, {}}};
  RationalMatrix power = gx;
  for (std::size_t j = 1; j <= n; ++j) {
    const auto kernel = kernel_basis(power);
    const RationalMatrix basis = RationalMatrix::from_columns(kernel, n);
    std::vector<RationalVector> cols;
    for (const auto &b : kernel)
      cols.push_back(*solve(basis, x * b));
    const RationalMatrix restricted = RationalMatrix::from_columns(cols, kernel.size());
    const auto pieces = squarefree_decomposition(char_poly(restricted));

    std::vector<std::pair<RationalPolynomial, std::vector<std::size_t>>> refined;
    for (const auto &[h, dims] : classes)
      for (const auto &[w, e] : pieces) {
        RationalPolynomial q = gcd(h, w);
        if (q.degree() > 0) {
          auto d = dims;
          d.push_back(e);
          refined.emplace_back(std::move(q), std::move(d));
        }
      }
    classes = std::move(refined);
    if (kernel.size() == n)
      break;
    power = power * gx;
  }

  for (const auto &[q, dims] : classes) {
    const unsigned mult = static_cast<unsigned>(dims.back());
    // blocks of size >= j number d_j - d_{j-1}
    std::vector<unsigned> at_least;
    for (std::size_t j = 0; j < dims.size(); ++j)
      at_least.push_back(static_cast<unsigned>(dims[j] - (j ? dims[j - 1] : 0)));
    Partition part;
    for (std::size_t s = 0; s < at_least.size(); ++s) {
      const unsigned exact = at_least[s] - (s + 1 < at_least.size() ? at_least[s + 1] : 0);
      for (unsigned c = 0; c < exact; ++c)
        part.push_back(static_cast<unsigned>(s + 1));
    }
    for (long k = 0; k < q.degree(); ++k)
      jt.blocks.emplace_back(mult, part);
  }
  jt.normalize();
  return jt;
}

std::pair<RationalMatrix, RationalMatrix> random_unimodular(unsigned n, std::mt19937_64 &rng)
{
  RationalMatrix g = RationalMatrix::identity(n), ginv = RationalMatrix::identity(n);
  if (n < 2)
    return {g, ginv};
  for (unsigned step = 0; step < 3 * n; ++step) {
    const unsigned i = static_cast<unsigned>(rng() % n);
    unsigned j = static_cast<unsigned>(rng() % (n - 1));
    if (j >= i)
      ++j;
    long t = static_cast<long>(rng() % 4) - 2;
    if (t >= 0)
      ++t; // t in {-2, -1, 1, 2}
    RationalMatrix e = RationalMatrix::identity(n), einv = RationalMatrix::identity(n);
    e(i, j) = t;
    einv(i, j) = -t;
    g = e * g;
    ginv = ginv * einv;
  }
  return {g, ginv};
}

RationalMatrix random_trace_zero(unsigned n, std::mt19937_64 &rng)
{
  RationalMatrix x(n, n);
  const RationalVector v = sample_vector(static_cast<std::size_t>(n) * n, rng);
  Rational tr = 0;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      x(i, j) = v[i * n + j];
      if (i == j && i + 1 < n)
        tr += x(i, j);
    }
  x(n - 1, n - 1) = -tr;
  return x;
}

RationalMatrix sample_packet_point(const JordanTypeA &jt, std::mt19937_64 &rng)
{
  check_datum(jt);
  const std::size_t s = jt.blocks.size();
  std::vector<Rational> eig(s, Rational(0));
  if (s > 1)
    for (;;) {
      Rational acc = 0;
      for (std::size_t j = 0; j + 1 < s; ++j) {
        eig[j] = sample_vector(1, rng)[0];
        acc += eig[j] * static_cast<long>(jt.blocks[j].first);
      }
      eig[s - 1] = -acc / static_cast<long>(jt.blocks[s - 1].first);
      bool distinct = true;
      for (std::size_t a = 0; a < s && distinct; ++a)
        for (std::size_t b = a + 1; b < s && distinct; ++b)
          distinct = eig[a] != eig[b];
      if (distinct)
        break;
    }
  const auto [g, ginv] = random_unimodular(jt.size(), rng);
  return g * block_matrix(jt, eig) * ginv;
}

namespace
{

JordanTypeA jt_of(std::vector<std::pair<unsigned, Partition>> blocks)
{
  JordanTypeA t{std::move(blocks)};
  t.normalize();
  return t;
}

} // namespace

std::vector<SheetSpec> known_sheets(unsigned n)
{
  if (n == 2)
    return {
        {"regular", 3, 2, {jt_of({{1, {1}}, {1, {1}}}), jt_of({{2, {2}}})}},
        {"zero", 0, 0, {jt_of({{2, {1, 1}}})}},
    };
  if (n == 3)
    return {
        {"regular",
         8,
         6,
         {jt_of({{1, {1}}, {1, {1}}, {1, {1}}}), jt_of({{1, {1}}, {2, {2}}}), jt_of({{3, {3}}})}},
        {"subregular", 5, 4, {jt_of({{1, {1}}, {2, {1, 1}}}), jt_of({{3, {2, 1}}})}},
        {"zero", 0, 0, {jt_of({{3, {1, 1, 1}}})}},
    };
  return {};
}

PacketSanityReport packet_sanity_suite(unsigned n, std::size_t samples, std::uint64_t seed)
{
  if (n < 2 || n > 4)
    throw std::invalid_argument("packet_sanity_suite: need 2 <= n <= 4");
  PacketSanityReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  std::mt19937_64 rng(seed);

  const auto packets = enumerate_packets_adjoint_typeA(n);
  rep.packet_count = packets.size();
  auto find_packet = [&](const JordanTypeA &t) -> const PacketDescriptor * {
    for (const auto &p : packets)
      if (p.datum == t)
        return &p;
    return nullptr;
  };

  // Coverage: alternate plain random matrices with random points of each packet.
  for (std::size_t s = 0; s < samples; ++s) {
    const RationalMatrix x = s % 2 == 0
                                 ? random_trace_zero(n, rng)
                                 : sample_packet_point(packets[(s / 2) % packets.size()].datum, rng);
    if (!find_packet(classify_adjoint_typeA(x)))
      ++rep.unclassified;
  }
  rep.coverage_ok = rep.unclassified == 0;

  std::vector<CoverPiece> pieces;
  for (const auto &p : packets)
    pieces.push_back({p.closure_dim, p.orbit_dim});
  rep.cover_modality = modality_from_cover(pieces);
  rep.aggregation_ok = rep.cover_modality == static_cast<long>(n) - 1;

  rep.constant_orbit_dim_ok = true;
  for (const auto &p : packets)
    for (int k = 0; k < 3; ++k) {
      const RationalMatrix x = sample_packet_point(p.datum, rng);
      if (static_cast<long>(sl_orbit_dim(x)) != p.orbit_dim || !(classify_adjoint_typeA(x) == p.datum))
        rep.constant_orbit_dim_ok = false;
    }

  const auto sheets = known_sheets(n);
  rep.sheets_ok = true;
  std::vector<int> owner(packets.size(), 0);
  for (const auto &sheet : sheets) {
    SheetMatch m;
    m.label = sheet.label;
    m.dim = sheet.dim;
    m.points_ok = true;
    for (const auto &t : sheet.members) {
      const PacketDescriptor *p = find_packet(t);
      if (!p) {
        m.points_ok = false;
        continue;
      }
      ++owner[p - packets.data()];
      if (p->orbit_dim != sheet.orbit_dim || p->closure_dim > sheet.dim)
        m.points_ok = false;
      if (p->closure_dim == sheet.dim) {
        ++m.matching_packets;
        m.packet = p->datum.to_string();
      }
      for (int k = 0; k < 3; ++k)
        if (static_cast<long>(sl_orbit_dim(sample_packet_point(t, rng))) != sheet.orbit_dim)
          m.points_ok = false;
    }
    m.ok = m.points_ok && m.matching_packets == 1;
    rep.sheets_ok = rep.sheets_ok && m.ok;
    rep.sheets.push_back(std::move(m));
  }
  if (!sheets.empty())
    for (int o : owner)
      if (o != 1)
        rep.sheets_ok = false;

  // A nilpotent x is a regular element of the center of its centralizer.
  rep.nilpotent_center_ok = true;
  for (const auto &p : packets) {
    if (p.datum.blocks.size() != 1)
      continue;
    ++rep.nilpotent_checked;
    const RationalMatrix x = sample_packet_point(p.datum, rng);
    const long dx = static_cast<long>(sl_orbit_dim(x));
    const auto z = center_of_centralizer(x);
    long best = 0;
    for (int k = 0; k < 4; ++k) {
      RationalMatrix y(n, n);
      const RationalVector c = sample_vector(z.size(), rng);
      for (std::size_t q = 0; q < z.size(); ++q)
        if (sgn(c[q]) != 0)
          y += c[q] * z[q];
      const long dy = static_cast<long>(sl_orbit_dim(y));
      if (dy > dx)
        rep.nilpotent_center_ok = false;
      best = std::max(best, dy);
    }
    if (best != dx)
      rep.nilpotent_center_ok = false;
  }

  rep.passed = rep.coverage_ok && rep.aggregation_ok && rep.constant_orbit_dim_ok &&
               rep.sheets_ok && rep.nilpotent_center_ok;
  return rep;
}

} // namespace liemod
