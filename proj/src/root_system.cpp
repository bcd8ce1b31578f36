#include "liemod/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liemod
{

char family_letter(Family f)
{
  return "ABCDEFG"[static_cast<int>(f)];
}

std::string to_string(const RootSystemType &t)
{
  return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

RootSystemType parse_type(const std::string &s)
{
  if (s.size() < 2)
    throw std::invalid_argument("bad root system type '" + s + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'G')
    throw std::invalid_argument("bad root system family in '" + s + "'");
  int rank = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("bad root system rank in '" + s + "'");
    rank = rank * 10 + (s[k] - '0');
    if (rank > 1000)
      throw std::invalid_argument("root system rank too large in '" + s + "'");
  }
  RootSystemType t{static_cast<Family>(c - 'A'), rank};
  validate(t);
  return t;
}

void validate(const RootSystemType &t)
{
  const int r = t.rank;
  bool ok = false;
  switch (t.family) {
  case Family::A: ok = r >= 1; break;
  case Family::B: ok = r >= 2; break;
  case Family::C: ok = r >= 2; break;
  case Family::D: ok = r >= 4; break;
  case Family::E: ok = r >= 6 && r <= 8; break;
  case Family::F: ok = r == 4; break;
  case Family::G: ok = r == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(r) + " for family " +
                                family_letter(t.family));
}

bool Weight::dominant() const
{
  return std::all_of(coords.begin(), coords.end(), [](long c) { return c >= 0; });
}

std::string to_string(const Weight &w)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < w.coords.size(); ++i)
    os << (i ? "," : "") << w.coords[i];
  return os.str();
}

namespace
{

std::vector<IntVector> build_cartan(const RootSystemType &t)
{
  const int r = t.rank;
  std::vector<IntVector> c(r, IntVector(r, 0));
  auto link = [&](int i, int j) {
    c[i][j] = -1;
    c[j][i] = -1;
  };
  for (int i = 0; i < r; ++i)
    c[i][i] = 2;
  switch (t.family) {
  case Family::A:
    for (int i = 0; i + 1 < r; ++i)
      link(i, i + 1);
    break;
  case Family::B:
    for (int i = 0; i + 1 < r; ++i)
      link(i, i + 1);
    c[r - 2][r - 1] = -2; // alpha_r short
    break;
  case Family::C:
    for (int i = 0; i + 1 < r; ++i)
      link(i, i + 1);
    c[r - 1][r - 2] = -2; // alpha_r long
    break;
  case Family::D:
    for (int i = 0; i + 2 < r; ++i)
      link(i, i + 1);
    link(r - 3, r - 1);
    break;
  case Family::E:
    link(0, 2);
    link(1, 3);
    for (int i = 2; i + 1 < r; ++i)
      link(i, i + 1);
    break;
  case Family::F:
    link(0, 1);
    link(1, 2);
    link(2, 3);
    c[1][2] = -2; // alpha_1, alpha_2 long
    break;
  case Family::G:
    link(0, 1);
    c[1][0] = -3; // alpha_1 short
    break;
  }
  return c;
}

} // namespace

RootSystem::RootSystem(RootSystemType type) : type_(type)
{
  validate(type_);
  const int r = type_.rank;
  cartan_ = build_cartan(type_);

  // Squared lengths from C(i,j) l_j = C(j,i) l_i along the connected diagram.
  lengths_.assign(r, Rational(0));
  lengths_[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (i != j && cartan_[i][j] != 0 && sgn(lengths_[i]) != 0 && sgn(lengths_[j]) == 0) {
          lengths_[j] = lengths_[i] * cartan_[j][i];
          lengths_[j] /= cartan_[i][j];
          changed = true;
        }
  }
  Rational longest = *std::max_element(lengths_.begin(), lengths_.end());
  for (auto &l : lengths_)
    l = 2 * l / longest;

  // Positive roots by reflection closure of the simple roots.
  std::set<IntVector> seen;
  std::vector<IntVector> queue;
  for (int i = 0; i < r; ++i) {
    IntVector e(r, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const IntVector beta = queue[q];
    for (int i = 0; i < r; ++i) {
      long p = 0;
      for (int k = 0; k < r; ++k)
        p += beta[k] * cartan_[k][i];
      IntVector s = beta;
      s[i] -= p;
      if (std::all_of(s.begin(), s.end(), [](long x) { return x >= 0; }) && !seen.count(s)) {
        seen.insert(s);
        queue.push_back(s);
      }
    }
  }
  positive_.assign(seen.begin(), seen.end());
  auto height_of = [](const IntVector &v) {
    long h = 0;
    for (long x : v)
      h += x;
    return h;
  };
  std::sort(positive_.begin(), positive_.end(), [&](const IntVector &a, const IntVector &b) {
    const long ha = height_of(a), hb = height_of(b);
    if (ha != hb)
      return ha < hb;
    return a > b; // simple roots come out as alpha_1, alpha_2, ...
  });

  RationalMatrix c(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      c(i, j) = cartan_[i][j];
  fundamental_ = inverse(c);

  weyl_vector_.assign(r, Rational(0));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      weyl_vector_[k] += fundamental_(i, k);

  weight_gram_ = RationalMatrix(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      weight_gram_(i, j) = fundamental_(j, i) * lengths_[i] / 2;
}

long RootSystem::find_positive_root(const IntVector &coords) const
{
  auto it = std::find(positive_.begin(), positive_.end(), coords);
  return it == positive_.end() ? -1 : static_cast<long>(it - positive_.begin());
}

long RootSystem::height(std::size_t root) const
{
  long h = 0;
  for (long x : positive_.at(root))
    h += x;
  return h;
}

Rational RootSystem::root_length(const IntVector &root) const
{
  Rational s = 0;
  for (int k = 0; k < rank(); ++k)
    for (int l = 0; l < rank(); ++l)
      if (root[k] != 0 && root[l] != 0)
        s += Rational(root[k] * root[l] * cartan_[k][l]) * lengths_[l] / 2;
  return s;
}

Rational RootSystem::pairing(const IntVector &a, const IntVector &b) const
{
  Rational s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (a[i] != 0 && b[j] != 0)
        s += Rational(a[i] * b[j]) * weight_gram_(i, j);
  return s;
}

IntVector RootSystem::root_to_weight(const IntVector &root) const
{
  IntVector w(rank(), 0);
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j)
      w[j] += root[k] * cartan_[k][j];
  return w;
}

Rational RootSystem::coroot_pairing(const IntVector &mu, const IntVector &root) const
{
  Rational ip = 0;
  for (int k = 0; k < rank(); ++k)
    if (root[k] != 0 && mu[k] != 0)
      ip += Rational(root[k] * mu[k]) * lengths_[k] / 2;
  return 2 * ip / root_length(root);
}

IntVector RootSystem::reflect_weight(const IntVector &mu, int i) const
{
  IntVector s = mu;
  const long c = mu[i];
  for (int j = 0; j < rank(); ++j)
    s[j] -= c * cartan_[i][j];
  return s;
}

Weight RootSystem::dominant_dual(const Weight &lambda) const
{
  if (static_cast<int>(lambda.coords.size()) != rank())
    throw std::invalid_argument("dominant_dual: weight has wrong length");
  if (!lambda.dominant())
    throw std::invalid_argument("dominant_dual: weight is not dominant");
  // -w0(lambda) is the dominant element of the Weyl orbit of -lambda.
  IntVector mu = lambda.coords;
  for (auto &x : mu)
    x = -x;
  for (;;) {
    int i = 0;
    while (i < rank() && mu[i] >= 0)
      ++i;
    if (i == rank())
      break;
    mu = reflect_weight(mu, i);
  }
  return Weight{mu};
}

Weight RootSystem::highest_root_weight() const
{
  return Weight{root_to_weight(positive_.back())};
}

std::size_t expected_positive_root_count(const RootSystemType &t)
{
  const std::size_t r = static_cast<std::size_t>(t.rank);
  switch (t.family) {
  case Family::A: return r * (r + 1) / 2;
  case Family::B:
  case Family::C: return r * r;
  case Family::D: return r * (r - 1);
  case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
  case Family::F: return 24;
  case Family::G: return 6;
  }
  return 0;
}

} // namespace liemod
