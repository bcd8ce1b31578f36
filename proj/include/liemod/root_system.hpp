#ifndef LIEMOD_ROOT_SYSTEM_HPP
#define LIEMOD_ROOT_SYSTEM_HPP

#include "liemod/linalg.hpp"

#include <string>
#include <vector>

namespace liemod
{

enum class Family { A, B, C, D, E, F, G };

struct RootSystemType
{
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const RootSystemType &, const RootSystemType &) = default;
  friend auto operator<=>(const RootSystemType &, const RootSystemType &) = default;
};

/// Parses "A3", "E6", "g2" etc.; throws std::invalid_argument.
RootSystemType parse_type(const std::string &s);
std::string to_string(const RootSystemType &t);
char family_letter(Family f);

/// Throws std::invalid_argument when the rank is not allowed for the family.
/// B_2 is accepted (kept distinct from C_2); D needs rank >= 4 and B >= 2.
void validate(const RootSystemType &t);

/// Integer vector; either fundamental-weight coordinates (for weights) or
/// simple-root coordinates (for roots), depending on context.
using IntVector = std::vector<long>;

/// Weight in the fundamental-weight basis, Bourbaki numbering (0-based here).
struct Weight
{
  IntVector coords;

  bool dominant() const;
  friend bool operator==(const Weight &, const Weight &) = default;
  friend auto operator<=>(const Weight &, const Weight &) = default;
};

std::string to_string(const Weight &w);

/// Root system of a simple Lie algebra with Bourbaki numbering.
///
/// cartan(i, j) = <alpha_i, alpha_j^vee>, so G2 gives [[2,-1],[-3,2]].
/// Positive roots are listed by height, then lexicographically; the first
/// rank entries are the simple roots in order.
class RootSystem
{
public:
  explicit RootSystem(RootSystemType type);

  const RootSystemType &type() const { return type_; }
  int rank() const { return type_.rank; }
  long cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<IntVector> &cartan_matrix() const { return cartan_; }

  /// Simple-root coordinates of the positive roots.
  const std::vector<IntVector> &positive_roots() const { return positive_; }
  std::size_t num_positive_roots() const { return positive_.size(); }
  /// Index of a positive root given in simple-root coordinates, or -1.
  long find_positive_root(const IntVector &coords) const;
  long height(std::size_t root) const;
  std::size_t highest_root() const { return positive_.size() - 1; }

  /// Squared length of alpha_i; long roots have 2.
  const Rational &simple_root_length(int i) const { return lengths_[i]; }
  Rational root_length(const IntVector &root) const;

  /// Row i holds the simple-root coordinates of the fundamental weight i.
  const RationalMatrix &fundamental_weights() const { return fundamental_; }
  /// Half-sum of positive roots in simple-root coordinates.
  const RationalVector &weyl_vector() const { return weyl_vector_; }

  /// Invariant form on weights given in fundamental coordinates.
  Rational pairing(const IntVector &a, const IntVector &b) const;
  /// Gram matrix of the form in the fundamental-weight basis.
  const RationalMatrix &weight_gram() const { return weight_gram_; }

  /// Fundamental coordinates of a root given in simple-root coordinates.
  IntVector root_to_weight(const IntVector &root) const;
  /// <mu, beta^vee> for a weight mu (fundamental coords) and a root beta
  /// (simple-root coords).
  Rational coroot_pairing(const IntVector &mu, const IntVector &root) const;

  /// Simple reflection s_i acting on a weight in fundamental coordinates.
  IntVector reflect_weight(const IntVector &mu, int i) const;

  /// Highest weight of the contragredient module, -w0(lambda).
  Weight dominant_dual(const Weight &lambda) const;

  Weight highest_root_weight() const;

private:
  RootSystemType type_;
  std::vector<IntVector> cartan_;
  std::vector<Rational> lengths_;
  std::vector<IntVector> positive_;
  RationalMatrix fundamental_;
  RationalVector weyl_vector_;
  RationalMatrix weight_gram_;
};

/// Known number of positive roots for the type.
std::size_t expected_positive_root_count(const RootSystemType &t);

} // namespace liemod

#endif
