#ifndef LIEMOD_TABLES_HPP
#define LIEMOD_TABLES_HPP

#include "liemod/hw_module.hpp"
#include "liemod/root_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liemod
{

/// One record of the shipped classification data. A record is either a
/// single representation or a family over a rank pattern.
struct TableRecord
{
  std::string list; ///< "m1", "m2" or "m3"
  Family family = Family::A;
  int min_rank = 1;
  std::optional<int> exact_rank;
  std::optional<int> parity; ///< 0 even, 1 odd
  /// Sparse (1-based index, coefficient) pairs.
  std::vector<std::pair<int, long>> weight;
  int modality = 0;

  bool is_family() const { return !exact_rank.has_value(); }
  bool admits_rank(int rank) const;
  std::string describe() const;
};

struct TableEntry
{
  std::string list;
  RootSystemType type;
  Weight weight;
  int expected_modality = 0;
  std::size_t record = 0;

  std::string id() const;
};

struct TableData
{
  int version = 0;
  std::vector<TableRecord> records;
};

/// Default location of the shipped data file.
std::string default_table_path();
/// Throws std::runtime_error on I/O or schema problems.
TableData load_tables(const std::string &path);

/// Expands families up to rank_cutoff. lists may contain "m1", "m2", "m3"
/// or "all".
std::vector<TableEntry> expand_tables(const TableData &data, const std::string &list,
                                      int rank_cutoff);
/// Human-readable notes for families cut off at rank_cutoff.
std::vector<std::string> truncation_notes(const TableData &data, const std::string &list,
                                          int rank_cutoff);

/// Expected modality if (type, lambda) or its contragredient is listed.
std::optional<int> lookup_expected_modality(const TableData &data, const RootSystemType &type,
                                            const Weight &lambda);

struct TableVerification
{
  std::string id;
  bool skipped = false;
  std::string reason;
  std::size_t dimension = 0;
  std::size_t weyl_dimension = 0;
  std::size_t algebra_dim = 0;
  std::size_t orbit_dim = 0;
  long computed = 0;
  int expected = 0;
  bool matches = false;
  std::uint64_t seed = 0;
};

/// Builds the module, computes dim V - generic orbit dim and compares it with
/// the listed modality. Listed representations are visible, so that number
/// is the modality. Oversized modules are reported as skipped.
TableVerification verify_table_entry(const TableEntry &e, std::size_t trials, std::uint64_t seed,
                                     std::size_t ceiling = default_build_ceiling);

} // namespace liemod

#endif
