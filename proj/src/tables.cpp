#include "liemod/tables.hpp"

#include "liemod/modality.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace liemod
{

namespace
{

bool list_selected(const std::string &want, const std::string &list)
{
  return want == "all" || want == list;
}

Weight dense_weight(const TableRecord &r, int rank)
{
  Weight w{IntVector(rank, 0)};
  for (const auto &[idx, coef] : r.weight) {
    if (idx < 1 || idx > rank)
      throw std::runtime_error("table record weight index out of range: " + r.describe());
    w.coords[idx - 1] = coef;
  }
  return w;
}

int family_floor(Family f)
{
  switch (f) {
  case Family::B: return 3;
  case Family::C: return 2;
  case Family::D: return 4;
  default: return 1;
  }
}

} // namespace

bool TableRecord::admits_rank(int rank) const
{
  if (exact_rank)
    return rank == *exact_rank;
  if (rank < min_rank || rank < family_floor(family))
    return false;
  return !parity || rank % 2 == *parity;
}

std::string TableRecord::describe() const
{
  std::ostringstream os;
  os << "(" << family_letter(family);
  if (exact_rank)
    os << *exact_rank;
  else
    os << "_r, r>=" << min_rank << (parity ? (*parity ? " odd" : " even") : "");
  os << ", ";
  bool first = true;
  for (const auto &[idx, coef] : weight) {
    os << (first ? "" : "+");
    if (coef != 1)
      os << coef;
    os << "w" << idx;
    first = false;
  }
  os << ")";
  return os.str();
}

std::string TableEntry::id() const
{
  return list + ":" + to_string(type) + ":" + to_string(weight);
}

std::string default_table_path()
{
  return std::string(LIEMOD_DATA_DIR) + "/modality_tables.json";
}

TableData load_tables(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open table data file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &ex) {
    throw std::runtime_error("malformed table data file " + path + ": " + ex.what());
  }
  TableData data;
  try {
    if (j.at("format").get<std::string>() != "liemod-modality-tables")
      throw std::runtime_error("unexpected table format tag in " + path);
    data.version = j.at("version").get<int>();
    for (const auto &e : j.at("entries")) {
      TableRecord r;
      r.list = e.at("list").get<std::string>();
      if (r.list != "m1" && r.list != "m2" && r.list != "m3")
        throw std::runtime_error("unknown list '" + r.list + "'");
      const auto fam = e.at("family").get<std::string>();
      if (fam.size() != 1 || fam[0] < 'A' || fam[0] > 'G')
        throw std::runtime_error("unknown family '" + fam + "'");
      r.family = static_cast<Family>(fam[0] - 'A');
      const auto &rk = e.at("rank");
      if (rk.contains("exact")) {
        r.exact_rank = rk.at("exact").get<int>();
        r.min_rank = *r.exact_rank;
        validate(RootSystemType{r.family, *r.exact_rank});
      } else {
        r.min_rank = rk.at("min").get<int>();
        if (rk.contains("parity")) {
          const auto p = rk.at("parity").get<std::string>();
          if (p != "even" && p != "odd")
            throw std::runtime_error("unknown parity '" + p + "'");
          r.parity = p == "odd" ? 1 : 0;
        }
      }
      for (const auto &pair : e.at("weight"))
        r.weight.emplace_back(pair.at(0).get<int>(), pair.at(1).get<long>());
      r.modality = e.at("modality").get<int>();
      data.records.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception &ex) {
    throw std::runtime_error("table data schema error in " + path + ": " + ex.what());
  } catch (const std::invalid_argument &ex) {
    throw std::runtime_error("table data error in " + path + ": " + ex.what());
  }
  return data;
}

std::vector<TableEntry> expand_tables(const TableData &data, const std::string &list,
                                      int rank_cutoff)
{
  if (list != "all" && list != "m1" && list != "m2" && list != "m3")
    throw std::invalid_argument("unknown table list '" + list + "'");
  std::vector<TableEntry> out;
  for (std::size_t k = 0; k < data.records.size(); ++k) {
    const auto &r = data.records[k];
    if (!list_selected(list, r.list))
      continue;
    const int lo = r.exact_rank ? *r.exact_rank : r.min_rank;
    const int hi = r.exact_rank ? *r.exact_rank : rank_cutoff;
    for (int rank = lo; rank <= hi; ++rank)
      if (r.admits_rank(rank))
        out.push_back({r.list, {r.family, rank}, dense_weight(r, rank), r.modality, k});
  }
  return out;
}

std::vector<std::string> truncation_notes(const TableData &data, const std::string &list,
                                          int rank_cutoff)
{
  std::vector<std::string> notes;
  for (const auto &r : data.records)
    if (list_selected(list, r.list) && r.is_family())
      notes.push_back(r.describe() + " verified for ranks up to " + std::to_string(rank_cutoff));
  return notes;
}

std::optional<int> lookup_expected_modality(const TableData &data, const RootSystemType &type,
                                            const Weight &lambda)
{
  const RootSystem rs(type);
  const Weight dual = rs.dominant_dual(lambda);
  for (const auto &r : data.records) {
    if (r.family != type.family || !r.admits_rank(type.rank))
      continue;
    const Weight w = dense_weight(r, type.rank);
    if (w == lambda || w == dual)
      return r.modality;
  }
  return std::nullopt;
}

TableVerification verify_table_entry(const TableEntry &e, std::size_t trials, std::uint64_t seed,
                                     std::size_t ceiling)
{
  TableVerification v;
  v.id = e.id();
  v.expected = e.expected_modality;
  v.seed = seed;
  const RootSystem rs(e.type);
  v.weyl_dimension = weyl_dim(rs, e.weight).get_ui();
  HWModule m;
  try {
    m = build_hw_module({e.type, e.weight}, ceiling);
  } catch (const CeilingExceeded &ex) {
    v.skipped = true;
    v.reason = ex.what();
    return v;
  }
  extend_to_full_algebra(m);
  const ActionSpec action = ActionSpec::from_module(m);
  const OrbitDimReport orbit = generic_orbit_dim(action, trials, seed);
  v.dimension = m.dimension;
  v.algebra_dim = action.algebra_dim();
  v.orbit_dim = orbit.generic_orbit_dim;
  v.computed = static_cast<long>(m.dimension) - static_cast<long>(orbit.generic_orbit_dim);
  v.matches = v.computed == e.expected_modality && v.dimension == v.weyl_dimension;
  return v;
}

} // namespace liemod
