// liemod: verification reports for modality, cells, gradings and packets.

#include "liemod/cells.hpp"
#include "liemod/graded.hpp"
#include "liemod/modality.hpp"
#include "liemod/packets.hpp"
#include "liemod/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace liemod;

namespace
{

struct RunConfig
{
  std::uint64_t seed = 20240601;
  std::size_t trials = default_trials;
  int rank_cutoff = 8;
  std::size_t build_ceiling = default_build_ceiling;
  std::string format = "json";
  std::string output;
  std::string tables = default_table_path();
};

struct Item
{
  std::string id;
  json computed;
  json expected;
  bool match = false;
  json orbit_dim;
  json dims = json::object();
  std::uint64_t seed = 0;
  bool skipped = false;
  std::string note;
  double millis = 0;
};

using Task = std::pair<std::string, std::function<Item()>>;

std::vector<long> parse_ints(const std::string &s)
{
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty())
      out.push_back(std::stol(tok));
  return out;
}

std::string iso_now()
{
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::vector<Item> run_tasks(const std::vector<Task> &tasks)
{
  std::vector<Item> items(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        items[k] = tasks[k].second();
      } catch (const CeilingExceeded &e) {
        items[k].skipped = true;
        items[k].match = true;
        items[k].note = e.what();
      } catch (const std::exception &e) {
        items[k].match = false;
        items[k].note = std::string("error: ") + e.what();
      }
      items[k].id = tasks[k].first;
      items[k].millis = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(hw, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  std::sort(items.begin(), items.end(),
            [](const Item &a, const Item &b) { return a.id < b.id; });
  return items;
}

std::string csv_quote(const std::string &s)
{
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_field(const json &j)
{
  if (j.is_null())
    return "";
  if (j.is_string())
    return csv_quote(j.get<std::string>());
  if (j.is_structured())
    return csv_quote(j.dump());
  return j.dump();
}

int emit(const RunConfig &cfg, const std::string &command, const std::vector<Item> &items,
         const std::vector<std::string> &notes, const std::string &started)
{
  bool passed = true;
  for (const auto &it : items)
    passed = passed && (it.match || it.skipped);

  std::string text;
  if (cfg.format == "json") {
    json report;
    report["command"] = command;
    report["config"] = {{"seed", cfg.seed},
                        {"trials", cfg.trials},
                        {"rank_cutoff", cfg.rank_cutoff},
                        {"build_ceiling", cfg.build_ceiling},
                        {"format", cfg.format}};
    report["items"] = json::array();
    json timings = json::object();
    for (const auto &it : items) {
      json j = {{"id", it.id},           {"computed", it.computed}, {"expected", it.expected},
                {"match", it.match},     {"orbit_dim", it.orbit_dim}, {"dims", it.dims},
                {"seed", it.seed}};
      if (it.skipped)
        j["skipped"] = true;
      if (!it.note.empty())
        j["note"] = it.note;
      report["items"].push_back(std::move(j));
      timings[it.id] = std::round(it.millis * 1000) / 1000;
    }
    if (!notes.empty())
      report["notes"] = notes;
    report["passed"] = passed;
    report["timestamp"] = {{"started", started}, {"item_ms", timings}};
    text = report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "id,computed,expected,match,orbit_dim,dims,seed,skipped,note,ms\n";
    for (const auto &it : items)
      os << csv_quote(it.id) << ',' << csv_field(it.computed) << ',' << csv_field(it.expected)
         << ',' << (it.match ? "true" : "false") << ',' << csv_field(it.orbit_dim) << ','
         << csv_field(it.dims) << ',' << it.seed << ',' << (it.skipped ? "true" : "false") << ','
         << csv_quote(it.note) << ',' << it.millis << '\n';
    text = os.str();
  }

  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write " + cfg.output);
    out << text;
    for (const auto &it : items)
      std::cout << (it.skipped ? "SKIP " : it.match ? "ok   " : "FAIL ") << it.id << "\n";
    for (const auto &n : notes)
      std::cout << "note: " << n << "\n";
    std::cout << (passed ? "passed" : "FAILED") << "\n";
  }
  return passed ? 0 : 1;
}

// Bell numbers through the Bell triangle; cell count of A_{n-1}.
long bell(unsigned n)
{
  std::vector<long> row{1};
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<long> next{row.back()};
    for (long x : row)
      next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::vector<Task> tables_tasks(const RunConfig &cfg, const std::string &list,
                               std::vector<std::string> &notes)
{
  const TableData data = load_tables(cfg.tables);
  notes = truncation_notes(data, list, cfg.rank_cutoff);
  std::vector<Task> tasks;
  for (const auto &e : expand_tables(data, list, cfg.rank_cutoff))
    tasks.emplace_back(e.id(), [e, cfg] {
      const TableVerification v = verify_table_entry(e, cfg.trials, cfg.seed, cfg.build_ceiling);
      Item it;
      it.seed = v.seed;
      it.expected = v.expected;
      if (v.skipped) {
        it.skipped = true;
        it.match = true;
        it.note = v.reason;
        it.dims = {{"weyl_dim", v.weyl_dimension}};
        return it;
      }
      it.computed = v.computed;
      it.match = v.matches;
      it.orbit_dim = v.orbit_dim;
      it.dims = {{"dim", v.dimension}, {"weyl_dim", v.weyl_dimension}, {"algebra_dim", v.algebra_dim}};
      return it;
    });
  return tasks;
}

std::vector<Task> rep_tasks(const RunConfig &cfg, const std::string &type,
                            const std::string &weight)
{
  const RootSystemType t = parse_type(type);
  const auto w = parse_ints(weight);
  const Weight lambda{IntVector(w.begin(), w.end())};
  return {{to_string(t) + ":" + to_string(lambda), [cfg, t, lambda] {
             const IrrepSpec spec{t, lambda};
             HWModule m = build_hw_module(spec, cfg.build_ceiling);
             const Integer wd = weyl_dim(spec);
             const ActionSpec a = ActionSpec::from_module(m);
             const OrbitDimReport r = generic_orbit_dim(a, cfg.trials, cfg.seed);
             Item it;
             it.seed = cfg.seed;
             it.computed = static_cast<long>(m.dimension) - static_cast<long>(r.generic_orbit_dim);
             it.orbit_dim = r.generic_orbit_dim;
             it.dims = {{"dim", m.dimension},
                        {"weyl_dim", wd.get_str()},
                        {"algebra_dim", a.algebra_dim()}};
             const bool dim_ok = wd == static_cast<unsigned long>(m.dimension);
             std::optional<int> listed;
             try {
               listed = lookup_expected_modality(load_tables(cfg.tables), t, lambda);
             } catch (const std::runtime_error &) {
             }
             if (listed) {
               it.expected = *listed;
               it.match = dim_ok && it.computed.get<long>() == *listed;
             } else {
               it.match = dim_ok;
               it.note = "not listed; the value is the modality when the action is visible";
             }
             return it;
           }}};
}

std::vector<Task> sl2_tasks(const RunConfig &cfg, const std::string &summands)
{
  std::vector<unsigned> degs;
  for (long d : parse_ints(summands)) {
    if (d < 0)
      throw std::invalid_argument("summands must be nonnegative");
    degs.push_back(static_cast<unsigned>(d));
  }
  std::sort(degs.begin(), degs.end());
  std::string id = "sl2:";
  for (std::size_t k = 0; k < degs.size(); ++k)
    id += (k ? "," : "") + std::to_string(degs[k]);
  return {{id, [cfg, degs] {
             const ActionSpec a = sl2_action(degs);
             const OrbitDimReport r = generic_orbit_dim(a, cfg.trials, cfg.seed);
             Item it;
             it.seed = cfg.seed;
             it.computed = sl2_modality(degs);
             it.expected = static_cast<long>(a.space_dim) - static_cast<long>(r.generic_orbit_dim);
             it.match = it.computed == it.expected;
             it.orbit_dim = r.generic_orbit_dim;
             it.dims = {{"dim", a.space_dim}};
             return it;
           }}};
}

std::vector<Task> cells_tasks(const RunConfig &cfg, const std::string &type)
{
  const RootSystemType t = parse_type(type);
  return {{"cells:" + to_string(t), [cfg, t] {
             const RootSystem rs(t);
             const FunctionalSet F = FunctionalSet::from_roots(rs);
             const auto cells = enumerate_cells(F);
             Item it;
             it.seed = cfg.seed;
             it.computed = cells.size();
             // every sampled point lies in exactly one cell
             std::mt19937_64 rng(cfg.seed);
             std::size_t bad = 0;
             for (int s = 0; s < 200; ++s) {
               const Cell &c = cells[rng() % cells.size()];
               const RationalVector v = sample_cell_point(F, c, rng);
               std::size_t hits = 0;
               for (const auto &d : cells)
                 hits += cell_contains(F, d, v) ? 1 : 0;
               bad += hits == 1 ? 0 : 1;
             }
             it.dims = {{"rank", rs.rank()}, {"roots", rs.positive_roots().size()},
                        {"cover_failures", bad}};
             it.match = bad == 0;
             if (t.family == Family::A) {
               it.expected = bell(static_cast<unsigned>(t.rank + 1));
               it.match = it.match && it.computed == it.expected;
             }
             return it;
           }}};
}

std::vector<Task> grading_tasks(const RunConfig &cfg, const std::string &type,
                                const std::string &m, const std::string &labels)
{
  GradingSpec spec;
  spec.type = parse_type(type);
  if (m != "inf")
    spec.period = std::stol(m);
  spec.labels = parse_ints(labels);
  return {{"grading:" + spec.describe(), [cfg, spec] {
             const GradedAlgebra ga = build_grading(spec);
             Item it;
             it.seed = cfg.seed;
             it.computed = rank_of_grading(ga, cfg.trials, cfg.seed);
             it.expected = cartan_subspace(ga, cfg.seed, cfg.trials).size();
             it.match = it.computed == it.expected;
             it.orbit_dim = ga.g1.size() - it.computed.get<std::size_t>();
             it.dims = {{"dim", ga.dim()}, {"g0", ga.g0.size()}, {"g1", ga.g1.size()}};
             it.note = "expected = dimension of a Cartan subspace";
             return it;
           }}};
}

std::vector<Task> packets_enum_tasks(const RunConfig &cfg, unsigned n)
{
  const auto packets = enumerate_packets_adjoint_typeA(n);
  std::vector<Task> tasks;
  for (const auto &p : packets)
    tasks.emplace_back("sl" + std::to_string(n) + ":" + p.datum.to_string(), [cfg, p, n] {
      const PacketDims d = packet_dims(p, RootSystem({Family::A, static_cast<int>(n - 1)}));
      Item it;
      it.seed = cfg.seed;
      it.computed = {{"closure_dim", d.closure_dim}, {"modality", d.modality}};
      it.expected = {{"closure_dim", p.closure_dim}, {"modality", p.modality}};
      it.match = it.computed == it.expected && d.orbit_dim == p.orbit_dim;
      it.orbit_dim = d.orbit_dim;
      it.dims = {{"cell_dim", p.cell.closure_dim}};
      return it;
    });
  tasks.emplace_back("sl" + std::to_string(n) + ":~aggregate", [cfg, packets, n] {
    std::vector<CoverPiece> pieces;
    for (const auto &p : packets)
      pieces.push_back({p.closure_dim, p.orbit_dim});
    Item it;
    it.seed = cfg.seed;
    it.computed = modality_from_cover(pieces);
    it.expected = static_cast<long>(n) - 1;
    it.match = it.computed == it.expected;
    it.dims = {{"packets", packets.size()}};
    return it;
  });
  return tasks;
}

std::vector<Task> packets_check_tasks(const RunConfig &cfg, unsigned n, std::size_t samples)
{
  return {{"sl" + std::to_string(n) + ":check", [cfg, n, samples] {
             const PacketSanityReport r = packet_sanity_suite(n, samples, cfg.seed);
             Item it;
             it.seed = cfg.seed;
             json sheets = json::array();
             for (const auto &s : r.sheets)
               sheets.push_back({{"label", s.label},
                                 {"dim", s.dim},
                                 {"matching_packets", s.matching_packets},
                                 {"packet", s.packet},
                                 {"ok", s.ok}});
             it.computed = {{"unclassified", r.unclassified},
                            {"cover_modality", r.cover_modality},
                            {"coverage_ok", r.coverage_ok},
                            {"constant_orbit_dim_ok", r.constant_orbit_dim_ok},
                            {"sheets_ok", r.sheets_ok},
                            {"nilpotent_center_ok", r.nilpotent_center_ok}};
             it.expected = {{"unclassified", 0}, {"cover_modality", static_cast<long>(n) - 1}};
             it.dims = {{"packets", r.packet_count},
                        {"samples", r.samples},
                        {"nilpotent_checked", r.nilpotent_checked},
                        {"sheets", sheets}};
             it.match = r.passed;
             return it;
           }}};
}

std::vector<Task> exmo_tasks(const RunConfig &cfg, unsigned n, unsigned d)
{
  return {{"exmo:n=" + std::to_string(n) + ",d=" + std::to_string(d), [cfg, n, d] {
             const ExmoReport r = exmo_family_check(n, d, cfg.seed);
             Item it;
             it.seed = cfg.seed;
             it.computed = {{"regular_sheet_modality", r.regular_sheet_modality},
                            {"family_modality", r.family_lower_bound},
                            {"modality_regular", r.modality_regular}};
             it.expected = {{"regular_sheet_modality", 0},
                            {"family_modality", static_cast<long>(d) - 1},
                            {"modality_regular", false}};
             it.match = it.computed == it.expected;
             it.orbit_dim = r.generic_orbit_dim;
             it.dims = {{"dim", r.space_dim},
                        {"family_dim", r.family_dim},
                        {"family_orbit_dim", r.family_orbit_dim}};
             return it;
           }}};
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Modality of representations, cells, gradings and packets"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "RNG seed (MODALITY_SEED overrides)");
  app.add_option("--trials", cfg.trials, "genericity samples per orbit computation")
      ->check(CLI::PositiveNumber);
  app.add_option("--rank-cutoff", cfg.rank_cutoff, "truncate families at this rank")
      ->check(CLI::PositiveNumber);
  app.add_option("--build-ceiling", cfg.build_ceiling, "largest module dimension to build")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", cfg.output, "report file (default stdout)");
  app.add_option("--tables", cfg.tables, "classification data file");

  std::string command;
  std::function<std::vector<Task>(std::vector<std::string> &)> make;

  auto *tables = app.add_subcommand("tables", "classification tables")->require_subcommand(1);
  auto *tverify = tables->add_subcommand("verify", "verify listed modalities");
  std::string list = "all";
  tverify->add_option("--list", list)->check(CLI::IsMember({"m1", "m2", "m3", "all"}));
  tverify->callback([&] {
    command = "tables verify";
    make = [&](std::vector<std::string> &notes) { return tables_tasks(cfg, list, notes); };
  });

  auto *rep = app.add_subcommand("rep", "single representation")->require_subcommand(1);
  auto *rmod = rep->add_subcommand("modality", "dim V - generic orbit dim");
  std::string type, weight;
  rmod->add_option("--type", type)->required();
  rmod->add_option("--weight", weight)->required();
  rmod->callback([&] {
    command = "rep modality";
    make = [&](std::vector<std::string> &) { return rep_tasks(cfg, type, weight); };
  });

  auto *sl2 = app.add_subcommand("sl2", "SL_2 on binary forms")->require_subcommand(1);
  auto *smod = sl2->add_subcommand("modality", "closed form with matrix cross-check");
  std::string summands;
  smod->add_option("--summands", summands)->required();
  smod->callback([&] {
    command = "sl2 modality";
    make = [&](std::vector<std::string> &) { return sl2_tasks(cfg, summands); };
  });

  auto *cells = app.add_subcommand("cells", "cells of the root arrangement")->require_subcommand(1);
  auto *ccount = cells->add_subcommand("count", "number of cells");
  ccount->add_option("--type", type)->required();
  ccount->callback([&] {
    command = "cells count";
    make = [&](std::vector<std::string> &) { return cells_tasks(cfg, type); };
  });

  auto *grading = app.add_subcommand("grading", "graded Lie algebras")->require_subcommand(1);
  auto *grank = grading->add_subcommand("rank", "rank of a grading");
  std::string period, labels;
  grank->add_option("--type", type)->required();
  grank->add_option("--m", period, "period or inf")->required();
  grank->add_option("--labels", labels)->required();
  grank->callback([&] {
    command = "grading rank";
    make = [&](std::vector<std::string> &) { return grading_tasks(cfg, type, period, labels); };
  });

  auto *packets = app.add_subcommand("packets", "packets of sl_n")->require_subcommand(1);
  unsigned sln = 0;
  std::size_t samples = 200;
  auto *penum = packets->add_subcommand("enum", "enumerate packets");
  penum->add_option("--sln", sln)->required()->check(CLI::Range(2, 5));
  penum->callback([&] {
    command = "packets enum";
    make = [&](std::vector<std::string> &) { return packets_enum_tasks(cfg, sln); };
  });
  auto *pcheck = packets->add_subcommand("check", "sampling checks");
  pcheck->add_option("--sln", sln)->required()->check(CLI::Range(2, 4));
  pcheck->add_option("--samples", samples)->check(CLI::PositiveNumber);
  pcheck->callback([&] {
    command = "packets check";
    make = [&](std::vector<std::string> &) { return packets_check_tasks(cfg, sln, samples); };
  });

  auto *exmo = app.add_subcommand("exmo", "d copies of the natural SL_n module");
  unsigned exn = 3, exd = 2;
  exmo->add_option("--n", exn);
  exmo->add_option("--d", exd);
  exmo->callback([&] {
    command = "exmo";
    make = [&](std::vector<std::string> &) { return exmo_tasks(cfg, exn, exd); };
  });

  for (auto *sub : {tables, tverify, rep, rmod, sl2, smod, cells, ccount, grading, grank, packets,
                    penum, pcheck, exmo})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (const char *env = std::getenv("MODALITY_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception &) {
      std::cerr << "MODALITY_SEED is not an integer\n";
      return 2;
    }
  }

  try {
    const std::string started = iso_now();
    std::vector<std::string> notes;
    const auto tasks = make(notes);
    return emit(cfg, command, run_tasks(tasks), notes, started);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
