// Command-line front end: count tables, enumeration listings, verification
// sweeps, and Kunz coordinates. All outputs are deterministic, independent
// of --jobs. Exit codes: 0 all requested checks passed, 1 a check failed,
// 2 bad input or usage, 3 resource limit exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gapsets/admissibility.hpp"
#include "gapsets/compact.hpp"
#include "gapsets/core.hpp"
#include "gapsets/enumeration.hpp"
#include "gapsets/filtration.hpp"
#include "gapsets/injection.hpp"
#include "gapsets/text.hpp"

namespace {

using namespace gapsets;

constexpr int kDefaultGenusCap = 35;
constexpr int kDefaultTableMultiplicity = 6;

struct RunConfig {
  int max_genus = 0;
  int genus = 0;
  int multiplicity = 0;  // 0 means not given
  std::string format = "text";
  std::string out;
  int jobs = 1;
  int max_m = 6;
  int max_sum = 8;
  int genus_cap = kDefaultGenusCap;
  std::string gaps;
};

// Cap priority: --genus-cap flag, then GAPSETS_MAX_GENUS, then the default;
// always clamped to the bitmask-safe hard limit.
int resolve_genus_cap(const CLI::Option* flag, int flag_value) {
  int cap = kDefaultGenusCap;
  if (const char* env = std::getenv("GAPSETS_MAX_GENUS")) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("GAPSETS_MAX_GENUS is not an integer");
    }
  }
  if (flag->count() > 0) cap = flag_value;
  return std::min(cap, kGenusHardLimit);
}

void write_output(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open " + cfg.out);
  file << payload;
}

// Rows share one label column and right-aligned value columns; the caller
// passes the genus row first, so it doubles as the header.
std::string aligned_table(const std::vector<std::string>& row_labels,
                          const std::vector<std::vector<std::uint64_t>>& rows) {
  std::size_t label_width = 0;
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(rows[0].size(), 1);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], std::to_string(row[c]).size());
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << row_labels[r]
        << std::string(label_width - row_labels[r].size(), ' ');
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      std::string cell = std::to_string(rows[r][c]);
      out << "  " << std::string(widths[c] - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

int cmd_count(const RunConfig& cfg) {
  TreeOptions topt{cfg.jobs, cfg.genus_cap};
  if (cfg.multiplicity > 0) {
    // Single row: compact pipeline only.
    if (cfg.max_genus > cfg.genus_cap)
      throw ResourceLimitError("genus " + std::to_string(cfg.max_genus) +
                               " exceeds the cap of " +
                               std::to_string(cfg.genus_cap));
    std::vector<std::uint64_t> counts;
    for (int g = 0; g <= cfg.max_genus; ++g)
      counts.push_back(enumerate_compact(cfg.multiplicity, g).size());
    if (cfg.format == "csv") {
      std::string out;
      for (int g = 0; g <= cfg.max_genus; ++g)
        out += std::to_string(g) + ',' + std::to_string(cfg.multiplicity) +
               ',' + std::to_string(counts[g]) + '\n';
      write_output(cfg, out);
    } else if (cfg.format == "json") {
      nlohmann::json cells = nlohmann::json::array();
      for (int g = 0; g <= cfg.max_genus; ++g)
        cells.push_back({{"genus", g},
                         {"multiplicity", cfg.multiplicity},
                         {"count", counts[g]}});
      nlohmann::json doc = {{"max_genus", cfg.max_genus},
                            {"multiplicity", cfg.multiplicity},
                            {"cells", std::move(cells)}};
      write_output(cfg, doc.dump(2) + "\n");
    } else {
      std::vector<std::uint64_t> hdr;
      for (int g = 0; g <= cfg.max_genus; ++g) hdr.push_back(g);
      write_output(cfg,
                   aligned_table({"g", "m=" + std::to_string(cfg.multiplicity)},
                                 {hdr, counts}));
    }
    return 0;
  }
  CountTable table = count_table(cfg.max_genus, kDefaultTableMultiplicity, topt);
  if (cfg.format == "csv") {
    write_output(cfg, count_table_derived_csv(table) + "\n" +
                          count_table_cells_csv(table));
  } else if (cfg.format == "json") {
    write_output(cfg, count_table_json(table).dump(2) + "\n");
  } else {
    std::vector<std::string> labels = {"g", "n_g", "n'_g"};
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::uint64_t> hdr;
    for (int g = 0; g <= cfg.max_genus; ++g) hdr.push_back(g);
    rows.push_back(hdr);
    rows.push_back(table.n_g);
    rows.push_back(table.n_prime_g);
    for (int m = 1; m <= table.max_multiplicity; ++m) {
      labels.push_back("m=" + std::to_string(m));
      std::vector<std::uint64_t> row;
      for (int g = 0; g <= cfg.max_genus; ++g) row.push_back(table.cell(g, m));
      rows.push_back(row);
    }
    write_output(cfg, aligned_table(labels, rows));
  }
  // Differential check between the two pipelines.
  auto diffs = cross_check_mismatches(table);
  if (!diffs.empty()) {
    std::cerr << "pipeline disagreement:\n";
    for (const auto& d : diffs) std::cerr << "  " << d << '\n';
    return 1;
  }
  return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
  if (cfg.genus > cfg.genus_cap)
    throw ResourceLimitError("genus " + std::to_string(cfg.genus) +
                             " exceeds the cap of " +
                             std::to_string(cfg.genus_cap));
  std::vector<std::string> lines;
  if (cfg.multiplicity > 0) {
    for (const MFiltration& f : enumerate_compact(cfg.multiplicity, cfg.genus))
      lines.push_back(format_filtration(f));
  } else {
    TreeOptions topt{cfg.jobs, cfg.genus_cap};
    auto buckets = enumerate_tree(cfg.genus, topt);
    for (const NumericalSemigroup& s : buckets[cfg.genus])
      lines.push_back(format_gapset(gaps(s)));
  }
  if (cfg.format == "json") {
    write_output(cfg, nlohmann::json(lines).dump(2) + "\n");
  } else {
    std::string out;
    for (const auto& line : lines) out += line + '\n';
    write_output(cfg, out);
  }
  return 0;
}

int cmd_verify_criterion(const RunConfig& cfg) {
  CriterionReport report = verify_criterion(cfg.max_m, cfg.max_sum);
  if (cfg.format == "json") {
    nlohmann::json discrepancies = nlohmann::json::array();
    for (const auto& c : report.discrepancies)
      discrepancies.push_back(format_compact(c));
    nlohmann::json doc = {{"cases", report.cases},
                          {"discrepancies", std::move(discrepancies)},
                          {"ok", report.ok()}};
    write_output(cfg, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << (report.ok() ? "PASS" : "FAIL") << " criterion: " << report.cases
        << " forms checked, " << report.discrepancies.size()
        << " discrepancies\n";
    write_output(cfg, out.str());
  }
  for (const auto& c : report.discrepancies)
    std::cerr << "criterion mismatch at " << format_compact(c) << '\n';
  return report.ok() ? 0 : 1;
}

int cmd_verify_injection(const RunConfig& cfg) {
  if (cfg.max_genus > cfg.genus_cap)
    throw ResourceLimitError("genus " + std::to_string(cfg.max_genus) +
                             " exceeds the cap of " +
                             std::to_string(cfg.genus_cap));
  std::vector<InjectionReport> reports;
  bool ok = true;
  for (int g = 0; g <= cfg.max_genus; ++g) {
    reports.push_back(verify_injection(cfg.multiplicity, g));
    ok = ok && reports.back().ok();
    // Valid distinct images of the genus-g domain live inside the
    // genus-(g+1) domain, so counts must be nondecreasing.
    if (g > 0 && reports[g].domain_size < reports[g - 1].domain_size)
      ok = false;
  }
  if (cfg.format == "json") {
    nlohmann::json docs = nlohmann::json::array();
    for (const auto& r : reports) docs.push_back(injection_report_json(r));
    write_output(cfg, docs.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& r : reports)
      out << "g=" << r.genus << " map=f_" << r.map_used
          << " domain=" << r.domain_size << " image=" << r.image_size
          << (r.ok() ? "" : " FAILURES") << '\n';
    out << (ok ? "PASS" : "FAIL") << " injection m=" << cfg.multiplicity
        << " up to genus " << cfg.max_genus << '\n';
    write_output(cfg, out.str());
  }
  for (const auto& r : reports)
    for (const auto& f : r.failures)
      std::cerr << "invalid image for " << format_filtration(f) << '\n';
  return ok ? 0 : 1;
}

int cmd_kunz(const RunConfig& cfg) {
  Gapset g = parse_gapset(cfg.gaps);
  if (!is_gapset(g))
    throw std::invalid_argument("input is not a gapset: " + cfg.gaps);
  KunzVector kv = kunz_of_semigroup(complement(g));
  if (cfg.format == "csv") {
    write_output(cfg, format_kunz_csv(kv) + "\n");
  } else if (cfg.format == "json") {
    nlohmann::json doc = {{"m", kv.m}, {"k", kv.k}};
    write_output(cfg, doc.dump(2) + "\n");
  } else {
    std::string out = "k = (";
    for (std::size_t i = 0; i < kv.k.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(kv.k[i]);
    }
    write_output(cfg, out + ")\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"gapset filtrations and numerical semigroup censuses"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", cfg.out, "write output to a file");
    return cmd->add_option("--genus-cap", cfg.genus_cap,
                           "raise or lower the hard genus cap");
  };

  auto* count = app.add_subcommand("count", "emit count tables");
  count->add_option("--max-genus", cfg.max_genus, "largest genus")
      ->required()
      ->check(CLI::NonNegativeNumber);
  count->add_option("--multiplicity", cfg.multiplicity,
                    "restrict to one multiplicity row");
  count->add_option("--jobs", cfg.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  auto* count_cap = add_common(count);

  auto* enumerate = app.add_subcommand("enumerate", "list gapsets or filtrations");
  enumerate->add_option("--genus", cfg.genus, "genus to list")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--multiplicity", cfg.multiplicity,
                        "list filtrations of this multiplicity");
  enumerate->add_option("--jobs", cfg.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  auto* enumerate_cap = add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "differential checks");
  verify->require_subcommand(1);
  auto* criterion = verify->add_subcommand(
      "criterion", "admissibility against brute force");
  criterion->add_option("--max-m", cfg.max_m, "largest multiplicity")
      ->check(CLI::PositiveNumber);
  criterion->add_option("--max-sum", cfg.max_sum, "largest exponent sum")
      ->check(CLI::PositiveNumber);
  auto* criterion_cap = add_common(criterion);

  auto* injection = verify->add_subcommand(
      "injection", "genus-increasing injections");
  injection->add_option("--multiplicity", cfg.multiplicity, "3 or 4")
      ->required()
      ->check(CLI::IsMember({"3", "4"}));
  injection->add_option("--max-genus", cfg.max_genus, "largest genus")
      ->required()
      ->check(CLI::NonNegativeNumber);
  auto* injection_cap = add_common(injection);

  auto* kunz = app.add_subcommand("kunz", "Kunz coordinates of a gapset");
  kunz->add_option("--gaps", cfg.gaps, "gapset text, e.g. 1,2,3,4,6,7,11")
      ->required();
  auto* kunz_cap = add_common(kunz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) {
      cfg.genus_cap = resolve_genus_cap(count_cap, cfg.genus_cap);
      return cmd_count(cfg);
    }
    if (enumerate->parsed()) {
      cfg.genus_cap = resolve_genus_cap(enumerate_cap, cfg.genus_cap);
      return cmd_enumerate(cfg);
    }
    if (verify->parsed()) {
      if (criterion->parsed()) {
        cfg.genus_cap = resolve_genus_cap(criterion_cap, cfg.genus_cap);
        return cmd_verify_criterion(cfg);
      }
      cfg.genus_cap = resolve_genus_cap(injection_cap, cfg.genus_cap);
      return cmd_verify_injection(cfg);
    }
    cfg.genus_cap = resolve_genus_cap(kunz_cap, cfg.genus_cap);
    return cmd_kunz(cfg);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const InjectionContractError& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
