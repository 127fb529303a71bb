#include "gapsets/text.hpp"

#include <charconv>
#include <stdexcept>

namespace gapsets {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    if (pos == std::string_view::npos) {
      out.push_back(s);
      return out;
    }
    out.push_back(s.substr(0, pos));
    s.remove_prefix(pos + 1);
  }
}

int parse_int(std::string_view tok) {
  tok = trim(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw std::invalid_argument("bad integer '" + std::string(tok) + "'");
  return value;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  if (trim(s).empty()) return out;
  for (auto tok : split(s, ',')) out.push_back(parse_int(tok));
  return out;
}

std::string join(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

void require_ascending(const std::vector<int>& xs, const char* what) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i - 1] >= xs[i])
      throw std::invalid_argument(std::string(what) +
                                  " must be strictly ascending");
}

}  // namespace

std::string format_gapset(const Gapset& g) { return join(g.elements(), ','); }

Gapset parse_gapset(std::string_view text) {
  std::vector<int> elems = parse_int_list(text);
  require_ascending(elems, "gapset elements");
  for (int x : elems)
    if (x < 1) throw std::invalid_argument("gapset elements must be positive");
  return Gapset(std::move(elems));
}

std::string format_filtration(const MFiltration& f) {
  std::string out;
  for (int i = 0; i < f.depth(); ++i) {
    if (i) out += '|';
    std::vector<int> elems = f.part_elements(i);
    if (f.m() <= 10) {
      for (int x : elems) out += char('0' + x);
    } else {
      out += join(elems, ',');
    }
  }
  return out;
}

MFiltration parse_filtration(std::string_view text) {
  text = trim(text);
  if (text.empty()) return MFiltration();
  bool comma_mode = text.find(',') != std::string_view::npos;
  std::vector<std::vector<int>> parts;
  for (auto tok : split(text, '|')) {
    std::vector<int> elems;
    if (comma_mode) {
      elems = parse_int_list(tok);
    } else {
      for (char ch : trim(tok)) {
        if (ch < '1' || ch > '9')
          throw std::invalid_argument("bad filtration digit");
        elems.push_back(ch - '0');
      }
    }
    if (elems.empty())
      throw std::invalid_argument("empty filtration part");
    require_ascending(elems, "filtration part");
    parts.push_back(std::move(elems));
  }
  int m = parts[0].back() + 1;
  return MFiltration::from_parts(m, parts);
}

std::string format_compact(const CompactForm& c) {
  return "m=" + std::to_string(c.m()) + ";sigma=" + join(c.sigma(), ',') +
         ";e=" + join(c.e(), ',');
}

CompactForm parse_compact(std::string_view text) {
  auto fields = split(trim(text), ';');
  if (fields.size() != 3 || !fields[0].starts_with("m=") ||
      !fields[1].starts_with("sigma=") || !fields[2].starts_with("e="))
    throw std::invalid_argument("expected m=..;sigma=..;e=..");
  int m = parse_int(fields[0].substr(2));
  return CompactForm(m, parse_int_list(fields[1].substr(6)),
                     parse_int_list(fields[2].substr(2)));
}

std::string format_kunz_csv(const KunzVector& kv) { return join(kv.k, ','); }

std::string count_table_cells_csv(const CountTable& table) {
  std::string out;
  for (int g = 0; g <= table.max_genus; ++g)
    for (int m = 1; m <= table.max_multiplicity; ++m)
      out += std::to_string(g) + ',' + std::to_string(m) + ',' +
             std::to_string(table.cell(g, m)) + '\n';
  return out;
}

std::string count_table_derived_csv(const CountTable& table) {
  std::string out;
  for (int g = 0; g <= table.max_genus; ++g)
    out += std::to_string(g) + ',' + std::to_string(table.n_g[g]) + ',' +
           std::to_string(table.n_prime_g[g]) + '\n';
  return out;
}

nlohmann::json count_table_json(const CountTable& table) {
  nlohmann::json cells = nlohmann::json::array();
  for (int g = 0; g <= table.max_genus; ++g)
    for (int m = 1; m <= table.max_multiplicity; ++m)
      cells.push_back({{"genus", g},
                       {"multiplicity", m},
                       {"count", table.cell(g, m)}});
  return {{"max_genus", table.max_genus},
          {"max_multiplicity", table.max_multiplicity},
          {"n_g", table.n_g},
          {"n_prime_g", table.n_prime_g},
          {"cells", std::move(cells)}};
}

nlohmann::json injection_report_json(const InjectionReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures)
    failures.push_back(format_filtration(f));
  return {{"m", report.m},
          {"g", report.genus},
          {"map", "f_" + std::to_string(report.map_used)},
          {"domain", report.domain_size},
          {"image", report.image_size},
          {"failures", std::move(failures)}};
}

}  // namespace gapsets
