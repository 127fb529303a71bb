#pragma once
// Text formats and table emitters.
//
// Gapset: comma-separated ascending integers, "" for the empty gapset.
// Filtration: parts joined by '|'. When the string contains no comma each
// part is a string of digits 1-9 ("1234|12|1"); any comma switches the
// whole string to comma-separated lists per part, which multi-digit
// elements (m >= 11) force anyway because the first part [1, m-1] then
// has at least ten elements. "" is the empty filtration.
// Compact form: "m=5;sigma=3,4,2,1;e=1,0,1,1".
// Kunz CSV: the coordinates k_1 .. k_{m-1} in that column order.
// Count tables: headerless CSV, cells as genus,multiplicity,count rows and
// the derived table as genus,n_g,n'_g rows, both ascending.

#include <string>
#include <string_view>

#include <json.hpp>

#include "gapsets/compact.hpp"
#include "gapsets/core.hpp"
#include "gapsets/enumeration.hpp"
#include "gapsets/filtration.hpp"
#include "gapsets/injection.hpp"

namespace gapsets {

std::string format_gapset(const Gapset& g);
// Throws std::invalid_argument unless the string is ascending positive
// integers (or empty).
Gapset parse_gapset(std::string_view text);

std::string format_filtration(const MFiltration& f);
MFiltration parse_filtration(std::string_view text);

std::string format_compact(const CompactForm& c);
CompactForm parse_compact(std::string_view text);

std::string format_kunz_csv(const KunzVector& kv);

std::string count_table_cells_csv(const CountTable& table);
std::string count_table_derived_csv(const CountTable& table);
nlohmann::json count_table_json(const CountTable& table);

nlohmann::json injection_report_json(const InjectionReport& report);

}  // namespace gapsets
