#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wlink/classify.hpp"

namespace wlink {

enum class OutputFormat { table, json, csv };

OutputFormat parse_format(const std::string& name);

// Canonical JSON form of a report. Key order is fixed:
// weights, degree, fano_index, well_formed, milnor_number, divisor,
// multiplicities, betti2, dim_Sd, dim_G, dim_moduli, diffeo_type,
// diagnostics. "divisor" is a list of [index, numerator, denominator]
// triples by descending index; "multiplicities" a list of [j, m_j] by
// ascending j (null when the divisor is non-integral). Integers that do
// not fit in 64 bits are emitted as decimal strings; a non-integral Milnor
// number is emitted as a "p/q" string.
nlohmann::ordered_json report_to_json(const LinkReport& r);

// Single-report rendering: aligned key/value table, pretty JSON, or a CSV
// header plus one row.
std::string render_report(const LinkReport& r, OutputFormat format);

// Scan rendering: aligned columns, JSON Lines (one canonical object per
// line), or CSV. Byte-identical for identical inputs.
std::string render_scan(const std::vector<LinkReport>& reports,
                        OutputFormat format);

std::string scan_csv_header();
std::string report_csv_row(const LinkReport& r);

}  // namespace wlink
