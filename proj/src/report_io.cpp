#include "wlink/report_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace wlink {

namespace {

using nlohmann::ordered_json;

// JSON numbers are kept within int64; anything larger degrades to a
// decimal string so the output stays exact.
ordered_json json_int(const Integer& v) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) {
    return ordered_json(v.convert_to<std::int64_t>());
  }
  return ordered_json(v.str());
}

ordered_json weights_to_json(const Weights& w) {
  ordered_json arr = ordered_json::array();
  for (const Integer& v : w.values()) arr.push_back(json_int(v));
  return arr;
}

ordered_json divisor_to_json(const CyclotomicDivisor& x) {
  ordered_json arr = ordered_json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    arr.push_back(ordered_json::array({json_int(it->first),
                                       json_int(numerator(it->second)),
                                       json_int(denominator(it->second))}));
  }
  return arr;
}

ordered_json multiplicities_to_json(const CyclotomicMultiplicities& m) {
  ordered_json arr = ordered_json::array();
  for (const auto& [j, mj] : m.mults) {
    arr.push_back(ordered_json::array({json_int(j), json_int(mj)}));
  }
  return arr;
}

std::string weights_csv(const Weights& w) {
  std::string out;
  for (const Integer& v : w.values()) {
    out += (out.empty() ? "" : ",") + v.str();
  }
  return out;
}

std::string milnor_str(const LinkReport& r) {
  return to_string(r.milnor_number);
}

std::string betti_str(const LinkReport& r) {
  return r.betti2 ? r.betti2->str() : "";
}

std::string multiplicities_str(const CyclotomicMultiplicities& m) {
  if (m.mults.empty()) return "(none)";
  std::string out;
  for (const auto& [j, mj] : m.mults) {
    out += (out.empty() ? "" : " ") + ("m" + j.str()) + "=" + mj.str();
  }
  return out;
}

std::string render_report_table(const LinkReport& r) {
  std::ostringstream os;
  auto row = [&os](const std::string& key, const std::string& value) {
    os << key;
    for (std::size_t i = key.size(); i < 16; ++i) os << ' ';
    os << value << '\n';
  };
  row("weights", weights_csv(r.weights));
  row("degree", r.degree.str());
  row("fano index", r.fano_index.str());
  row("well formed", r.well_formed ? "yes" : "no");
  row("milnor number", milnor_str(r));
  row("divisor", to_string(r.divisor));
  row("multiplicities",
      r.multiplicities ? multiplicities_str(*r.multiplicities) : "(undefined)");
  row("betti2", r.betti2 ? r.betti2->str() : "(undefined)");
  row("dim S^d", r.dim_Sd.str());
  row("dim G(w)", r.dim_G.str());
  row("dim moduli", r.dim_moduli.str());
  row("type", r.diffeo_type.str());
  os << "diagnostics\n";
  for (const std::string& note : r.diagnostics) {
    os << "  - " << note << '\n';
  }
  return os.str();
}

constexpr int kScanColumns = 12;

std::array<std::string, kScanColumns> scan_row_cells(const LinkReport& r) {
  return {r.weights[0].str(), r.weights[1].str(),     r.weights[2].str(),
          r.weights[3].str(), r.degree.str(),         r.fano_index.str(),
          milnor_str(r),      betti_str(r),           r.dim_Sd.str(),
          r.dim_G.str(),      r.dim_moduli.str(),     r.diffeo_type.str()};
}

const std::array<std::string, kScanColumns> kScanHeader = {
    "w0", "w1", "w2",     "w3",    "d",          "I",
    "mu", "b2", "dim_Sd", "dim_G", "dim_moduli", "type"};

std::string render_scan_table(const std::vector<LinkReport>& reports) {
  std::vector<std::array<std::string, kScanColumns>> rows;
  rows.push_back(kScanHeader);
  for (const LinkReport& r : reports) rows.push_back(scan_row_cells(r));

  std::array<std::size_t, kScanColumns> widths{};
  for (const auto& row : rows) {
    for (int c = 0; c < kScanColumns; ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (int c = 0; c < kScanColumns; ++c) {
      if (c > 0) os << "  ";
      os << row[c];
      if (c + 1 < kScanColumns) {
        for (std::size_t i = row[c].size(); i < widths[c]; ++i) os << ' ';
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::domain_error("unknown format: " + name);
}

ordered_json report_to_json(const LinkReport& r) {
  ordered_json j;
  j["weights"] = weights_to_json(r.weights);
  j["degree"] = json_int(r.degree);
  j["fano_index"] = json_int(r.fano_index);
  j["well_formed"] = r.well_formed;
  j["milnor_number"] = r.milnor_integral ? json_int(numerator(r.milnor_number))
                                         : ordered_json(milnor_str(r));
  j["divisor"] = divisor_to_json(r.divisor);
  j["multiplicities"] = r.multiplicities
                            ? multiplicities_to_json(*r.multiplicities)
                            : ordered_json(nullptr);
  j["betti2"] = r.betti2 ? json_int(*r.betti2) : ordered_json(nullptr);
  j["dim_Sd"] = json_int(r.dim_Sd);
  j["dim_G"] = json_int(r.dim_G);
  j["dim_moduli"] = json_int(r.dim_moduli);
  j["diffeo_type"] = r.diffeo_type.str();
  j["diagnostics"] = ordered_json(r.diagnostics);
  return j;
}

std::string scan_csv_header() {
  return "w0,w1,w2,w3,d,I,mu,b2,dim_Sd,dim_G,dim_moduli,type";
}

std::string report_csv_row(const LinkReport& r) {
  const auto cells = scan_row_cells(r);
  std::string out;
  for (const std::string& cell : cells) {
    out += (out.empty() ? "" : ",") + cell;
  }
  return out;
}

std::string render_report(const LinkReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      return render_report_table(r);
    case OutputFormat::json:
      return report_to_json(r).dump(2) + "\n";
    case OutputFormat::csv:
      return scan_csv_header() + "\n" + report_csv_row(r) + "\n";
  }
  return "";
}

std::string render_scan(const std::vector<LinkReport>& reports,
                        OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      return render_scan_table(reports);
    case OutputFormat::json: {
      std::string out;
      for (const LinkReport& r : reports) {
        out += report_to_json(r).dump() + "\n";
      }
      return out;
    }
    case OutputFormat::csv: {
      std::string out = scan_csv_header() + "\n";
      for (const LinkReport& r : reports) {
        out += report_csv_row(r) + "\n";
      }
      return out;
    }
  }
  return "";
}

}  // namespace wlink
