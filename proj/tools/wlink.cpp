#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wlink/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDiagnostic = 3;

wlink::Integer parse_integer(const std::string& text, const std::string& what) {
  try {
    return wlink::Integer(text);
  } catch (const std::exception&) {
    throw std::domain_error("invalid " + what + ": '" + text + "'");
  }
}

std::array<wlink::Integer, 4> parse_weight_list(const std::string& csv) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    auto comma = csv.find(',', start);
    parts.push_back(csv.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) {
    throw std::domain_error("expected 4 comma-separated weights, got " +
                            std::to_string(parts.size()));
  }
  std::array<wlink::Integer, 4> w;
  for (std::size_t i = 0; i < 4; ++i) {
    w[i] = parse_integer(parts[i], "weight");
  }
  return w;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::domain_error("cannot open output file: " + out_path);
  }
  out << text;
}

struct AnalyzeArgs {
  std::string weights;
  std::string degree;
  std::string index;
  std::string format = "table";
};

int run_analyze(const AnalyzeArgs& args) {
  if (args.degree.empty() == args.index.empty()) {
    throw std::domain_error("exactly one of --degree or --index is required");
  }
  const wlink::OutputFormat format = wlink::parse_format(args.format);
  const wlink::Weights w = wlink::make_weights(parse_weight_list(args.weights));
  const wlink::Integer d =
      args.degree.empty()
          ? wlink::Integer(w.total() - parse_integer(args.index, "index"))
          : parse_integer(args.degree, "degree");
  if (d < 1) {
    throw std::domain_error("degree must be >= 1 (got " + d.str() + ")");
  }

  const wlink::LinkReport report = wlink::analyze(w, d);
  std::cout << wlink::render_report(report, format);
  if (!report.milnor_integral || !report.divisor_integral) {
    std::cerr << "analysis produced non-integral invariants; see diagnostics"
              << std::endl;
    return kExitDiagnostic;
  }
  return kExitOk;
}

struct ScanArgs {
  std::string max_weight;
  std::vector<std::string> indices;
  std::string b2;
  bool well_formed_only = true;
  bool all = false;
  std::string format = "table";
  std::string out_path;
};

int run_scan(const ScanArgs& args) {
  const wlink::OutputFormat format = wlink::parse_format(args.format);
  wlink::ScanQuery q;
  q.max_weight = parse_integer(args.max_weight, "max weight");
  if (q.max_weight < 1) {
    throw std::domain_error("--max-weight must be >= 1");
  }
  if (!args.indices.empty()) {
    q.fano_indices.clear();
    for (const std::string& text : args.indices) {
      q.fano_indices.insert(parse_integer(text, "index"));
    }
  }
  if (!args.b2.empty()) {
    q.filter_b2 = parse_integer(args.b2, "b2 filter");
  }
  q.require_well_formed = !args.all;

  const std::vector<wlink::LinkReport> reports = wlink::scan(q);
  emit(wlink::render_scan(reports, format), args.out_path);
  std::cerr << "scan: " << reports.size() << " report"
            << (reports.size() == 1 ? "" : "s") << std::endl;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Topology of links of weighted homogeneous hypersurface singularities "
      "in C^4: Milnor number, Alexander-polynomial divisor, second Betti "
      "number, Smale diffeomorphism type, and hypersurface moduli counts."};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Analyze a single (weights, degree) pair");
  analyze->add_option("--weights", analyze_args.weights, "w0,w1,w2,w3")
      ->required();
  analyze->add_option("--degree", analyze_args.degree,
                      "weighted degree of the hypersurface");
  analyze->add_option("--index", analyze_args.index,
                      "Fano index I; degree becomes |w| - I");
  analyze->add_option("--format", analyze_args.format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand(
      "scan", "Enumerate reduced weight tuples and analyze each");
  scan->add_option("--max-weight", scan_args.max_weight,
                   "upper bound for each weight")
      ->required();
  scan->add_option("--index", scan_args.indices,
                   "Fano index, repeatable (default 1)");
  scan->add_option("--b2", scan_args.b2, "keep only reports with this b2");
  CLI::Option* wf = scan->add_flag("--well-formed-only",
                                   scan_args.well_formed_only,
                                   "keep only well-formed spaces (default)");
  scan->add_flag("--all", scan_args.all, "include non-well-formed spaces")
      ->excludes(wf);
  scan->add_option("--format", scan_args.format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  scan->add_option("--out", scan_args.out_path,
                   "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) return run_analyze(analyze_args);
    return run_scan(scan_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  }
}
