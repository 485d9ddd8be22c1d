#include "wlink/golden.hpp"

#include <fstream>

namespace wlink {

namespace {

Integer json_to_integer(const nlohmann::ordered_json& j,
                        const std::string& context) {
  if (j.is_number_integer()) {
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    return Integer(j.get<std::string>());
  }
  throw std::runtime_error(context + ": expected an integer");
}

}  // namespace

std::vector<GoldenCase> load_golden_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open golden corpus: " + path);
  }

  std::vector<GoldenCase> cases;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;

    const std::string where = path + ":" + std::to_string(line_no);
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
    if (!j.is_object()) {
      throw std::runtime_error(where + ": expected a JSON object");
    }
    for (const char* key : {"weights", "degree", "provenance", "citation"}) {
      if (!j.contains(key)) {
        throw std::runtime_error(where + ": missing \"" + key + "\"");
      }
    }
    if (!j["weights"].is_array() || j["weights"].size() != 4) {
      throw std::runtime_error(where + ": \"weights\" must have 4 entries");
    }

    GoldenCase c;
    c.line = line_no;
    for (std::size_t i = 0; i < 4; ++i) {
      c.weights[i] = json_to_integer(j["weights"][i], where);
    }
    c.degree = json_to_integer(j["degree"], where);
    c.provenance = j["provenance"].get<std::string>();
    c.citation = j["citation"].get<std::string>();
    c.expected = nlohmann::ordered_json::object();
    for (const auto& [key, value] : j.items()) {
      if (key == "provenance" || key == "citation") continue;
      c.expected[key] = value;
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace wlink
