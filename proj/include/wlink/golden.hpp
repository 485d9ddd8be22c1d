#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "wlink/arith.hpp"

namespace wlink {

// One worked example from the golden corpus: a (weights, degree) pair, a
// subset of expected report fields in the canonical JSON schema, and the
// bookkeeping that justifies the expected values.
struct GoldenCase {
  std::array<Integer, 4> weights;
  Integer degree;
  std::string provenance;  // "literature" | "oracle" | "direct"
  std::string citation;    // the fact or computation backing the values
  nlohmann::ordered_json expected;
  std::size_t line = 0;
};

// Parses a golden corpus file: one JSON object per line, blank lines
// ignored. Every object needs "weights" (4 positive integers), "degree",
// "provenance" and "citation"; all remaining keys are expected report
// fields. Parse errors name the offending line.
std::vector<GoldenCase> load_golden_corpus(const std::string& path);

}  // namespace wlink
