#pragma once

#include "resnil/criteria.hpp"

#include <string>
#include <vector>

namespace resnil {

/// One-line verdict, e.g. "not residually nilpotent; lower central series length ω²".
std::string verdict_summary(const Verdict& v);

struct ReportHeader {
  std::vector<std::string> input_lines;  ///< echoed input, one fact per line
  std::vector<Int> requested_primes;
};

/// Human-readable report; every claim carries its certainty.
std::string render_text(const Verdict& v, const ReportHeader& header);

/// JSON encoding of a verdict (see README for the schema).
std::string verdict_to_json(const Verdict& v, int indent = 2);
/// Inverse of verdict_to_json. Throws Error(InvalidInput) on malformed input.
Verdict verdict_from_json(const std::string& text);

}  // namespace resnil
