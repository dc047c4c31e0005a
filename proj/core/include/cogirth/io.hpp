// Text formats: the matroid file (header "q r n", r rows of n entries,
// optional "w:" weight line, '#' comments) and structured/text rendering of
// the verification and scan reports (JSON documents carrying "schema": 1).
#pragma once

#include <iosfwd>
#include <string>

#include "cogirth/verify.hpp"

namespace cogirth {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

WeightedMatroid read_matroid(std::istream& in);
WeightedMatroid read_matroid_file(const std::string& path);
void write_matroid(std::ostream& out, const WeightedMatroid& m);
std::string write_matroid_string(const WeightedMatroid& m);
void write_matroid_file(const std::string& path, const WeightedMatroid& m);

// Cogirth result document for the command line front end.
struct CogirthDoc {
  int q = 0, rank = 0, n = 0;
  std::int64_t total_weight = 0;
  std::int64_t cogirth_value = 0;
  Fraction ratio;
  std::vector<int> witness;  // element labels of a minimum-weight cocircuit
  bool operator==(const CogirthDoc&) const = default;
};

std::string to_json_string(const VerificationReport& rep);
VerificationReport report_from_json(const std::string& text);
std::string to_json_string(const ScanReport& rep);
ScanReport scan_report_from_json(const std::string& text);
std::string to_json_string(const CogirthDoc& doc);
CogirthDoc cogirth_doc_from_json(const std::string& text);

std::string to_text(const VerificationReport& rep);
std::string to_text(const ScanReport& rep);
std::string to_text(const CogirthDoc& doc);

}  // namespace cogirth
