#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bint/derivation.hpp"

namespace bint {

/// One manifest entry. `spec` holds the kind-specific fields.
struct GoldenCase {
  std::string id;
  std::string location;
  std::string description;
  std::string kind;  // identity, weaken, unweaken, invert, contract, cut, prove, check
  nlohmann::ordered_json spec;
};

struct GoldenResult {
  std::string id;
  bool passed = false;
  /// Empty on success, otherwise what differed.
  std::string report;
};

std::vector<GoldenCase> load_manifest(const std::filesystem::path& dir);
GoldenResult run_golden(const GoldenCase& c, const std::filesystem::path& dir);
std::vector<GoldenResult> run_all(const std::vector<GoldenCase>& cases, const std::filesystem::path& dir);

/// Cut-elimination case ids without sub-letters, -1.1- through -5.4-.
const std::vector<std::string>& cut_case_ids();
/// "-1.2-(d)" -> "-1.2-".
std::string main_case_id(std::string_view id);

struct Coverage {
  /// Rule name -> ids of cases whose derivations use it.
  std::map<std::string, std::vector<std::string>> rules;
  /// Main cut case id -> ids of cut cases rooted in it.
  std::map<std::string, std::vector<std::string>> cut_cases;
  std::vector<std::string> missing_rules;
  std::vector<std::string> missing_cut_cases;

  bool complete() const { return missing_rules.empty() && missing_cut_cases.empty(); }
  std::string report() const;
};

Coverage coverage(const std::vector<GoldenCase>& cases, const std::filesystem::path& dir);

/// Builds a derivation of `s` from a rule outline such as
/// `ImpRPlus(ImpLa[p -> q](RfPlus, RfPlus))`, applying each rule backward.
/// Left rules take their principal from the brackets, or from the only
/// compound of their connective on their side. Throws std::invalid_argument.
Derivation build_outline(const Sequent& s, std::string_view outline);

/// First node where two trees differ, as "at /path: `x` vs `y`"; empty when equal.
std::string first_difference(const Derivation& got, const Derivation& want);

}  // namespace bint
