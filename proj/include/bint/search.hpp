#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bint/derivation.hpp"

namespace bint {

struct SearchConfig {
  std::size_t max_depth = 50;
  bool loop_check = true;
  /// Explore every alternative and keep a proof of least height instead of
  /// stopping at the first one.
  bool exhaustive = false;
  /// Nonzero: shuffle alternatives inside each priority group.
  std::uint64_t seed = 0;
};

enum class Verdict { Proved, Refuted, BoundExhausted };

struct SearchOutcome {
  Verdict verdict;
  std::optional<Derivation> proof;
  /// Number of sequents expanded.
  std::size_t expanded = 0;

  bool proved() const { return verdict == Verdict::Proved; }
};

std::string_view verdict_name(Verdict v);

/// Backward proof search over the cut-free rules.
SearchOutcome prove(const Sequent& s, const SearchConfig& cfg = {});

}  // namespace bint
