#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bint/derivation.hpp"

namespace bint {

/// One rewrite step of cut elimination: the case applied to one cut.
struct CutStep {
  std::string case_id;  // e.g. "-3.5-", "-1.1-(a)", "-5.3-"
  std::size_t weight;   // weight of the cut formula
  std::size_t cut_height;
  RuleId variant;  // CutA or CutC
  std::optional<std::size_t> parent;
  std::string via;  // set when a zero-premise case was routed elsewhere
};

struct CutLog {
  std::vector<CutStep> steps;

  /// One line per step: `case=<id> weight=<w> cutheight=<h>` (plus ` via=<id>`).
  std::string trace() const;
  /// Every child step has a lexicographically smaller (weight, cut_height)
  /// than its parent.
  bool measure_decreases() const;
  /// Some edge where the cut-height grows while the weight drops.
  bool has_height_increase_with_weight_drop() const;
  /// Edges whose child uses a different cut rule than its parent.
  std::size_t cross_variant_edges(RuleId from, RuleId to) const;
};

/// Builds a cut node; the context split is read off the premises.
Derivation make_cut(RuleId variant, const Derivation& left, const Derivation& right, const Formula& cut_formula);

/// Cut-free derivation of the conclusion of the cut of `left` and `right` on
/// `cut_formula`. Both inputs must be valid and cut-free. Steps are appended
/// to `log` when given.
Derivation eliminate_cut(const Derivation& left, const Derivation& right, const Formula& cut_formula, RuleId variant,
                         CutLog* log = nullptr);

/// Removes every cut from a tree, innermost first.
Derivation eliminate_cuts(const Derivation& d, CutLog* log = nullptr);

}  // namespace bint
