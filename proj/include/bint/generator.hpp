#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bint/derivation.hpp"

namespace bint {

/// Randomized forward construction of valid cut-free derivations. Premises
/// are built independently and then weakened to share their contexts.
class Generator {
 public:
  explicit Generator(std::uint64_t seed, std::vector<std::string> atoms = {"p", "q", "r"});

  /// Random formula with at most `max_connectives` binary connectives.
  Formula formula(std::size_t max_connectives);

  /// Some derivation ending in |-pol goal, using about `budget` rule nodes.
  Derivation derivation(Polarity pol, const Formula& goal, std::size_t budget);
  /// Same, but the last rule is the right rule for the compound goal.
  Derivation ending_in_right(Polarity pol, const Formula& goal, std::size_t budget);
  /// Same, but the last rule is the left rule for `principal` on `side`.
  Derivation ending_in_left(Side side, const Formula& principal, Polarity pol, const Formula& goal,
                            std::size_t budget);
  /// Random polarity and goal.
  Derivation any(std::size_t budget);

  std::mt19937_64& rng() { return rng_; }
  std::size_t pick(std::size_t n);
  bool coin(double p = 0.5);

 private:
  Derivation zero_premise(Polarity pol, const Formula& goal);
  Derivation right_rule(RuleId r, const Formula& goal, std::size_t budget);
  Derivation left_rule_node(RuleId r, const Formula& x, Polarity pol, const Formula& goal, std::size_t budget);

  std::mt19937_64 rng_;
  std::vector<std::string> atoms_;
};

/// Premises of a cut on `cut_formula`: the left one ends in the cut formula,
/// the right one holds it on the cut side.
struct CutPair {
  Derivation left;
  Derivation right;
  Formula cut_formula;
};

/// Random cut pair for `variant`. About half the time the left premise ends
/// in the right rule for the cut formula and the right premise in its left
/// rule, so principal cuts are common.
CutPair random_cut_pair(Generator& g, RuleId variant, std::size_t budget);

/// One derivation from a fresh generator.
Derivation random_derivation(std::uint64_t seed, std::size_t size_budget);

}  // namespace bint
