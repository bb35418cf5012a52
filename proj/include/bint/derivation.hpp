#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "bint/rules.hpp"
#include "bint/sequent.hpp"

namespace bint {

/// The Gamma, Gamma' / Delta, Delta' partition of a cut conclusion. The left
/// premise lives in (gamma; delta), the right premise in gamma_prime/delta_prime
/// plus the cut formula.
struct CutSplit {
  Context gamma;
  Context gamma_prime;
  Context delta;
  Context delta_prime;

  friend bool operator==(const CutSplit&, const CutSplit&) = default;
};

struct Annotation {
  std::optional<Formula> principal;
  std::optional<Formula> cut_formula;
  std::optional<CutSplit> split;

  bool empty() const { return !principal && !cut_formula && !split; }
  friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// Immutable proof tree. Copies share subtrees.
class Derivation {
 public:
  Derivation(Sequent conclusion, RuleId rule, std::vector<Derivation> premises = {}, Annotation annotation = {});

  const Sequent& conclusion() const noexcept;
  RuleId rule() const noexcept;
  const std::vector<Derivation>& premises() const noexcept;
  const Derivation& premise(std::size_t i) const;
  const Annotation& annotation() const noexcept;

  /// 0 for a zero-premise node, otherwise 1 + the highest premise.
  std::size_t height() const noexcept;
  std::size_t cut_count() const noexcept;
  std::size_t node_count() const noexcept;

  bool is_leaf() const noexcept { return premises().empty(); }

  /// Same tree including annotations.
  friend bool operator==(const Derivation& a, const Derivation& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// Same conclusions, rules and premise structure; principal annotations are
/// ignored, cut annotations are compared.
bool same_shape(const Derivation& a, const Derivation& b);

inline std::size_t height_of(const Derivation& d) { return d.height(); }

/// Sum of the heights of the two premises of a cut node.
std::size_t cut_height(const Derivation& d);

}  // namespace bint
