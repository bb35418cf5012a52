#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bint/derivation.hpp"

namespace bint {

/// Premises of `rule` applied backward to `conclusion` with the given
/// principal formula, or nullopt if the rule does not fit. Zero-premise rules
/// yield an empty list when they close the sequent. Cuts are not handled here.
std::optional<std::vector<Sequent>> instantiate(RuleId rule, const Sequent& conclusion, const Formula& principal);

/// Whether a zero-premise rule closes the sequent.
bool closes(RuleId rule, const Sequent& s);
/// First closing zero-premise rule in re-axiomatization priority.
std::optional<RuleId> closing_rule(const Sequent& s);

/// nullopt when the instance is correct, otherwise the first failed constraint.
std::optional<std::string> check_rule_instance(const Sequent& conclusion, RuleId rule,
                                               const std::vector<Sequent>& premises, const Annotation& annotation);

struct CheckReport {
  bool valid = true;
  std::size_t height = 0;
  std::size_t cut_count = 0;
  /// Path of premise indices from the root ("/" is the root), then the reason.
  std::optional<std::string> first_violation;
};

CheckReport check_derivation(const Derivation& d);

struct Expansion {
  RuleId rule;
  Annotation annotation;
  std::vector<Sequent> premises;
  /// Search priority group, 0 first.
  int group;
};

/// Every cut-free rule instance with conclusion exactly `s`, one per distinct
/// principal formula, in search priority order.
std::vector<Expansion> backward_expansions(const Sequent& s);

/// Thrown by make_node and the transformations when an intermediate tree
/// fails the checker.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Global switch for intermediate validation (on by default).
bool validation_enabled();
void set_validation(bool on);

/// RAII toggle for set_validation.
class ValidationScope {
 public:
  explicit ValidationScope(bool on) : saved_(validation_enabled()) { set_validation(on); }
  ~ValidationScope() { set_validation(saved_); }
  ValidationScope(const ValidationScope&) = delete;
  ValidationScope& operator=(const ValidationScope&) = delete;

 private:
  bool saved_;
};

/// Builds a node, filling in the principal annotation for left rules and
/// checking the instance when validation is on.
Derivation make_node(RuleId rule, Sequent conclusion, std::vector<Derivation> premises,
                     std::optional<Formula> principal = std::nullopt);

/// The formula the node's rule acts on: the annotated or matching occurrence
/// for left rules, the succedent for right rules, the axiom formula for
/// zero-premise rules. nullopt for cuts and for ill-formed nodes.
std::optional<Formula> principal_of(const Derivation& d);

/// Zero-premise node closing `s` with the highest priority rule; throws
/// InvariantError if none applies.
Derivation axiom(const Sequent& s);

}  // namespace bint
