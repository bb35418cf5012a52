#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "bint/formula.hpp"
#include "bint/sequent.hpp"

namespace bint {

enum class RuleId : unsigned char {
  RfPlus,
  RfMinus,
  BotLa,
  TopLc,
  BotRMinus,
  TopRPlus,
  AndRPlus,
  AndRMinus1,
  AndRMinus2,
  AndLa,
  AndLc,
  OrRPlus1,
  OrRPlus2,
  OrRMinus,
  OrLa,
  OrLc,
  ImpRPlus,
  ImpRMinus,
  ImpLa,
  ImpLc,
  CoimpRPlus,
  CoimpRMinus,
  CoimpLa,
  CoimpLc,
  CutA,
  CutC,
};

inline constexpr std::size_t kRuleCount = 26;
inline constexpr std::size_t kPrimitiveRuleCount = 24;

enum class RuleKind : unsigned char { ZeroPremise, Right, Left, Cut };

struct RuleInfo {
  RuleId id;
  std::string_view name;   // enum spelling, used in files
  std::string_view latex;  // label for \infer
  RuleKind kind;
  std::size_t arity;
  /// Connective of the principal formula (Right/Left rules only).
  Formula::Kind connective;
  /// Side of the principal formula for left rules.
  Side side;
  /// Required conclusion polarity; nullopt when any polarity is allowed.
  std::optional<Polarity> polarity;
};

const RuleInfo& rule_info(RuleId r);
std::string_view rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);
const std::array<RuleId, kRuleCount>& all_rules();

inline bool is_cut(RuleId r) { return r == RuleId::CutA || r == RuleId::CutC; }
inline bool is_zero_premise(RuleId r) { return rule_info(r).kind == RuleKind::ZeroPremise; }
inline bool is_left_rule(RuleId r) { return rule_info(r).kind == RuleKind::Left; }
inline bool is_right_rule(RuleId r) { return rule_info(r).kind == RuleKind::Right; }

/// Left rule decomposing a compound of the given connective on the given side.
RuleId left_rule(Formula::Kind connective, Side side);

/// The rule's mirror image under the duality map.
RuleId dual_rule(RuleId r);

/// Zero-premise rules in re-axiomatization priority.
inline constexpr std::array<RuleId, 6> kAxiomPriority = {RuleId::BotLa,     RuleId::TopLc,  RuleId::TopRPlus,
                                                         RuleId::BotRMinus, RuleId::RfPlus, RuleId::RfMinus};

}  // namespace bint
