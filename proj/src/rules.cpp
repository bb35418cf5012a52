#include "bint/rules.hpp"

#include <stdexcept>

namespace bint {

namespace {

using K = Formula::Kind;
constexpr auto P = Polarity::Plus;
constexpr auto M = Polarity::Minus;
constexpr std::optional<Polarity> Any = std::nullopt;

const std::array<RuleInfo, kRuleCount> kTable = {{
    {RuleId::RfPlus, "RfPlus", "Rf^{+}", RuleKind::ZeroPremise, 0, K::Atom, Side::A, P},
    {RuleId::RfMinus, "RfMinus", "Rf^{-}", RuleKind::ZeroPremise, 0, K::Atom, Side::C, M},
    {RuleId::BotLa, "BotLa", "\\bot L^{a}", RuleKind::ZeroPremise, 0, K::Bottom, Side::A, Any},
    {RuleId::TopLc, "TopLc", "\\top L^{c}", RuleKind::ZeroPremise, 0, K::Top, Side::C, Any},
    {RuleId::BotRMinus, "BotRMinus", "\\bot R^{-}", RuleKind::ZeroPremise, 0, K::Bottom, Side::A, M},
    {RuleId::TopRPlus, "TopRPlus", "\\top R^{+}", RuleKind::ZeroPremise, 0, K::Top, Side::A, P},
    {RuleId::AndRPlus, "AndRPlus", "\\wedge R^{+}", RuleKind::Right, 2, K::And, Side::A, P},
    {RuleId::AndRMinus1, "AndRMinus1", "\\wedge R^{-}_{1}", RuleKind::Right, 1, K::And, Side::A, M},
    {RuleId::AndRMinus2, "AndRMinus2", "\\wedge R^{-}_{2}", RuleKind::Right, 1, K::And, Side::A, M},
    {RuleId::AndLa, "AndLa", "\\wedge L^{a}", RuleKind::Left, 1, K::And, Side::A, Any},
    {RuleId::AndLc, "AndLc", "\\wedge L^{c}", RuleKind::Left, 2, K::And, Side::C, Any},
    {RuleId::OrRPlus1, "OrRPlus1", "\\vee R^{+}_{1}", RuleKind::Right, 1, K::Or, Side::A, P},
    {RuleId::OrRPlus2, "OrRPlus2", "\\vee R^{+}_{2}", RuleKind::Right, 1, K::Or, Side::A, P},
    {RuleId::OrRMinus, "OrRMinus", "\\vee R^{-}", RuleKind::Right, 2, K::Or, Side::A, M},
    {RuleId::OrLa, "OrLa", "\\vee L^{a}", RuleKind::Left, 2, K::Or, Side::A, Any},
    {RuleId::OrLc, "OrLc", "\\vee L^{c}", RuleKind::Left, 1, K::Or, Side::C, Any},
    {RuleId::ImpRPlus, "ImpRPlus", "{\\rightarrow} R^{+}", RuleKind::Right, 1, K::Imp, Side::A, P},
    {RuleId::ImpRMinus, "ImpRMinus", "{\\rightarrow} R^{-}", RuleKind::Right, 2, K::Imp, Side::A, M},
    {RuleId::ImpLa, "ImpLa", "{\\rightarrow} L^{a}", RuleKind::Left, 2, K::Imp, Side::A, Any},
    {RuleId::ImpLc, "ImpLc", "{\\rightarrow} L^{c}", RuleKind::Left, 1, K::Imp, Side::C, Any},
    {RuleId::CoimpRPlus, "CoimpRPlus", "{\\Yleft} R^{+}", RuleKind::Right, 2, K::Coimp, Side::A, P},
    {RuleId::CoimpRMinus, "CoimpRMinus", "{\\Yleft} R^{-}", RuleKind::Right, 1, K::Coimp, Side::A, M},
    {RuleId::CoimpLa, "CoimpLa", "{\\Yleft} L^{a}", RuleKind::Left, 1, K::Coimp, Side::A, Any},
    {RuleId::CoimpLc, "CoimpLc", "{\\Yleft} L^{c}", RuleKind::Left, 2, K::Coimp, Side::C, Any},
    {RuleId::CutA, "CutA", "Cut^{a}", RuleKind::Cut, 2, K::Atom, Side::A, Any},
    {RuleId::CutC, "CutC", "Cut^{c}", RuleKind::Cut, 2, K::Atom, Side::C, Any},
}};

const std::array<RuleId, kRuleCount> kAll = [] {
  std::array<RuleId, kRuleCount> out{};
  for (std::size_t i = 0; i < kRuleCount; ++i) out[i] = kTable[i].id;
  return out;
}();

}  // namespace

const RuleInfo& rule_info(RuleId r) { return kTable[static_cast<std::size_t>(r)]; }
std::string_view rule_name(RuleId r) { return rule_info(r).name; }
const std::array<RuleId, kRuleCount>& all_rules() { return kAll; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& info : kTable)
    if (info.name == name) return info.id;
  return std::nullopt;
}

RuleId left_rule(Formula::Kind connective, Side side) {
  const bool a = side == Side::A;
  switch (connective) {
    case K::And: return a ? RuleId::AndLa : RuleId::AndLc;
    case K::Or: return a ? RuleId::OrLa : RuleId::OrLc;
    case K::Imp: return a ? RuleId::ImpLa : RuleId::ImpLc;
    case K::Coimp: return a ? RuleId::CoimpLa : RuleId::CoimpLc;
    default: throw std::invalid_argument("left_rule: not a connective");
  }
}

RuleId dual_rule(RuleId r) {
  switch (r) {
    case RuleId::RfPlus: return RuleId::RfMinus;
    case RuleId::RfMinus: return RuleId::RfPlus;
    case RuleId::BotLa: return RuleId::TopLc;
    case RuleId::TopLc: return RuleId::BotLa;
    case RuleId::BotRMinus: return RuleId::TopRPlus;
    case RuleId::TopRPlus: return RuleId::BotRMinus;
    case RuleId::AndRPlus: return RuleId::OrRMinus;
    case RuleId::OrRMinus: return RuleId::AndRPlus;
    case RuleId::AndRMinus1: return RuleId::OrRPlus1;
    case RuleId::AndRMinus2: return RuleId::OrRPlus2;
    case RuleId::OrRPlus1: return RuleId::AndRMinus1;
    case RuleId::OrRPlus2: return RuleId::AndRMinus2;
    case RuleId::AndLa: return RuleId::OrLc;
    case RuleId::OrLc: return RuleId::AndLa;
    case RuleId::AndLc: return RuleId::OrLa;
    case RuleId::OrLa: return RuleId::AndLc;
    case RuleId::ImpRPlus: return RuleId::CoimpRMinus;
    case RuleId::CoimpRMinus: return RuleId::ImpRPlus;
    case RuleId::ImpLa: return RuleId::CoimpLc;
    case RuleId::CoimpLc: return RuleId::ImpLa;
    case RuleId::ImpRMinus: return RuleId::CoimpRPlus;
    case RuleId::CoimpRPlus: return RuleId::ImpRMinus;
    case RuleId::ImpLc: return RuleId::CoimpLa;
    case RuleId::CoimpLa: return RuleId::ImpLc;
    case RuleId::CutA: return RuleId::CutC;
    case RuleId::CutC: return RuleId::CutA;
  }
  throw std::invalid_argument("dual_rule: bad rule id");
}

}  // namespace bint
