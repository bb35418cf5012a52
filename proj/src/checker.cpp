#include "bint/checker.hpp"

#include <functional>

namespace bint {

namespace {

using K = Formula::Kind;

thread_local bool g_validate = true;

const char* connective_word(K k) {
  switch (k) {
    case K::And: return "conjunction";
    case K::Or: return "disjunction";
    case K::Imp: return "implication";
    case K::Coimp: return "co-implication";
    default: return "formula";
  }
}

std::string turnstile(Polarity p) { return p == Polarity::Plus ? "|-+" : "|--"; }

Sequent at(const Sequent& base, Polarity p, const Formula& c) { return base.with_succedent(p, c); }

// Premises for a right rule whose succedent X = A # B; `s` is the conclusion.
std::vector<Sequent> right_premises(RuleId r, const Sequent& s) {
  const Formula& a = s.succedent.left();
  const Formula& b = s.succedent.right();
  constexpr auto P = Polarity::Plus;
  constexpr auto M = Polarity::Minus;
  switch (r) {
    case RuleId::AndRPlus: return {at(s, P, a), at(s, P, b)};
    case RuleId::AndRMinus1: return {at(s, M, a)};
    case RuleId::AndRMinus2: return {at(s, M, b)};
    case RuleId::OrRPlus1: return {at(s, P, a)};
    case RuleId::OrRPlus2: return {at(s, P, b)};
    case RuleId::OrRMinus: return {at(s, M, a), at(s, M, b)};
    case RuleId::ImpRPlus: return {at(s.plus(Side::A, a), P, b)};
    case RuleId::ImpRMinus: return {at(s, P, a), at(s, M, b)};
    case RuleId::CoimpRPlus: return {at(s, P, a), at(s, M, b)};
    case RuleId::CoimpRMinus: return {at(s.plus(Side::C, b), M, a)};
    default: return {};
  }
}

// Premises for a left rule; `ctx` is the conclusion with one copy of the
// principal X = A # B removed.
std::vector<Sequent> left_premises(RuleId r, const Sequent& ctx, const Formula& x) {
  const Formula& a = x.left();
  const Formula& b = x.right();
  switch (r) {
    case RuleId::AndLa: return {ctx.plus(Side::A, a).plus(Side::A, b)};
    case RuleId::AndLc: return {ctx.plus(Side::C, a), ctx.plus(Side::C, b)};
    case RuleId::OrLa: return {ctx.plus(Side::A, a), ctx.plus(Side::A, b)};
    case RuleId::OrLc: return {ctx.plus(Side::C, a).plus(Side::C, b)};
    case RuleId::ImpLa: return {at(ctx.plus(Side::A, x), Polarity::Plus, a), ctx.plus(Side::A, b)};
    case RuleId::ImpLc: return {ctx.plus(Side::A, a).plus(Side::C, b)};
    case RuleId::CoimpLa: return {ctx.plus(Side::A, a).plus(Side::C, b)};
    case RuleId::CoimpLc: return {at(ctx.plus(Side::C, x), Polarity::Minus, b), ctx.plus(Side::C, a)};
    default: return {};
  }
}

std::optional<std::string> zero_premise_failure(RuleId r, const Sequent& s) {
  const auto& info = rule_info(r);
  if (info.polarity && s.polarity != *info.polarity)
    return "wrong polarity: " + std::string(info.name) + " concludes " + turnstile(*info.polarity);
  switch (r) {
    case RuleId::RfPlus:
      if (!s.succedent.is_atom()) return "non-atomic axiom: RfPlus needs an atomic succedent";
      if (!s.gamma.contains(s.succedent)) return "missing principal occurrence: succedent atom not in Gamma";
      return std::nullopt;
    case RuleId::RfMinus:
      if (!s.succedent.is_atom()) return "non-atomic axiom: RfMinus needs an atomic succedent";
      if (!s.delta.contains(s.succedent)) return "missing principal occurrence: succedent atom not in Delta";
      return std::nullopt;
    case RuleId::BotLa:
      if (!s.gamma.contains(Formula::bottom())) return "missing principal occurrence: F not in Gamma";
      return std::nullopt;
    case RuleId::TopLc:
      if (!s.delta.contains(Formula::top())) return "missing principal occurrence: T not in Delta";
      return std::nullopt;
    case RuleId::TopRPlus:
      if (!s.succedent.is_top()) return "TopRPlus needs succedent T";
      return std::nullopt;
    case RuleId::BotRMinus:
      if (!s.succedent.is_bottom()) return "BotRMinus needs succedent F";
      return std::nullopt;
    default:
      return "not a zero-premise rule";
  }
}

// The formula a zero-premise rule acts on.
Formula zero_premise_principal(RuleId r, const Sequent& s) {
  switch (r) {
    case RuleId::BotLa: return Formula::bottom();
    case RuleId::TopLc: return Formula::top();
    default: return s.succedent;
  }
}

std::optional<std::string> compare_premises(const std::vector<Sequent>& expected, const std::vector<Sequent>& got) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] == got[i]) continue;
    const bool same_rhs = expected[i].polarity == got[i].polarity && expected[i].succedent == got[i].succedent;
    return "premise " + std::to_string(i + 1) + (same_rhs ? " context mismatch" : " mismatch") + ": expected `" +
           format_sequent(expected[i]) + "`, got `" + format_sequent(got[i]) + "`";
  }
  return std::nullopt;
}

std::optional<std::string> check_cut(const Sequent& s, RuleId r, const std::vector<Sequent>& premises,
                                     const Annotation& ann) {
  if (!ann.cut_formula) return std::string("cut node without cut formula");
  if (!ann.split) return std::string("cut node without context split");
  const Formula& d = *ann.cut_formula;
  const CutSplit& sp = *ann.split;
  if (ann.principal) return std::string("cut node carries a principal annotation");
  if (!(s.gamma == sp.gamma + sp.gamma_prime)) return std::string("context mismatch: Gamma is not Gamma, Gamma'");
  if (!(s.delta == sp.delta + sp.delta_prime)) return std::string("context mismatch: Delta is not Delta, Delta'");
  const bool a = r == RuleId::CutA;
  const Sequent left(sp.gamma, sp.delta, a ? Polarity::Plus : Polarity::Minus, d);
  Sequent right(sp.gamma_prime, sp.delta_prime, s.polarity, s.succedent);
  right.side(a ? Side::A : Side::C).add(d);
  return compare_premises({left, right}, premises);
}

}  // namespace

bool closes(RuleId rule, const Sequent& s) { return is_zero_premise(rule) && !zero_premise_failure(rule, s); }

std::optional<RuleId> closing_rule(const Sequent& s) {
  for (RuleId r : kAxiomPriority)
    if (closes(r, s)) return r;
  return std::nullopt;
}

std::optional<std::vector<Sequent>> instantiate(RuleId rule, const Sequent& conclusion, const Formula& principal) {
  const auto& info = rule_info(rule);
  switch (info.kind) {
    case RuleKind::ZeroPremise:
      if (!closes(rule, conclusion) || !(principal == zero_premise_principal(rule, conclusion))) return std::nullopt;
      return std::vector<Sequent>{};
    case RuleKind::Right:
      if (conclusion.polarity != *info.polarity || !(conclusion.succedent == principal) ||
          principal.kind() != info.connective)
        return std::nullopt;
      return right_premises(rule, conclusion);
    case RuleKind::Left:
      if (principal.kind() != info.connective || !conclusion.side(info.side).contains(principal)) return std::nullopt;
      return left_premises(rule, conclusion.minus(info.side, principal), principal);
    case RuleKind::Cut:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::string> check_rule_instance(const Sequent& s, RuleId rule, const std::vector<Sequent>& premises,
                                               const Annotation& ann) {
  const auto& info = rule_info(rule);
  if (premises.size() != info.arity)
    return "arity: " + std::string(info.name) + " takes " + std::to_string(info.arity) + " premises, got " +
           std::to_string(premises.size());
  if (info.kind == RuleKind::Cut) return check_cut(s, rule, premises, ann);
  if (ann.cut_formula || ann.split) return "non-cut node carries cut annotation";

  if (info.kind == RuleKind::ZeroPremise) {
    if (auto why = zero_premise_failure(rule, s)) return why;
    if (ann.principal && !(*ann.principal == zero_premise_principal(rule, s)))
      return "annotated principal " + format_formula(*ann.principal) + " is not the axiom formula";
    return std::nullopt;
  }

  if (info.kind == RuleKind::Right) {
    if (s.polarity != *info.polarity)
      return "wrong polarity: " + std::string(info.name) + " concludes " + turnstile(*info.polarity);
    if (s.succedent.kind() != info.connective)
      return "succedent " + format_formula(s.succedent) + " is not a " + connective_word(info.connective);
    if (ann.principal && !(*ann.principal == s.succedent))
      return "annotated principal " + format_formula(*ann.principal) + " is not the succedent";
    return compare_premises(right_premises(rule, s), premises);
  }

  // Left rule: try the annotated occurrence, or every candidate.
  const Context& zone = s.side(info.side);
  const std::string zone_name = info.side == Side::A ? "Gamma" : "Delta";
  std::vector<Formula> candidates;
  if (ann.principal) {
    if (ann.principal->kind() != info.connective)
      return "annotated principal " + format_formula(*ann.principal) + " is not a " +
             connective_word(info.connective);
    if (!zone.contains(*ann.principal))
      return "missing principal occurrence: " + format_formula(*ann.principal) + " not in " + zone_name;
    candidates.push_back(*ann.principal);
  } else {
    for (const auto& [f, n] : zone)
      if (f.kind() == info.connective) candidates.push_back(f);
    if (candidates.empty())
      return "missing principal occurrence: no " + std::string(connective_word(info.connective)) + " in " +
             zone_name;
  }
  std::optional<std::string> first;
  for (const auto& x : candidates) {
    auto why = compare_premises(left_premises(rule, s.minus(info.side, x), x), premises);
    if (!why) return std::nullopt;
    if (!first) first = std::move(why);
  }
  return first;
}

CheckReport check_derivation(const Derivation& d) {
  CheckReport report;
  report.height = d.height();
  report.cut_count = d.cut_count();
  std::function<bool(const Derivation&, const std::string&)> walk = [&](const Derivation& n, const std::string& path) {
    std::vector<Sequent> concls;
    concls.reserve(n.premises().size());
    for (const auto& p : n.premises()) concls.push_back(p.conclusion());
    if (auto why = check_rule_instance(n.conclusion(), n.rule(), concls, n.annotation())) {
      report.valid = false;
      report.first_violation = "at " + (path.empty() ? std::string("/") : path) + " (" +
                               std::string(rule_name(n.rule())) + "): " + *why;
      return false;
    }
    for (std::size_t i = 0; i < n.premises().size(); ++i)
      if (!walk(n.premise(i), path + "/" + std::to_string(i))) return false;
    return true;
  };
  walk(d, "");
  return report;
}

std::vector<Expansion> backward_expansions(const Sequent& s) {
  std::vector<Expansion> out;
  for (RuleId r : kAxiomPriority)
    if (closes(r, s)) out.push_back({r, {}, {}, 0});

  auto right = [&](RuleId r, int group) {
    const auto& info = rule_info(r);
    if (s.polarity == *info.polarity && s.succedent.kind() == info.connective)
      out.push_back({r, {}, right_premises(r, s), group});
  };
  auto left = [&](RuleId r, int group) {
    const auto& info = rule_info(r);
    for (const auto& [x, n] : s.side(info.side)) {
      if (x.kind() != info.connective) continue;
      Annotation ann;
      ann.principal = x;
      out.push_back({r, std::move(ann), left_premises(r, s.minus(info.side, x), x), group});
    }
  };

  left(RuleId::AndLa, 1);
  left(RuleId::OrLc, 1);
  left(RuleId::ImpLc, 1);
  left(RuleId::CoimpLa, 1);
  right(RuleId::ImpRPlus, 1);
  right(RuleId::CoimpRMinus, 1);

  right(RuleId::AndRPlus, 2);
  right(RuleId::OrRMinus, 2);
  right(RuleId::ImpRMinus, 2);
  right(RuleId::CoimpRPlus, 2);
  left(RuleId::AndLc, 2);
  left(RuleId::OrLa, 2);

  right(RuleId::AndRMinus1, 3);
  right(RuleId::AndRMinus2, 3);
  right(RuleId::OrRPlus1, 3);
  right(RuleId::OrRPlus2, 3);

  left(RuleId::ImpLa, 4);
  left(RuleId::CoimpLc, 4);
  return out;
}

bool validation_enabled() { return g_validate; }
void set_validation(bool on) { g_validate = on; }

Derivation make_node(RuleId rule, Sequent conclusion, std::vector<Derivation> premises,
                     std::optional<Formula> principal) {
  const auto& info = rule_info(rule);
  if (info.kind == RuleKind::Cut) throw std::invalid_argument("make_node: use make_cut for cut nodes");
  Annotation ann;
  if (info.kind == RuleKind::Left) {
    if (principal) {
      ann.principal = std::move(principal);
    } else {
      // Pick the first occurrence whose premises match.
      for (const auto& [x, n] : conclusion.side(info.side)) {
        if (x.kind() != info.connective) continue;
        auto want = left_premises(rule, conclusion.minus(info.side, x), x);
        bool match = want.size() == premises.size();
        for (std::size_t i = 0; match && i < want.size(); ++i) match = want[i] == premises[i].conclusion();
        if (match) {
          ann.principal = x;
          break;
        }
      }
    }
  }
  if (validation_enabled() || (info.kind == RuleKind::Left && !ann.principal)) {
    std::vector<Sequent> concls;
    for (const auto& p : premises) concls.push_back(p.conclusion());
    if (auto why = check_rule_instance(conclusion, rule, concls, ann))
      throw InvariantError("invalid " + std::string(info.name) + " step concluding `" + format_sequent(conclusion) +
                           "`: " + *why);
  }
  return Derivation(std::move(conclusion), rule, std::move(premises), std::move(ann));
}

std::optional<Formula> principal_of(const Derivation& d) {
  const auto& info = rule_info(d.rule());
  switch (info.kind) {
    case RuleKind::ZeroPremise: return zero_premise_principal(d.rule(), d.conclusion());
    case RuleKind::Right: return d.conclusion().succedent;
    case RuleKind::Cut: return std::nullopt;
    case RuleKind::Left: break;
  }
  if (d.annotation().principal) return d.annotation().principal;
  for (const auto& [x, n] : d.conclusion().side(info.side)) {
    if (x.kind() != info.connective) continue;
    auto want = left_premises(d.rule(), d.conclusion().minus(info.side, x), x);
    bool match = want.size() == d.premises().size();
    for (std::size_t i = 0; match && i < want.size(); ++i) match = want[i] == d.premise(i).conclusion();
    if (match) return x;
  }
  return std::nullopt;
}

Derivation axiom(const Sequent& s) {
  auto r = closing_rule(s);
  if (!r) throw InvariantError("no zero-premise rule closes `" + format_sequent(s) + "`");
  return Derivation(s, *r);
}

}  // namespace bint
