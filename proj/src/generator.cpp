#include "bint/generator.hpp"

#include <algorithm>

#include "bint/checker.hpp"
#include "bint/transform.hpp"

namespace bint {

namespace {

using K = Formula::Kind;

Context lub(const Context& a, const Context& b) {
  Context out = a;
  for (const auto& [f, n] : b)
    if (out.count(f) < n) out.add(f, n - out.count(f));
  return out;
}

// Extra formulas a premise carries beyond the shared context.
struct Active {
  Context gamma;
  Context delta;
};

Derivation ensure(const Derivation& d, const Active& act) {
  Context g, dl;
  for (const auto& [f, n] : act.gamma)
    if (d.conclusion().gamma.count(f) < n) g.add(f, n - d.conclusion().gamma.count(f));
  for (const auto& [f, n] : act.delta)
    if (d.conclusion().delta.count(f) < n) dl.add(f, n - d.conclusion().delta.count(f));
  return detail::weaken_all(d, g, dl);
}

// Weakens every premise so they share one context, then applies the rule.
Derivation assemble(RuleId rule, Polarity pol, const Formula& goal, std::vector<Derivation> prems,
                    const std::vector<Active>& acts, std::optional<Formula> principal) {
  Context ug, ud;
  for (std::size_t i = 0; i < prems.size(); ++i) {
    prems[i] = ensure(prems[i], acts[i]);
    ug = lub(ug, prems[i].conclusion().gamma - acts[i].gamma);
    ud = lub(ud, prems[i].conclusion().delta - acts[i].delta);
  }
  for (std::size_t i = 0; i < prems.size(); ++i) {
    const Sequent& s = prems[i].conclusion();
    prems[i] = detail::weaken_all(prems[i], (ug + acts[i].gamma) - s.gamma, (ud + acts[i].delta) - s.delta);
  }
  if (principal) (is_left_rule(rule) && rule_info(rule).side == Side::C ? ud : ug).add(*principal);
  return make_node(rule, Sequent(ug, ud, pol, goal), std::move(prems), principal);
}

}  // namespace

Generator::Generator(std::uint64_t seed, std::vector<std::string> atoms) : rng_(seed), atoms_(std::move(atoms)) {}

std::size_t Generator::pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

bool Generator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Formula Generator::formula(std::size_t max_connectives) {
  if (max_connectives == 0 || coin(0.3)) {
    const std::size_t r = pick(atoms_.size() + 1);
    if (r < atoms_.size()) return Formula::atom(atoms_[r]);
    return coin() ? Formula::bottom() : Formula::top();
  }
  static constexpr K kinds[] = {K::And, K::Or, K::Imp, K::Coimp};
  const std::size_t left = pick(max_connectives);
  return Formula::binary(kinds[pick(4)], formula(left), formula(max_connectives - 1 - left));
}

Derivation Generator::zero_premise(Polarity pol, const Formula& goal) {
  const bool plus = pol == Polarity::Plus;
  Context g, d;
  RuleId r;
  std::optional<RuleId> natural;
  if (goal.is_atom()) natural = plus ? RuleId::RfPlus : RuleId::RfMinus;
  if (plus && goal.is_top()) natural = RuleId::TopRPlus;
  if (!plus && goal.is_bottom()) natural = RuleId::BotRMinus;
  if (natural && coin(0.8)) {
    r = *natural;
    if (r == RuleId::RfPlus) g.add(goal);
    if (r == RuleId::RfMinus) d.add(goal);
  } else if (coin()) {
    r = RuleId::BotLa;
    g.add(Formula::bottom());
  } else {
    r = RuleId::TopLc;
    d.add(Formula::top());
  }
  if (coin(0.3)) (coin() ? g : d).add(Formula::atom(atoms_[pick(atoms_.size())]));
  return make_node(r, Sequent(g, d, pol, goal), {});
}

Derivation Generator::right_rule(RuleId r, const Formula& goal, std::size_t budget) {
  const Formula& a = goal.left();
  const Formula& b = goal.right();
  const std::size_t rest = budget > 1 ? budget - 1 : 1;
  const std::size_t first = 1 + pick(rest);
  const std::size_t second = rest > first ? rest - first : 1;
  constexpr auto P = Polarity::Plus;
  constexpr auto M = Polarity::Minus;
  const Polarity pol = *rule_info(r).polarity;
  switch (r) {
    case RuleId::AndRPlus:
      return assemble(r, pol, goal, {derivation(P, a, first), derivation(P, b, second)}, {{}, {}}, std::nullopt);
    case RuleId::AndRMinus1: return assemble(r, pol, goal, {derivation(M, a, rest)}, {{}}, std::nullopt);
    case RuleId::AndRMinus2: return assemble(r, pol, goal, {derivation(M, b, rest)}, {{}}, std::nullopt);
    case RuleId::OrRPlus1: return assemble(r, pol, goal, {derivation(P, a, rest)}, {{}}, std::nullopt);
    case RuleId::OrRPlus2: return assemble(r, pol, goal, {derivation(P, b, rest)}, {{}}, std::nullopt);
    case RuleId::OrRMinus:
      return assemble(r, pol, goal, {derivation(M, a, first), derivation(M, b, second)}, {{}, {}}, std::nullopt);
    case RuleId::ImpRPlus: return assemble(r, pol, goal, {derivation(P, b, rest)}, {{{a}, {}}}, std::nullopt);
    case RuleId::ImpRMinus:
    case RuleId::CoimpRPlus:
      return assemble(r, pol, goal, {derivation(P, a, first), derivation(M, b, second)}, {{}, {}}, std::nullopt);
    case RuleId::CoimpRMinus: return assemble(r, pol, goal, {derivation(M, a, rest)}, {{{}, {b}}}, std::nullopt);
    default: break;
  }
  throw InvariantError("generator: not a right rule");
}

Derivation Generator::left_rule_node(RuleId r, const Formula& x, Polarity pol, const Formula& goal,
                                     std::size_t budget) {
  const Formula& a = x.left();
  const Formula& b = x.right();
  const std::size_t rest = budget > 1 ? budget - 1 : 1;
  const std::size_t first = 1 + pick(rest);
  const std::size_t second = rest > first ? rest - first : 1;
  switch (r) {
    case RuleId::AndLa: return assemble(r, pol, goal, {derivation(pol, goal, rest)}, {{{a, b}, {}}}, x);
    case RuleId::AndLc:
      return assemble(r, pol, goal, {derivation(pol, goal, first), derivation(pol, goal, second)},
                      {{{}, {a}}, {{}, {b}}}, x);
    case RuleId::OrLa:
      return assemble(r, pol, goal, {derivation(pol, goal, first), derivation(pol, goal, second)},
                      {{{a}, {}}, {{b}, {}}}, x);
    case RuleId::OrLc: return assemble(r, pol, goal, {derivation(pol, goal, rest)}, {{{}, {a, b}}}, x);
    case RuleId::ImpLa:
      return assemble(r, pol, goal, {derivation(Polarity::Plus, a, first), derivation(pol, goal, second)},
                      {{{x}, {}}, {{b}, {}}}, x);
    case RuleId::ImpLc:
    case RuleId::CoimpLa: return assemble(r, pol, goal, {derivation(pol, goal, rest)}, {{{a}, {b}}}, x);
    case RuleId::CoimpLc:
      return assemble(r, pol, goal, {derivation(Polarity::Minus, b, first), derivation(pol, goal, second)},
                      {{{}, {x}}, {{}, {a}}}, x);
    default: break;
  }
  throw InvariantError("generator: not a left rule");
}

Derivation Generator::ending_in_right(Polarity pol, const Formula& goal, std::size_t budget) {
  const bool plus = pol == Polarity::Plus;
  switch (goal.kind()) {
    case K::And:
      return right_rule(plus ? RuleId::AndRPlus : (coin() ? RuleId::AndRMinus1 : RuleId::AndRMinus2), goal, budget);
    case K::Or:
      return right_rule(plus ? (coin() ? RuleId::OrRPlus1 : RuleId::OrRPlus2) : RuleId::OrRMinus, goal, budget);
    case K::Imp: return right_rule(plus ? RuleId::ImpRPlus : RuleId::ImpRMinus, goal, budget);
    case K::Coimp: return right_rule(plus ? RuleId::CoimpRPlus : RuleId::CoimpRMinus, goal, budget);
    default: break;
  }
  throw InvariantError("generator: right rule needs a compound goal");
}

Derivation Generator::ending_in_left(Side side, const Formula& principal, Polarity pol, const Formula& goal,
                                     std::size_t budget) {
  return left_rule_node(left_rule(principal.kind(), side), principal, pol, goal, budget);
}

Derivation Generator::derivation(Polarity pol, const Formula& goal, std::size_t budget) {
  if (budget <= 1) return zero_premise(pol, goal);
  if (goal.weight() <= 4 && coin(0.08)) {
    Context g, d;
    if (coin(0.3)) (coin() ? g : d).add(formula(1));
    return derive_identity(g, d, goal, pol);
  }
  if (goal.is_compound() && coin(0.55)) return ending_in_right(pol, goal, budget);
  Formula x = formula(1 + pick(2));
  while (!x.is_compound()) x = formula(2);
  return ending_in_left(coin() ? Side::A : Side::C, x, pol, goal, budget);
}

Derivation Generator::any(std::size_t budget) {
  const Polarity pol = coin() ? Polarity::Plus : Polarity::Minus;
  return derivation(pol, formula(2), budget);
}

CutPair random_cut_pair(Generator& g, RuleId variant, std::size_t budget) {
  const bool a = variant == RuleId::CutA;
  const Side side = a ? Side::A : Side::C;
  const Formula d = g.formula(g.pick(4));
  const Polarity lp = a ? Polarity::Plus : Polarity::Minus;
  const std::size_t lb = 1 + g.pick(budget);
  const std::size_t rb = 1 + g.pick(budget);
  Derivation left = d.is_compound() && g.coin() ? g.ending_in_right(lp, d, std::max<std::size_t>(lb, 2))
                                                : g.derivation(lp, d, lb);
  const Polarity rp = g.coin() ? Polarity::Plus : Polarity::Minus;
  const Formula goal = g.coin(0.2) ? d : g.formula(2);
  Derivation right = d.is_compound() && g.coin(0.4)
                         ? g.ending_in_left(side, d, rp, goal, std::max<std::size_t>(rb, 2))
                         : g.derivation(rp, goal, rb);
  if (!right.conclusion().side(side).contains(d))
    right = a ? detail::weaken_all(right, Context{d}, {}) : detail::weaken_all(right, {}, Context{d});
  return {std::move(left), std::move(right), d};
}

Derivation random_derivation(std::uint64_t seed, std::size_t size_budget) {
  return Generator(seed).any(std::max<std::size_t>(size_budget, 1));
}

}  // namespace bint
