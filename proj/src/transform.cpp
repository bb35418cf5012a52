#include "bint/transform.hpp"

#include <functional>
#include <map>
#include <utility>

#include "bint/checker.hpp"

namespace bint {

namespace {

using K = Formula::Kind;

void require_cut_free(const Derivation& d, const char* op) {
  if (d.cut_count() != 0) throw TransformError(std::string(op) + ": input contains cuts");
  if (validation_enabled()) {
    auto report = check_derivation(d);
    if (!report.valid) throw TransformError(std::string(op) + ": invalid input " + *report.first_violation);
  }
}

std::optional<Formula> left_principal(const Derivation& d) {
  if (!is_left_rule(d.rule())) return std::nullopt;
  return principal_of(d);
}

// Rebuilds d with every conclusion passed through fn; rules and principals
// are kept.
Derivation map_conclusions(const Derivation& d, const std::function<Sequent(const Sequent&)>& fn) {
  std::vector<Derivation> premises;
  premises.reserve(d.premises().size());
  for (const auto& p : d.premises()) premises.push_back(map_conclusions(p, fn));
  return make_node(d.rule(), fn(d.conclusion()), std::move(premises), left_principal(d));
}

bool is_principal_for(const Derivation& d, Side side, const Formula& x) {
  if (!x.is_compound() || d.rule() != left_rule(x.kind(), side)) return false;
  auto p = principal_of(d);
  return p && *p == x;
}

// ---------------------------------------------------------------------------
// Identity

struct BaseFigure {
  RuleId rule;
  std::vector<RuleId> leaves;
};

const std::map<std::string, BaseFigure>& base_figures(Polarity pol) {
  using R = RuleId;
  static const std::map<std::string, BaseFigure> plus = {
      {"F", {R::BotLa, {}}},
      {"T", {R::TopRPlus, {}}},
      {"F /\\ F", {R::AndLa, {R::BotLa}}},
      {"F \\/ F", {R::OrLa, {R::BotLa, R::BotLa}}},
      {"F -> F", {R::ImpRPlus, {R::BotLa}}},
      {"F -< F", {R::CoimpLa, {R::BotLa}}},
      {"F /\\ T", {R::AndLa, {R::BotLa}}},
      {"F \\/ T", {R::OrRPlus2, {R::TopRPlus}}},
      {"F -> T", {R::ImpRPlus, {R::TopRPlus}}},
      {"F -< T", {R::CoimpLa, {R::BotLa}}},
      {"T /\\ F", {R::AndLa, {R::BotLa}}},
      {"T \\/ F", {R::OrRPlus1, {R::TopRPlus}}},
      {"T -> F", {R::ImpLa, {R::TopRPlus, R::BotLa}}},
      {"T -< F", {R::CoimpRPlus, {R::TopRPlus, R::BotRMinus}}},
      {"T /\\ T", {R::AndRPlus, {R::TopRPlus, R::TopRPlus}}},
      {"T \\/ T", {R::OrRPlus1, {R::TopRPlus}}},
      {"T -> T", {R::ImpRPlus, {R::TopRPlus}}},
      {"T -< T", {R::CoimpLa, {R::TopLc}}},
  };
  static const std::map<std::string, BaseFigure> minus = {
      {"F", {R::BotRMinus, {}}},
      {"T", {R::TopLc, {}}},
      {"F /\\ F", {R::AndRMinus1, {R::BotRMinus}}},
      {"F \\/ F", {R::OrRMinus, {R::BotRMinus, R::BotRMinus}}},
      {"F -> F", {R::ImpLc, {R::BotLa}}},
      {"F -< F", {R::CoimpRMinus, {R::BotRMinus}}},
      {"F /\\ T", {R::AndRMinus1, {R::BotRMinus}}},
      {"F \\/ T", {R::OrLc, {R::TopLc}}},
      {"F -> T", {R::ImpLc, {R::TopLc}}},
      {"F -< T", {R::CoimpRMinus, {R::TopLc}}},
      {"T /\\ F", {R::AndRMinus2, {R::BotRMinus}}},
      {"T \\/ F", {R::OrLc, {R::TopLc}}},
      {"T -> F", {R::ImpRMinus, {R::TopRPlus, R::BotRMinus}}},
      {"T -< F", {R::CoimpLc, {R::BotRMinus, R::TopLc}}},
      {"T /\\ T", {R::AndLc, {R::TopLc, R::TopLc}}},
      {"T \\/ T", {R::OrLc, {R::TopLc}}},
      {"T -> T", {R::ImpLc, {R::TopLc}}},
      {"T -< T", {R::CoimpRMinus, {R::TopLc}}},
  };
  return pol == Polarity::Plus ? plus : minus;
}

Derivation leaf(RuleId r, const Sequent& s) { return make_node(r, s, {}); }

Derivation identity_rec(const Context& g, const Context& d, const Formula& c, Polarity pol) {
  const bool plus = pol == Polarity::Plus;
  const Sequent concl = plus ? Sequent(g.with(c), d, pol, c) : Sequent(g, d.with(c), pol, c);

  if (c.is_atom()) return leaf(plus ? RuleId::RfPlus : RuleId::RfMinus, concl);
  if (c.weight() <= 1) {
    const BaseFigure& fig = base_figures(pol).at(format_formula(c));
    if (fig.leaves.empty()) return leaf(fig.rule, concl);
    auto premises = instantiate(fig.rule, concl, c);
    if (!premises || premises->size() != fig.leaves.size())
      throw InvariantError("identity figure does not fit " + format_sequent(concl));
    std::vector<Derivation> kids;
    for (std::size_t i = 0; i < fig.leaves.size(); ++i) kids.push_back(leaf(fig.leaves[i], (*premises)[i]));
    return make_node(fig.rule, concl, std::move(kids), is_left_rule(fig.rule) ? std::optional(c) : std::nullopt);
  }

  const Formula& a = c.left();
  const Formula& b = c.right();
  constexpr auto P = Polarity::Plus;
  constexpr auto M = Polarity::Minus;
  auto node = [](RuleId r, const Sequent& s, std::vector<Derivation> kids, std::optional<Formula> x = std::nullopt) {
    return make_node(r, s, std::move(kids), std::move(x));
  };
  auto at = [](const Sequent& s, Polarity p, const Formula& f) { return s.with_succedent(p, f); };

  switch (c.kind()) {
    case K::And:
      if (plus)
        return node(RuleId::AndRPlus, concl,
                    {node(RuleId::AndLa, at(concl, P, a), {identity_rec(g.with(b), d, a, P)}, c),
                     node(RuleId::AndLa, at(concl, P, b), {identity_rec(g.with(a), d, b, P)}, c)});
      return node(RuleId::AndLc, concl,
                  {node(RuleId::AndRMinus1, Sequent(g, d.with(a), M, c), {identity_rec(g, d, a, M)}),
                   node(RuleId::AndRMinus2, Sequent(g, d.with(b), M, c), {identity_rec(g, d, b, M)})},
                  c);
    case K::Or:
      if (plus)
        return node(RuleId::OrLa, concl,
                    {node(RuleId::OrRPlus1, Sequent(g.with(a), d, P, c), {identity_rec(g, d, a, P)}),
                     node(RuleId::OrRPlus2, Sequent(g.with(b), d, P, c), {identity_rec(g, d, b, P)})},
                    c);
      return node(RuleId::OrRMinus, concl,
                  {node(RuleId::OrLc, at(concl, M, a), {identity_rec(g, d.with(b), a, M)}, c),
                   node(RuleId::OrLc, at(concl, M, b), {identity_rec(g, d.with(a), b, M)}, c)});
    case K::Imp:
      if (plus)
        return node(RuleId::ImpRPlus, concl,
                    {node(RuleId::ImpLa, Sequent(g.with(c).with(a), d, P, b),
                          {identity_rec(g.with(c), d, a, P), identity_rec(g.with(a), d, b, P)}, c)});
      return node(RuleId::ImpLc, concl,
                  {node(RuleId::ImpRMinus, Sequent(g.with(a), d.with(b), M, c),
                        {identity_rec(g, d.with(b), a, P), identity_rec(g.with(a), d, b, M)})},
                  c);
    case K::Coimp:
      if (plus)
        return node(RuleId::CoimpLa, concl,
                    {node(RuleId::CoimpRPlus, Sequent(g.with(a), d.with(b), P, c),
                          {identity_rec(g, d.with(b), a, P), identity_rec(g.with(a), d, b, M)})},
                    c);
      return node(RuleId::CoimpRMinus, concl,
                  {node(RuleId::CoimpLc, Sequent(g, d.with(c).with(b), M, a),
                        {identity_rec(g, d.with(c), b, M), identity_rec(g, d.with(b), a, M)}, c)});
    default:
      break;
  }
  throw InvariantError("identity: unreachable formula kind");
}

// ---------------------------------------------------------------------------
// Inversion

std::vector<std::size_t> principal_branches(K k, Side side) {
  const bool a = side == Side::A;
  switch (k) {
    case K::And: return a ? std::vector<std::size_t>{0} : std::vector<std::size_t>{0, 1};
    case K::Or: return a ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{0};
    case K::Imp: return a ? std::vector<std::size_t>{1} : std::vector<std::size_t>{0};
    case K::Coimp: return a ? std::vector<std::size_t>{0} : std::vector<std::size_t>{1};
    default: return {};
  }
}

std::vector<Derivation> invert_impl(const Derivation& d, Side side, const Formula& x) {
  const auto targets = inversion_targets(d.conclusion(), side, x);
  std::vector<Derivation> out;
  if (d.is_leaf()) {
    for (const auto& t : targets) out.push_back(make_node(d.rule(), t, {}));
    return out;
  }
  if (is_principal_for(d, side, x)) {
    for (std::size_t i : principal_branches(x.kind(), side)) out.push_back(d.premise(i));
    return out;
  }
  std::vector<std::vector<Derivation>> sub;
  for (const auto& p : d.premises()) sub.push_back(invert_impl(p, side, x));
  const auto principal = left_principal(d);
  for (std::size_t j = 0; j < targets.size(); ++j) {
    std::vector<Derivation> kids;
    for (auto& s : sub) kids.push_back(s[j]);
    out.push_back(make_node(d.rule(), targets[j], std::move(kids), principal));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Contraction

Derivation contract_impl(const Derivation& d, const Formula& x, Side side) {
  const Sequent concl = d.conclusion().minus(side, x);
  if (d.is_leaf()) return make_node(d.rule(), concl, {});

  if (!is_principal_for(d, side, x)) {
    std::vector<Derivation> kids;
    for (const auto& p : d.premises()) kids.push_back(contract_impl(p, x, side));
    return make_node(d.rule(), concl, std::move(kids), left_principal(d));
  }

  const Formula& a = x.left();
  const Formula& b = x.right();
  auto inv = [&](const Derivation& p, std::size_t branch) { return invert_impl(p, side, x).at(branch); };
  std::vector<Derivation> kids;
  switch (d.rule()) {
    case RuleId::AndLa:
      kids.push_back(contract_impl(contract_impl(inv(d.premise(0), 0), a, Side::A), b, Side::A));
      break;
    case RuleId::OrLa:
      kids.push_back(contract_impl(inv(d.premise(0), 0), a, Side::A));
      kids.push_back(contract_impl(inv(d.premise(1), 1), b, Side::A));
      break;
    case RuleId::ImpLa:
      kids.push_back(contract_impl(d.premise(0), x, Side::A));
      kids.push_back(contract_impl(inv(d.premise(1), 0), b, Side::A));
      break;
    case RuleId::CoimpLa:
      kids.push_back(contract_impl(contract_impl(inv(d.premise(0), 0), a, Side::A), b, Side::C));
      break;
    case RuleId::AndLc:
      kids.push_back(contract_impl(inv(d.premise(0), 0), a, Side::C));
      kids.push_back(contract_impl(inv(d.premise(1), 1), b, Side::C));
      break;
    case RuleId::OrLc:
      kids.push_back(contract_impl(contract_impl(inv(d.premise(0), 0), a, Side::C), b, Side::C));
      break;
    case RuleId::ImpLc:
      kids.push_back(contract_impl(contract_impl(inv(d.premise(0), 0), a, Side::A), b, Side::C));
      break;
    case RuleId::CoimpLc:
      kids.push_back(contract_impl(d.premise(0), x, Side::C));
      kids.push_back(contract_impl(inv(d.premise(1), 0), a, Side::C));
      break;
    default:
      throw InvariantError("contract: unexpected principal rule");
  }
  return make_node(d.rule(), concl, std::move(kids), x);
}

}  // namespace

Derivation derive_identity(const Context& gamma, const Context& delta, const Formula& c, Polarity polarity) {
  return identity_rec(gamma, delta, c, polarity);
}

Derivation weaken(const Derivation& d, const Formula& extra, Side side) {
  require_cut_free(d, "weaken");
  return map_conclusions(d, [&](const Sequent& s) { return s.plus(side, extra); });
}

Derivation weaken_all(const Derivation& d, const Context& gamma_extra, const Context& delta_extra) {
  require_cut_free(d, "weaken");
  return detail::weaken_all(d, gamma_extra, delta_extra);
}

Derivation unweaken_special(const Derivation& d, Unweaken which) {
  require_cut_free(d, "unweaken");
  return detail::unweaken(d, which);
}

Derivation detail::weaken_all(const Derivation& d, const Context& gamma_extra, const Context& delta_extra) {
  if (gamma_extra.empty() && delta_extra.empty()) return d;
  return map_conclusions(d, [&](const Sequent& s) {
    return Sequent(s.gamma + gamma_extra, s.delta + delta_extra, s.polarity, s.succedent);
  });
}

Derivation detail::unweaken(const Derivation& d, Unweaken which) {
  const Side side = which == Unweaken::TopInGamma ? Side::A : Side::C;
  const Formula f = which == Unweaken::TopInGamma ? Formula::top() : Formula::bottom();
  if (!d.conclusion().side(side).contains(f))
    throw TransformError(std::string("unweaken: no ") + (side == Side::A ? "T in Gamma" : "F in Delta"));
  return map_conclusions(d, [&](const Sequent& s) { return s.minus(side, f); });
}

std::string inversion_case(Formula::Kind connective, Side side) {
  const char* suffix = side == Side::A ? "1" : "2";
  switch (connective) {
    case K::And: return std::string("i") + suffix;
    case K::Or: return std::string("ii") + suffix;
    case K::Imp: return std::string("iii") + suffix;
    case K::Coimp: return std::string("iv") + suffix;
    default: throw TransformError("inversion needs a compound formula");
  }
}

std::vector<Sequent> inversion_targets(const Sequent& s, Side side, const Formula& x) {
  if (!x.is_compound()) throw TransformError("inversion needs a compound formula");
  if (!s.side(side).contains(x))
    throw TransformError("inversion: " + format_formula(x) + " not on side " + std::string(side_name(side)));
  const Sequent base = s.minus(side, x);
  const Formula& a = x.left();
  const Formula& b = x.right();
  const bool on_a = side == Side::A;
  switch (x.kind()) {
    case K::And:
      if (on_a) return {base.plus(Side::A, a).plus(Side::A, b)};
      return {base.plus(Side::C, a), base.plus(Side::C, b)};
    case K::Or:
      if (on_a) return {base.plus(Side::A, a), base.plus(Side::A, b)};
      return {base.plus(Side::C, a).plus(Side::C, b)};
    case K::Imp:
      if (on_a) return {base.plus(Side::A, b)};
      return {base.plus(Side::A, a).plus(Side::C, b)};
    case K::Coimp:
      if (on_a) return {base.plus(Side::A, a).plus(Side::C, b)};
      return {base.plus(Side::C, a)};
    default:
      break;
  }
  throw TransformError("inversion needs a compound formula");
}

std::vector<Derivation> invert(const Derivation& d, Side side, const Formula& target) {
  require_cut_free(d, "invert");
  inversion_targets(d.conclusion(), side, target);  // precondition
  return invert_impl(d, side, target);
}

Derivation contract(const Derivation& d, const Formula& dup, Side side) {
  require_cut_free(d, "contract");
  if (d.conclusion().side(side).count(dup) < 2)
    throw TransformError("contract: fewer than two copies of " + format_formula(dup) + " on side " +
                         std::string(side_name(side)));
  return contract_impl(d, dup, side);
}

Derivation detail::contract(const Derivation& d, const Formula& dup, Side side) {
  if (d.conclusion().side(side).count(dup) < 2)
    throw InvariantError("contract: fewer than two copies of " + format_formula(dup));
  return contract_impl(d, dup, side);
}

Derivation detail::contract_all(const Derivation& d, const Context& gamma, const Context& delta) {
  Derivation out = d;
  for (const auto& [f, n] : gamma)
    for (std::size_t i = 0; i < n; ++i) out = detail::contract(out, f, Side::A);
  for (const auto& [f, n] : delta)
    for (std::size_t i = 0; i < n; ++i) out = detail::contract(out, f, Side::C);
  return out;
}

}  // namespace bint
