#include "bint/cut.hpp"

#include <sstream>

#include "bint/checker.hpp"
#include "bint/transform.hpp"

namespace bint {

namespace {

using K = Formula::Kind;

std::string case3_id(RuleId r) {
  switch (r) {
    case RuleId::AndLa: return "-3.1-";
    case RuleId::AndLc: return "-3.2-";
    case RuleId::OrLa: return "-3.3-";
    case RuleId::OrLc: return "-3.4-";
    case RuleId::ImpLa: return "-3.5-";
    case RuleId::ImpLc: return "-3.6-";
    case RuleId::CoimpLa: return "-3.7-";
    case RuleId::CoimpLc: return "-3.8-";
    default: throw InvariantError("case 3 needs a left rule");
  }
}

std::string case4_id(RuleId r) {
  switch (r) {
    case RuleId::AndLa: return "-4.1-";
    case RuleId::AndLc: return "-4.2-";
    case RuleId::OrLa: return "-4.3-";
    case RuleId::OrLc: return "-4.4-";
    case RuleId::ImpLa: return "-4.5-";
    case RuleId::ImpLc: return "-4.6-";
    case RuleId::CoimpLa: return "-4.7-";
    case RuleId::CoimpLc: return "-4.8-";
    case RuleId::AndRPlus: return "-4.9-";
    case RuleId::AndRMinus1: return "-4.10.1-";
    case RuleId::AndRMinus2: return "-4.10.2-";
    case RuleId::OrRPlus1: return "-4.11.1-";
    case RuleId::OrRPlus2: return "-4.11.2-";
    case RuleId::OrRMinus: return "-4.12-";
    case RuleId::ImpRPlus: return "-4.13-";
    case RuleId::ImpRMinus: return "-4.14-";
    case RuleId::CoimpRPlus: return "-4.15-";
    case RuleId::CoimpRMinus: return "-4.16-";
    default: throw InvariantError("case 4 needs a logical rule");
  }
}

std::string case5_id(K k) {
  switch (k) {
    case K::And: return "-5.1-";
    case K::Or: return "-5.2-";
    case K::Imp: return "-5.3-";
    case K::Coimp: return "-5.4-";
    default: throw InvariantError("case 5 needs a compound cut formula");
  }
}

class Eliminator {
 public:
  explicit Eliminator(CutLog* log) : log_(log) {}

  Derivation run(const Derivation& l, const Derivation& r, const Formula& d, RuleId v,
                 std::optional<std::size_t> parent) {
    const bool a = v == RuleId::CutA;
    const Side cut_side = a ? Side::A : Side::C;
    const Context& g = l.conclusion().gamma;
    const Context& dl = l.conclusion().delta;
    const Sequent rest = r.conclusion().minus(cut_side, d);  // (Gamma'; Delta') |-* C
    const Sequent concl(g + rest.gamma, dl + rest.delta, rest.polarity, rest.succedent);
    const std::size_t h = l.height() + r.height();

    auto step = [&](std::string id, std::string via = {}) {
      if (!log_) return std::optional<std::size_t>{};
      log_->steps.push_back({std::move(id), d.weight(), h, v, parent, std::move(via)});
      return std::optional<std::size_t>(log_->steps.size() - 1);
    };
    auto done = [&](Derivation out) {
      if (!(out.conclusion() == concl))
        throw InvariantError("cut elimination produced `" + format_sequent(out.conclusion()) + "` instead of `" +
                             format_sequent(concl) + "`");
      return out;
    };
    auto reaxiom = [&](RuleId rule) { return make_node(rule, concl, {}); };

    // Right premise is a zero-premise conclusion.
    if (r.is_leaf()) {
      const bool plus = r.conclusion().polarity == Polarity::Plus;
      const std::string base = a ? (plus ? "-1.2-" : "-1.3-") : (plus ? "-2.2-" : "-2.3-");
      const Context& g2 = rest.gamma;
      const Context& d2 = rest.delta;
      const Formula& c = rest.succedent;
      std::string sub;
      std::optional<RuleId> axiom_rule;
      bool weaken_left = false;
      bool route = false;
      switch (r.rule()) {
        case RuleId::RfPlus:
          if (g2.contains(c)) {
            sub = "(a)", axiom_rule = RuleId::RfPlus;
          } else {
            sub = "(b)", weaken_left = true;  // C = D, only under CutA
          }
          break;
        case RuleId::RfMinus:
          if (d2.contains(c)) {
            sub = "(a)", axiom_rule = RuleId::RfMinus;
          } else {
            sub = "(b)", weaken_left = true;  // C = D, only under CutC
          }
          break;
        case RuleId::BotLa:
          if (g2.contains(Formula::bottom())) {
            axiom_rule = RuleId::BotLa;
            sub = a ? (plus ? "(c)" : "(b)") : (plus ? "(b)" : "(c)");
          } else {
            route = true;  // D = F under CutA
            sub = plus ? "(d)" : "(c)";
          }
          break;
        case RuleId::TopLc:
          if (d2.contains(Formula::top())) {
            axiom_rule = RuleId::TopLc;
            sub = a ? (plus ? "(e)" : "(d)") : (plus ? "(c)" : "(d)");
          } else {
            route = true;  // D = T under CutC
            sub = plus ? "(d)" : "(e)";
          }
          break;
        case RuleId::TopRPlus:
          axiom_rule = RuleId::TopRPlus;
          sub = a ? "(f)" : "(e)";
          break;
        case RuleId::BotRMinus:
          axiom_rule = RuleId::BotRMinus;
          sub = a ? "(e)" : "(f)";
          break;
        default:
          throw InvariantError("unexpected zero-premise rule on the right of a cut");
      }
      if (axiom_rule) {
        step(base + sub);
        return done(reaxiom(*axiom_rule));
      }
      if (weaken_left) {
        step(base + sub);
        return done(detail::weaken_all(l, g2, d2));
      }
      // With a zero-premise left premise the left cases below apply instead.
      if (route && !l.is_leaf()) {
        if (!is_left_rule(l.rule())) throw InvariantError("cut on a constant whose left premise ends in a right rule");
        return done(permute_left(l, r, d, v, concl, step(case3_id(l.rule()), base + sub)));
      }
    }

    // Left premise is a zero-premise conclusion.
    if (l.is_leaf()) {
      const std::string base = a ? "-1.1-" : "-2.1-";
      switch (l.rule()) {
        case RuleId::RfPlus:
        case RuleId::RfMinus:
          step(base + "(a)");
          return done(a ? detail::weaken_all(r, g - Context{d}, dl) : detail::weaken_all(r, g, dl - Context{d}));
        case RuleId::BotLa:
          step(base + "(b)");
          return done(reaxiom(RuleId::BotLa));
        case RuleId::TopLc:
          step(base + "(c)");
          return done(reaxiom(RuleId::TopLc));
        case RuleId::TopRPlus:
        case RuleId::BotRMinus:
          step(base + "(d)");
          return done(detail::weaken_all(
              detail::unweaken(r, a ? Unweaken::TopInGamma : Unweaken::BotInDelta), g, dl));
        default:
          break;
      }
      throw InvariantError("unexpected zero-premise rule on the left of a cut");
    }

    // Left premise ends in a left rule: the cut formula is not principal there.
    if (is_left_rule(l.rule())) return done(permute_left(l, r, d, v, concl, step(case3_id(l.rule()))));

    // Left premise ends in a right rule introducing D. Is D principal on the right?
    const bool principal_right = d.is_compound() && r.rule() == left_rule(d.kind(), cut_side) && principal_of(r) == d;
    if (!principal_right) {
      const auto idx = step(case4_id(r.rule()));
      std::vector<Derivation> kids;
      for (const auto& p : r.premises()) kids.push_back(run(l, p, d, v, idx));
      return done(make_node(r.rule(), concl, std::move(kids), is_left_rule(r.rule()) ? principal_of(r) : std::nullopt));
    }

    // Principal in both premises.
    const auto idx = step(case5_id(d.kind()));
    const Formula& fa = d.left();
    const Formula& fb = d.right();
    constexpr RuleId CA = RuleId::CutA;
    constexpr RuleId CC = RuleId::CutC;
    const Context& g2 = rest.gamma;
    const Context& d2 = rest.delta;
    switch (d.kind()) {
      case K::And:
        if (a) {
          Derivation upper = run(l.premise(0), r.premise(0), fa, CA, idx);
          Derivation lower = run(l.premise(1), upper, fb, CA, idx);
          return done(detail::contract_all(lower, g, dl));
        }
        if (l.rule() == RuleId::AndRMinus1) return done(run(l.premise(0), r.premise(0), fa, CC, idx));
        return done(run(l.premise(0), r.premise(1), fb, CC, idx));
      case K::Or:
        if (a) {
          if (l.rule() == RuleId::OrRPlus1) return done(run(l.premise(0), r.premise(0), fa, CA, idx));
          return done(run(l.premise(0), r.premise(1), fb, CA, idx));
        } else {
          Derivation upper = run(l.premise(0), r.premise(0), fa, CC, idx);
          Derivation lower = run(l.premise(1), upper, fb, CC, idx);
          return done(detail::contract_all(lower, g, dl));
        }
      case K::Imp:
        if (a) {
          Derivation c1 = run(l, r.premise(0), d, CA, idx);
          Derivation c2 = run(l.premise(0), r.premise(1), fb, CA, idx);
          Derivation c3 = run(c1, c2, fa, CA, idx);
          return done(detail::contract_all(c3, g + g2, dl + d2));
        } else {
          Derivation upper = run(l.premise(0), r.premise(0), fa, CA, idx);
          Derivation lower = run(l.premise(1), upper, fb, CC, idx);
          return done(detail::contract_all(lower, g, dl));
        }
      case K::Coimp:
        if (a) {
          Derivation upper = run(l.premise(0), r.premise(0), fa, CA, idx);
          Derivation lower = run(l.premise(1), upper, fb, CC, idx);
          return done(detail::contract_all(lower, g, dl));
        } else {
          Derivation c1 = run(l, r.premise(0), d, CC, idx);
          Derivation c2 = run(l.premise(0), r.premise(1), fa, CC, idx);
          Derivation c3 = run(c1, c2, fb, CC, idx);
          return done(detail::contract_all(c3, g + g2, dl + d2));
        }
      default:
        break;
    }
    throw InvariantError("unreachable cut case");
  }

 private:
  // Case 3: push the cut above the last rule of the left premise. The copied
  // premise of ImpLa / CoimpLc is weakened instead of cut.
  Derivation permute_left(const Derivation& l, const Derivation& r, const Formula& d, RuleId v, const Sequent& concl,
                          std::optional<std::size_t> idx) {
    const Sequent rest = r.conclusion().minus(v == RuleId::CutA ? Side::A : Side::C, d);
    const bool copies = l.rule() == RuleId::ImpLa || l.rule() == RuleId::CoimpLc;
    std::vector<Derivation> kids;
    for (std::size_t i = 0; i < l.premises().size(); ++i) {
      if (copies && i == 0)
        kids.push_back(detail::weaken_all(l.premise(0), rest.gamma, rest.delta));
      else
        kids.push_back(run(l.premise(i), r, d, v, idx));
    }
    return make_node(l.rule(), concl, std::move(kids), principal_of(l));
  }

  CutLog* log_;
};

void require_cut_premise(const Derivation& d, const char* which) {
  if (d.cut_count() != 0) throw TransformError(std::string("cut elimination: ") + which + " premise contains cuts");
  if (validation_enabled()) {
    auto report = check_derivation(d);
    if (!report.valid)
      throw TransformError(std::string("cut elimination: invalid ") + which + " premise " + *report.first_violation);
  }
}

void require_figure(const Derivation& l, const Derivation& r, const Formula& d, RuleId v) {
  if (!is_cut(v)) throw TransformError("cut variant must be CutA or CutC");
  const bool a = v == RuleId::CutA;
  const Polarity want = a ? Polarity::Plus : Polarity::Minus;
  if (l.conclusion().polarity != want || !(l.conclusion().succedent == d))
    throw TransformError(std::string("figure mismatch: left premise must end in ") + (a ? "|-+ " : "|-- ") +
                         format_formula(d));
  if (!r.conclusion().side(a ? Side::A : Side::C).contains(d))
    throw TransformError("figure mismatch: right premise lacks " + format_formula(d) + " in " +
                         (a ? "Gamma'" : "Delta'"));
}

}  // namespace

std::string CutLog::trace() const {
  std::ostringstream os;
  for (const auto& s : steps) {
    os << "case=" << s.case_id << " weight=" << s.weight << " cutheight=" << s.cut_height;
    if (!s.via.empty()) os << " via=" << s.via;
    os << '\n';
  }
  return os.str();
}

bool CutLog::measure_decreases() const {
  for (const auto& s : steps) {
    if (!s.parent) continue;
    const auto& p = steps[*s.parent];
    if (!(s.weight < p.weight || (s.weight == p.weight && s.cut_height < p.cut_height))) return false;
  }
  return true;
}

bool CutLog::has_height_increase_with_weight_drop() const {
  for (const auto& s : steps)
    if (s.parent && s.weight < steps[*s.parent].weight && s.cut_height > steps[*s.parent].cut_height) return true;
  return false;
}

std::size_t CutLog::cross_variant_edges(RuleId from, RuleId to) const {
  std::size_t n = 0;
  for (const auto& s : steps)
    if (s.parent && steps[*s.parent].variant == from && s.variant == to) ++n;
  return n;
}

Derivation make_cut(RuleId variant, const Derivation& left, const Derivation& right, const Formula& cut_formula) {
  require_figure(left, right, cut_formula, variant);
  const bool a = variant == RuleId::CutA;
  const Sequent rest = right.conclusion().minus(a ? Side::A : Side::C, cut_formula);
  CutSplit split{left.conclusion().gamma, rest.gamma, left.conclusion().delta, rest.delta};
  Sequent concl(split.gamma + split.gamma_prime, split.delta + split.delta_prime, rest.polarity, rest.succedent);
  Annotation ann;
  ann.cut_formula = cut_formula;
  ann.split = std::move(split);
  return Derivation(std::move(concl), variant, {left, right}, std::move(ann));
}

Derivation eliminate_cut(const Derivation& left, const Derivation& right, const Formula& cut_formula, RuleId variant,
                         CutLog* log) {
  require_figure(left, right, cut_formula, variant);
  require_cut_premise(left, "left");
  require_cut_premise(right, "right");
  Derivation out = Eliminator(log).run(left, right, cut_formula, variant, std::nullopt);
  if (validation_enabled()) {
    auto report = check_derivation(out);
    if (!report.valid || report.cut_count != 0)
      throw InvariantError("cut elimination output failed the checker: " + report.first_violation.value_or("cuts left"));
  }
  return out;
}

Derivation eliminate_cuts(const Derivation& d, CutLog* log) {
  if (d.cut_count() == 0) return d;
  std::vector<Derivation> kids;
  for (const auto& p : d.premises()) kids.push_back(eliminate_cuts(p, log));
  if (is_cut(d.rule())) {
    Derivation out = eliminate_cut(kids[0], kids[1], *d.annotation().cut_formula, d.rule(), log);
    if (!(out.conclusion() == d.conclusion())) throw InvariantError("cut conclusion does not match its split");
    return out;
  }
  return make_node(d.rule(), d.conclusion(), std::move(kids), is_left_rule(d.rule()) ? principal_of(d) : std::nullopt);
}

}  // namespace bint
