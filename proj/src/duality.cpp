#include "bint/duality.hpp"

namespace bint {

Formula dual(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return f;
    case K::Bottom: return Formula::top();
    case K::Top: return Formula::bottom();
    case K::And: return Formula::disj(dual(f.left()), dual(f.right()));
    case K::Or: return Formula::conj(dual(f.left()), dual(f.right()));
    case K::Imp: return Formula::coimp(dual(f.right()), dual(f.left()));
    case K::Coimp: return Formula::imp(dual(f.right()), dual(f.left()));
  }
  return f;
}

Context dual(const Context& c) {
  Context out;
  for (const auto& [f, n] : c) out.add(dual(f), n);
  return out;
}

Sequent dual(const Sequent& s) { return Sequent(dual(s.delta), dual(s.gamma), flip(s.polarity), dual(s.succedent)); }

Derivation dual(const Derivation& d) {
  std::vector<Derivation> premises;
  premises.reserve(d.premises().size());
  for (const auto& p : d.premises()) premises.push_back(dual(p));
  if (d.rule() == RuleId::ImpRMinus || d.rule() == RuleId::CoimpRPlus) std::swap(premises[0], premises[1]);

  const Annotation& a = d.annotation();
  Annotation out;
  if (a.principal) out.principal = dual(*a.principal);
  if (a.cut_formula) out.cut_formula = dual(*a.cut_formula);
  if (a.split)
    out.split = CutSplit{dual(a.split->delta), dual(a.split->delta_prime), dual(a.split->gamma),
                         dual(a.split->gamma_prime)};
  return Derivation(dual(d.conclusion()), dual_rule(d.rule()), std::move(premises), std::move(out));
}

}  // namespace bint
