#pragma once

#include "bint/derivation.hpp"

namespace bint {

/// F <-> T, /\ <-> \/, (A -> B) |-> (dual B -< dual A) and back; atoms fixed.
Formula dual(const Formula& f);
Context dual(const Context& c);
/// Swaps Gamma and Delta (dualizing members) and the polarity.
Sequent dual(const Sequent& s);
/// Maps every node to its dual rule; premise order of ImpRMinus/CoimpRPlus is
/// swapped to match the dual figure.
Derivation dual(const Derivation& d);

}  // namespace bint
