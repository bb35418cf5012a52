#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bint/derivation.hpp"

namespace bint {

/// Precondition failure of a transformation (bad input, not a bug).
class TransformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cut-free derivation of (Gamma, C; Delta) |-+ C (Plus) or
/// (Gamma; Delta, C) |-- C (Minus). Formulas of weight <= 1 use the fixed
/// one-step figures; larger ones recurse on the immediate subformulas.
Derivation derive_identity(const Context& gamma, const Context& delta, const Formula& c, Polarity polarity);

/// Adds `extra` to the given side of every node. Height is unchanged.
Derivation weaken(const Derivation& d, const Formula& extra, Side side);
/// Same as folding `weaken` over both multisets.
Derivation weaken_all(const Derivation& d, const Context& gamma_extra, const Context& delta_extra);

enum class Unweaken { TopInGamma, BotInDelta };
/// Removes one T from Gamma or one F from Delta throughout.
Derivation unweaken_special(const Derivation& d, Unweaken which);

/// Case label of inverting a compound of the given connective on the given
/// side: "i1", "i2", "ii1", "ii2", "iii1", "iii2", "iv1", "iv2".
std::string inversion_case(Formula::Kind connective, Side side);

/// Derivations of the premise sequents of the left rule for `target` on
/// `side`, taken from a derivation of the conclusion. Two results for i2 and
/// ii1, one otherwise. Heights never grow.
std::vector<Derivation> invert(const Derivation& d, Side side, const Formula& target);

/// The sequents `invert` produces.
std::vector<Sequent> inversion_targets(const Sequent& s, Side side, const Formula& target);

/// Removes one of at least two copies of `dup` from the given side.
Derivation contract(const Derivation& d, const Formula& dup, Side side);

namespace detail {
// Same operations without the input check; for callers that already hold
// valid cut-free trees.
Derivation weaken_all(const Derivation& d, const Context& gamma_extra, const Context& delta_extra);
Derivation unweaken(const Derivation& d, Unweaken which);
Derivation contract(const Derivation& d, const Formula& dup, Side side);
/// Contracts every element of the multisets once (count times).
Derivation contract_all(const Derivation& d, const Context& gamma, const Context& delta);
}  // namespace detail

}  // namespace bint
