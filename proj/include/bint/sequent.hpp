#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bint/formula.hpp"

namespace bint {

enum class Polarity : unsigned char { Plus, Minus };

/// Assumption side (a, the Gamma zone) or counterassumption side (c, Delta).
enum class Side : unsigned char { A, C };

inline Polarity flip(Polarity p) { return p == Polarity::Plus ? Polarity::Minus : Polarity::Plus; }
inline Side other(Side s) { return s == Side::A ? Side::C : Side::A; }
std::string_view polarity_mark(Polarity p);  // "+" or "-"
std::string_view side_name(Side s);          // "a" or "c"

/// Finite multiset of formulas stored as a count map. Iteration runs in the
/// canonical formula order.
class Context {
 public:
  using Map = std::map<Formula, std::size_t>;

  Context() = default;
  Context(std::initializer_list<Formula> items);
  explicit Context(const std::vector<Formula>& items);

  void add(const Formula& f, std::size_t n = 1);
  /// Removes n copies; returns false (and leaves the context untouched) if
  /// fewer than n are present.
  bool remove(const Formula& f, std::size_t n = 1);

  Context with(const Formula& f) const;
  Context without(const Formula& f) const;  // throws if absent

  std::size_t count(const Formula& f) const;
  bool contains(const Formula& f) const { return count(f) > 0; }
  std::size_t size() const noexcept { return size_; }
  std::size_t distinct() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return size_ == 0; }

  /// Multiset sum.
  Context operator+(const Context& other) const;
  /// Multiset difference; throws std::invalid_argument unless other is included.
  Context operator-(const Context& other) const;
  bool includes(const Context& other) const;

  /// Every count set to one.
  Context support() const;
  std::vector<Formula> elements() const;

  Map::const_iterator begin() const { return counts_.begin(); }
  Map::const_iterator end() const { return counts_.end(); }

  std::size_t hash() const noexcept;

  friend bool operator==(const Context& a, const Context& b) = default;
  friend std::strong_ordering operator<=>(const Context& a, const Context& b);

 private:
  Map counts_;
  std::size_t size_ = 0;
};

struct Sequent {
  Context gamma;
  Context delta;
  Polarity polarity;
  Formula succedent;

  Sequent(Context g, Context d, Polarity p, Formula c)
      : gamma(std::move(g)), delta(std::move(d)), polarity(p), succedent(std::move(c)) {}

  const Context& side(Side s) const { return s == Side::A ? gamma : delta; }
  Context& side(Side s) { return s == Side::A ? gamma : delta; }

  /// Copy with f added to (or one copy removed from) the given side.
  Sequent plus(Side s, const Formula& f) const;
  Sequent minus(Side s, const Formula& f) const;
  Sequent with_succedent(Polarity p, Formula c) const;

  /// Set-collapsed contexts; used as the loop-check key.
  Sequent support() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Sequent& a, const Sequent& b) = default;
  friend std::strong_ordering operator<=>(const Sequent& a, const Sequent& b);
};

/// `Gamma ; Delta |-+ C` or `Gamma ; Delta |-- C`; list entries separated by commas.
Sequent parse_sequent(std::string_view text);
/// Parses a comma separated list of formulas (possibly empty).
Context parse_context(std::string_view text, std::size_t offset = 0);
/// `Gamma ; Delta` without a succedent.
std::pair<Context, Context> parse_contexts(std::string_view text);

std::string format_context(const Context& c);
std::string format_sequent(const Sequent& s);
std::string latex_sequent(const Sequent& s);

inline std::ostream& operator<<(std::ostream& os, const Sequent& s) { return os << format_sequent(s); }

}  // namespace bint

template <>
struct std::hash<bint::Sequent> {
  std::size_t operator()(const bint::Sequent& s) const noexcept { return s.hash(); }
};
