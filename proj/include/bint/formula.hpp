#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bint {

/// Immutable formula of the bi-intuitionistic language: atoms, F, T and the
/// four binary connectives. Copies share structure; equality and ordering are
/// structural.
class Formula {
 public:
  enum class Kind : unsigned char { Atom, Bottom, Top, And, Or, Imp, Coimp };

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula binary(Kind kind, Formula left, Formula right);
  static Formula conj(Formula left, Formula right) { return binary(Kind::And, std::move(left), std::move(right)); }
  static Formula disj(Formula left, Formula right) { return binary(Kind::Or, std::move(left), std::move(right)); }
  static Formula imp(Formula left, Formula right) { return binary(Kind::Imp, std::move(left), std::move(right)); }
  /// `coimp(a, b)` is a -< b, read "b co-implies a".
  static Formula coimp(Formula left, Formula right) { return binary(Kind::Coimp, std::move(left), std::move(right)); }

  Kind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_bottom() const noexcept { return kind() == Kind::Bottom; }
  bool is_top() const noexcept { return kind() == Kind::Top; }
  bool is_compound() const noexcept { return kind() >= Kind::And; }

  /// Atom name; empty for non-atoms.
  const std::string& name() const noexcept;
  /// Immediate subformulas. Only valid on compound formulas.
  const Formula& left() const;
  const Formula& right() const;

  std::size_t weight() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// w(F) = w(T) = 0, w(p) = 1, w(A # B) = w(A) + w(B) + 1.
inline std::size_t weight(const Formula& f) noexcept { return f.weight(); }

/// Syntax error in formula or sequent text; `position` is a 0-based offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& reason, std::size_t position)
      : std::runtime_error("parse error at column " + std::to_string(position + 1) + ": " + reason),
        reason_(reason),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
  std::size_t position_;
};

Formula parse_formula(std::string_view text);
std::string format_formula(const Formula& f);
std::string latex_formula(const Formula& f);

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << format_formula(f); }

}  // namespace bint

template <>
struct std::hash<bint::Formula> {
  std::size_t operator()(const bint::Formula& f) const noexcept { return f.hash(); }
};
