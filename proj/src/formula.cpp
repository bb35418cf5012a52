#include "bint/formula.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <vector>

namespace bint {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;
  std::size_t weight = 0;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be non-empty");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->hash = mix(0x41, std::hash<std::string>{}(name));
  node->name = std::move(name);
  node->weight = 1;
  return Formula(std::move(node));
}

Formula Formula::bottom() {
  static const Formula f = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Bottom;
    node->hash = 0x1b07;
    return Formula(std::move(node));
  }();
  return f;
}

Formula Formula::top() {
  static const Formula f = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Top;
    node->hash = 0x70b;
    return Formula(std::move(node));
  }();
  return f;
}

Formula Formula::binary(Kind kind, Formula left, Formula right) {
  if (kind < Kind::And) throw std::invalid_argument("binary formula needs a connective");
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->weight = left.weight() + right.weight() + 1;
  node->hash = mix(mix(static_cast<std::size_t>(kind) * 0x9f, left.hash()), right.hash());
  node->children.push_back(std::move(left));
  node->children.push_back(std::move(right));
  return Formula(std::move(node));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const noexcept { return node_->name; }
std::size_t Formula::weight() const noexcept { return node_->weight; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

const Formula& Formula::left() const {
  if (!is_compound()) throw std::logic_error("left() on non-compound formula");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (!is_compound()) throw std::logic_error("right() on non-compound formula");
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  if (a.node_->kind == Formula::Kind::Atom) return a.node_->name == b.node_->name;
  if (!a.is_compound()) return true;
  return a.node_->children[0] == b.node_->children[0] && a.node_->children[1] == b.node_->children[1];
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (a.node_->kind == Formula::Kind::Atom) return a.node_->name <=> b.node_->name;
  if (!a.is_compound()) return std::strong_ordering::equal;
  if (auto c = a.node_->children[0] <=> b.node_->children[0]; c != 0) return c;
  return a.node_->children[1] <=> b.node_->children[1];
}

// ---------------------------------------------------------------------------
// Concrete syntax
//
//   arrow := disj (('->' | '-<') arrow)?     right-assoc, kinds may not mix
//   disj  := conj ('\/' conj)*               left-assoc
//   conj  := unit ('/\' unit)*               left-assoc
//   unit  := 'F' | 'T' | ident | '(' arrow ')'

namespace {

enum class Tok { Ident, And, Or, Imp, Coimp, LParen, RParen, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, "", start};
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return {Tok::Ident, std::string(text_.substr(start, pos_ - start)), start};
    }
    auto two = text_.substr(pos_, 2);
    if (two == "/\\") return pos_ += 2, Token{Tok::And, "/\\", start};
    if (two == "\\/") return pos_ += 2, Token{Tok::Or, "\\/", start};
    if (two == "->") return pos_ += 2, Token{Tok::Imp, "->", start};
    if (two == "-<") return pos_ += 2, Token{Tok::Coimp, "-<", start};
    if (c == '(') return ++pos_, Token{Tok::LParen, "(", start};
    if (c == ')') return ++pos_, Token{Tok::RParen, ")", start};
    throw ParseError(std::string("unknown token '") + c + "'", start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Formula parse_all() {
    Formula f = arrow();
    if (cur_.type != Tok::End) {
      if (cur_.type == Tok::RParen) throw ParseError("unbalanced ')'", cur_.pos);
      throw ParseError("unexpected '" + cur_.text + "'", cur_.pos);
    }
    return f;
  }

 private:
  bool after_operator() const {
    return prev_.type == Tok::And || prev_.type == Tok::Or || prev_.type == Tok::Imp || prev_.type == Tok::Coimp;
  }

  void advance() {
    prev_ = cur_;
    cur_ = lexer_.next();
  }

  Formula arrow() {
    std::vector<Formula> operands{disj()};
    std::optional<Tok> kind;
    while (cur_.type == Tok::Imp || cur_.type == Tok::Coimp) {
      if (kind && *kind != cur_.type)
        throw ParseError("'->' and '-<' may not be mixed without parentheses", cur_.pos);
      kind = cur_.type;
      advance();
      operands.push_back(disj());
    }
    Formula result = operands.back();
    const auto k = kind == Tok::Coimp ? Formula::Kind::Coimp : Formula::Kind::Imp;
    for (auto it = operands.rbegin() + 1; it != operands.rend(); ++it) result = Formula::binary(k, *it, result);
    return result;
  }

  Formula disj() {
    Formula result = conj();
    while (cur_.type == Tok::Or) {
      advance();
      result = Formula::disj(result, conj());
    }
    return result;
  }

  Formula conj() {
    Formula result = unit();
    while (cur_.type == Tok::And) {
      advance();
      result = Formula::conj(result, unit());
    }
    return result;
  }

  Formula unit() {
    const Token tok = cur_;
    switch (tok.type) {
      case Tok::Ident:
        advance();
        if (tok.text == "F") return Formula::bottom();
        if (tok.text == "T") return Formula::top();
        return Formula::atom(tok.text);
      case Tok::LParen: {
        advance();
        Formula inner = arrow();
        if (cur_.type != Tok::RParen) throw ParseError("unbalanced '('", tok.pos);
        advance();
        return inner;
      }
      case Tok::End:
      case Tok::RParen:
        if (after_operator()) throw ParseError("dangling operator '" + prev_.text + "'", prev_.pos);
        if (tok.type == Tok::RParen) throw ParseError("unbalanced ')'", tok.pos);
        throw ParseError("expected a formula", tok.pos);
      default:
        throw ParseError("dangling operator '" + tok.text + "'", tok.pos);
    }
  }

  Lexer lexer_;
  Token cur_{Tok::End, "", 0};
  Token prev_{Tok::End, "", 0};
};

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Imp:
    case Formula::Kind::Coimp:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    default:
      return 4;
  }
}

const char* token_of(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::And: return "/\\";
    case Formula::Kind::Or: return "\\/";
    case Formula::Kind::Imp: return "->";
    case Formula::Kind::Coimp: return "-<";
    default: return "";
  }
}

bool needs_parens(const Formula& parent, const Formula& child, bool is_right) {
  const int pp = precedence(parent.kind());
  const int cp = precedence(child.kind());
  if (cp != pp) return cp < pp;
  if (pp == 1) return !is_right || parent.kind() != child.kind();
  return is_right;
}

void emit(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: out += f.name(); return;
    case Formula::Kind::Bottom: out += 'F'; return;
    case Formula::Kind::Top: out += 'T'; return;
    default: break;
  }
  auto side = [&](const Formula& child, bool is_right) {
    const bool p = needs_parens(f, child, is_right);
    if (p) out += '(';
    emit(child, out);
    if (p) out += ')';
  };
  side(f.left(), false);
  out += ' ';
  out += token_of(f.kind());
  out += ' ';
  side(f.right(), true);
}

void emit_latex(const Formula& f, std::string& out, bool top_level) {
  switch (f.kind()) {
    case Formula::Kind::Atom: out += f.name(); return;
    case Formula::Kind::Bottom: out += "\\bot"; return;
    case Formula::Kind::Top: out += "\\top"; return;
    default: break;
  }
  static constexpr const char* ops[] = {"", "", "", " \\wedge ", " \\vee ", " \\rightarrow ", " \\Yleft "};
  if (!top_level) out += '(';
  emit_latex(f.left(), out, false);
  out += ops[static_cast<int>(f.kind())];
  emit_latex(f.right(), out, false);
  if (!top_level) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

std::string format_formula(const Formula& f) {
  std::string out;
  emit(f, out);
  return out;
}

std::string latex_formula(const Formula& f) {
  std::string out;
  emit_latex(f, out, true);
  return out;
}

}  // namespace bint
