#include "bint/sequent.hpp"

#include <stdexcept>

namespace bint {

std::string_view polarity_mark(Polarity p) { return p == Polarity::Plus ? "+" : "-"; }
std::string_view side_name(Side s) { return s == Side::A ? "a" : "c"; }

Context::Context(std::initializer_list<Formula> items) {
  for (const auto& f : items) add(f);
}

Context::Context(const std::vector<Formula>& items) {
  for (const auto& f : items) add(f);
}

void Context::add(const Formula& f, std::size_t n) {
  if (n == 0) return;
  counts_[f] += n;
  size_ += n;
}

bool Context::remove(const Formula& f, std::size_t n) {
  auto it = counts_.find(f);
  if (it == counts_.end() || it->second < n) return false;
  it->second -= n;
  if (it->second == 0) counts_.erase(it);
  size_ -= n;
  return true;
}

Context Context::with(const Formula& f) const {
  Context out = *this;
  out.add(f);
  return out;
}

Context Context::without(const Formula& f) const {
  Context out = *this;
  if (!out.remove(f)) throw std::invalid_argument("formula " + format_formula(f) + " not in context");
  return out;
}

std::size_t Context::count(const Formula& f) const {
  auto it = counts_.find(f);
  return it == counts_.end() ? 0 : it->second;
}

Context Context::operator+(const Context& other) const {
  Context out = *this;
  for (const auto& [f, n] : other) out.add(f, n);
  return out;
}

Context Context::operator-(const Context& other) const {
  Context out = *this;
  for (const auto& [f, n] : other)
    if (!out.remove(f, n)) throw std::invalid_argument("multiset difference: " + format_formula(f) + " missing");
  return out;
}

bool Context::includes(const Context& other) const {
  for (const auto& [f, n] : other)
    if (count(f) < n) return false;
  return true;
}

Context Context::support() const {
  Context out;
  for (const auto& [f, n] : counts_) out.add(f);
  return out;
}

std::vector<Formula> Context::elements() const {
  std::vector<Formula> out;
  out.reserve(size_);
  for (const auto& [f, n] : counts_)
    for (std::size_t i = 0; i < n; ++i) out.push_back(f);
  return out;
}

std::size_t Context::hash() const noexcept {
  std::size_t h = 0xc0ffee;
  for (const auto& [f, n] : counts_) h = (h * 1000003) ^ (f.hash() + n * 0x9e3779b9);
  return h;
}

std::strong_ordering operator<=>(const Context& a, const Context& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  auto ia = a.counts_.begin();
  auto ib = b.counts_.begin();
  for (; ia != a.counts_.end() && ib != b.counts_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  return a.counts_.size() <=> b.counts_.size();
}

Sequent Sequent::plus(Side s, const Formula& f) const {
  Sequent out = *this;
  out.side(s).add(f);
  return out;
}

Sequent Sequent::minus(Side s, const Formula& f) const {
  Sequent out = *this;
  if (!out.side(s).remove(f))
    throw std::invalid_argument("formula " + format_formula(f) + " not on side " + std::string(side_name(s)));
  return out;
}

Sequent Sequent::with_succedent(Polarity p, Formula c) const { return Sequent(gamma, delta, p, std::move(c)); }

Sequent Sequent::support() const { return Sequent(gamma.support(), delta.support(), polarity, succedent); }

std::size_t Sequent::hash() const noexcept {
  std::size_t h = gamma.hash();
  h = h * 31 + delta.hash() * 17;
  h ^= succedent.hash() + (polarity == Polarity::Plus ? 0x51 : 0xa3) + (h << 6) + (h >> 2);
  return h;
}

std::strong_ordering operator<=>(const Sequent& a, const Sequent& b) {
  if (auto c = a.gamma <=> b.gamma; c != 0) return c;
  if (auto c = a.delta <=> b.delta; c != 0) return c;
  if (auto c = a.polarity <=> b.polarity; c != 0) return c;
  return a.succedent <=> b.succedent;
}

// ---------------------------------------------------------------------------

namespace {

Formula parse_at(std::string_view text, std::size_t offset) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw ParseError(e.reason(), e.position() + offset);
  }
}

bool blank(std::string_view s) {
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return false;
  return true;
}

}  // namespace

Context parse_context(std::string_view text, std::size_t offset) {
  Context out;
  if (blank(text)) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (blank(item)) throw ParseError("empty entry in formula list", offset + start);
    out.add(parse_at(item, offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<Context, Context> parse_contexts(std::string_view text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected ';' between Gamma and Delta", text.size());
  if (text.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("more than one ';'", text.find(';', semi + 1));
  return {parse_context(text.substr(0, semi), 0), parse_context(text.substr(semi + 1), semi + 1)};
}

Sequent parse_sequent(std::string_view text) {
  const std::size_t turn = text.find("|-");
  if (turn == std::string_view::npos) throw ParseError("expected '|-+' or '|--'", text.size());
  if (turn + 2 >= text.size() || (text[turn + 2] != '+' && text[turn + 2] != '-'))
    throw ParseError("turnstile must be '|-+' or '|--'", turn);
  const Polarity pol = text[turn + 2] == '+' ? Polarity::Plus : Polarity::Minus;
  auto [gamma, delta] = parse_contexts(text.substr(0, turn));
  const std::string_view rest = text.substr(turn + 3);
  if (blank(rest)) throw ParseError("missing succedent", turn + 3);
  Formula c = parse_at(rest, turn + 3);
  return Sequent(std::move(gamma), std::move(delta), pol, std::move(c));
}

std::string format_context(const Context& c) {
  std::string out;
  for (const auto& f : c.elements()) {
    if (!out.empty()) out += ", ";
    out += format_formula(f);
  }
  return out;
}

std::string format_sequent(const Sequent& s) {
  std::string out;
  if (!s.gamma.empty()) out += format_context(s.gamma) + " ";
  out += ";";
  if (!s.delta.empty()) out += " " + format_context(s.delta);
  out += s.polarity == Polarity::Plus ? " |-+ " : " |-- ";
  out += format_formula(s.succedent);
  return out;
}

namespace {

std::string latex_context(const Context& c) {
  if (c.empty()) return "\\varnothing";
  std::string out;
  for (const auto& f : c.elements()) {
    if (!out.empty()) out += ", ";
    out += latex_formula(f);
  }
  return out;
}

}  // namespace

std::string latex_sequent(const Sequent& s) {
  return "(" + latex_context(s.gamma) + "; " + latex_context(s.delta) + ") \\vdash^{" +
         std::string(polarity_mark(s.polarity)) + "} " + latex_formula(s.succedent);
}

}  // namespace bint
