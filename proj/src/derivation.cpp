#include "bint/derivation.hpp"

#include <algorithm>
#include <stdexcept>

namespace bint {

struct Derivation::Node {
  Sequent conclusion;
  RuleId rule;
  std::vector<Derivation> premises;
  Annotation annotation;
  std::size_t height = 0;
  std::size_t cuts = 0;
  std::size_t nodes = 1;
};

Derivation::Derivation(Sequent conclusion, RuleId rule, std::vector<Derivation> premises, Annotation annotation) {
  auto node = std::make_shared<Node>(Node{std::move(conclusion), rule, std::move(premises), std::move(annotation)});
  for (const auto& p : node->premises) {
    node->height = std::max(node->height, p.height() + 1);
    node->cuts += p.cut_count();
    node->nodes += p.node_count();
  }
  if (is_cut(rule)) ++node->cuts;
  node_ = std::move(node);
}

const Sequent& Derivation::conclusion() const noexcept { return node_->conclusion; }
RuleId Derivation::rule() const noexcept { return node_->rule; }
const std::vector<Derivation>& Derivation::premises() const noexcept { return node_->premises; }
const Annotation& Derivation::annotation() const noexcept { return node_->annotation; }
std::size_t Derivation::height() const noexcept { return node_->height; }
std::size_t Derivation::cut_count() const noexcept { return node_->cuts; }
std::size_t Derivation::node_count() const noexcept { return node_->nodes; }

const Derivation& Derivation::premise(std::size_t i) const {
  if (i >= node_->premises.size()) throw std::out_of_range("premise index out of range");
  return node_->premises[i];
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.node_ == b.node_) return true;
  return a.rule() == b.rule() && a.conclusion() == b.conclusion() && a.annotation() == b.annotation() &&
         a.premises() == b.premises();
}

bool same_shape(const Derivation& a, const Derivation& b) {
  if (a.rule() != b.rule() || !(a.conclusion() == b.conclusion())) return false;
  if (a.annotation().cut_formula != b.annotation().cut_formula || a.annotation().split != b.annotation().split)
    return false;
  if (a.premises().size() != b.premises().size()) return false;
  for (std::size_t i = 0; i < a.premises().size(); ++i)
    if (!same_shape(a.premise(i), b.premise(i))) return false;
  return true;
}

std::size_t cut_height(const Derivation& d) {
  if (!is_cut(d.rule())) throw std::invalid_argument("cut_height: node is not a cut");
  return d.premise(0).height() + d.premise(1).height();
}

}  // namespace bint
