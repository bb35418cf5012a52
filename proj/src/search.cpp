#include "bint/search.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>

#include "bint/checker.hpp"

namespace bint {

namespace {

constexpr std::size_t kNoLoop = std::numeric_limits<std::size_t>::max();

struct Result {
  std::optional<Derivation> proof;
  bool cutoff = false;
  // Shallowest path depth a loop check pointed at while exploring.
  std::size_t loop_ref = kNoLoop;

  void absorb(const Result& r) {
    cutoff = cutoff || r.cutoff;
    loop_ref = std::min(loop_ref, r.loop_ref);
  }
};

// Two sequents with the same support are derivable from each other at equal
// height (weakening and contraction both preserve height), so a branch that
// revisits a support can be cut off, and a support refuted without help from
// outer loop checks stays refuted everywhere.
class Searcher {
 public:
  Searcher(const SearchConfig& cfg, std::size_t limit) : cfg_(cfg), limit_(limit), rng_(cfg.seed) {}

  Result search(const Sequent& s, std::size_t depth) {
    if (auto it = proved_.find(s); it != proved_.end() && it->second.height() + depth <= limit_)
      return Result{it->second};
    const Sequent key = s.support();
    if (refuted_.count(key)) return Result{};

    if (cfg_.loop_check) {
      if (auto it = path_.find(key); it != path_.end()) {
        Result r;
        r.loop_ref = it->second;
        return r;
      }
    }

    auto expansions = backward_expansions(s);
    if (cfg_.seed != 0) shuffle_groups(expansions);

    Result out;
    if (!expansions.empty() && expansions.front().premises.empty()) {
      out.proof = Derivation(s, expansions.front().rule);
      return out;
    }
    if (depth >= limit_) {
      out.cutoff = !expansions.empty();
      return out;
    }

    ++expanded_;
    if (cfg_.loop_check) path_.emplace(key, depth);
    for (auto& e : expansions) {
      std::vector<Derivation> kids;
      bool ok = true;
      for (const auto& p : e.premises) {
        Result r = search(p, depth + 1);
        out.absorb(r);
        if (!r.proof) {
          ok = false;
          break;
        }
        kids.push_back(std::move(*r.proof));
      }
      if (ok) {
        out.proof = Derivation(s, e.rule, std::move(kids), e.annotation);
        break;
      }
    }
    if (cfg_.loop_check) path_.erase(key);

    if (out.proof) {
      proved_.emplace(s, *out.proof);
    } else if (!out.cutoff && out.loop_ref >= depth) {
      refuted_.emplace(key, true);
    }
    // Loop references to this node do not leak to the caller.
    if (out.loop_ref >= depth) out.loop_ref = kNoLoop;
    return out;
  }

  std::size_t expanded() const { return expanded_; }

 private:
  void shuffle_groups(std::vector<Expansion>& v) {
    auto begin = v.begin();
    while (begin != v.end()) {
      auto end = std::find_if(begin, v.end(), [&](const Expansion& e) { return e.group != begin->group; });
      std::shuffle(begin, end, rng_);
      begin = end;
    }
  }

  const SearchConfig& cfg_;
  std::size_t limit_;
  std::mt19937_64 rng_;
  std::unordered_map<Sequent, Derivation> proved_;
  std::unordered_map<Sequent, bool> refuted_;
  std::unordered_map<Sequent, std::size_t> path_;
  std::size_t expanded_ = 0;
};

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "Proved";
    case Verdict::Refuted: return "Refuted";
    case Verdict::BoundExhausted: return "BoundExhausted";
  }
  return "?";
}

SearchOutcome prove(const Sequent& s, const SearchConfig& cfg) {
  const std::size_t max_depth = std::max<std::size_t>(cfg.max_depth, 1);
  std::size_t expanded = 0;
  // Exhaustive mode deepens the height bound one step at a time, so the first
  // proof found has least height.
  for (std::size_t limit = cfg.exhaustive ? 0 : max_depth; limit <= max_depth; ++limit) {
    Searcher searcher(cfg, limit);
    Result r = searcher.search(s, 0);
    expanded += searcher.expanded();
    if (r.proof) return {Verdict::Proved, std::move(r.proof), expanded};
    if (!r.cutoff) return {Verdict::Refuted, std::nullopt, expanded};
  }
  return {Verdict::BoundExhausted, std::nullopt, expanded};
}

}  // namespace bint
