#include "bint/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bint/checker.hpp"
#include "bint/cut.hpp"
#include "bint/io.hpp"
#include "bint/search.hpp"
#include "bint/transform.hpp"

namespace bint {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string str(const ordered_json& spec, const char* key) {
  if (!spec.contains(key) || !spec[key].is_string())
    throw std::invalid_argument(std::string("manifest entry lacks string field '") + key + "'");
  return spec[key].get<std::string>();
}

Side side_of(const std::string& s) {
  if (s == "a") return Side::A;
  if (s == "c") return Side::C;
  throw std::invalid_argument("side must be 'a' or 'c', got '" + s + "'");
}

Polarity polarity_of(const std::string& s) {
  if (s == "+") return Polarity::Plus;
  if (s == "-") return Polarity::Minus;
  throw std::invalid_argument("polarity must be '+' or '-', got '" + s + "'");
}

std::string node_text(const Derivation& d) {
  return std::string(rule_name(d.rule())) + " " + format_sequent(d.conclusion());
}

void diff_rec(const Derivation& a, const Derivation& b, const std::string& path, std::string& out) {
  if (!out.empty()) return;
  if (a.rule() != b.rule() || !(a.conclusion() == b.conclusion()) ||
      a.premises().size() != b.premises().size() || a.annotation().cut_formula != b.annotation().cut_formula ||
      a.annotation().split != b.annotation().split) {
    out = "at " + (path.empty() ? std::string("/") : path) + ": got `" + node_text(a) + "`, expected `" +
          node_text(b) + "`";
    return;
  }
  for (std::size_t i = 0; i < a.premises().size(); ++i) diff_rec(a.premise(i), b.premise(i), path + "/" + std::to_string(i), out);
}

void collect_rules(const Derivation& d, std::set<RuleId>& out) {
  out.insert(d.rule());
  for (const auto& p : d.premises()) collect_rules(p, out);
}

// Files a case refers to, relative to the corpus directory.
std::vector<std::string> files_of(const GoldenCase& c) {
  std::vector<std::string> out;
  for (const char* key : {"input", "expected", "file"}) {
    if (!c.spec.contains(key)) continue;
    const auto& v = c.spec[key];
    if (v.is_string()) out.push_back(v.get<std::string>());
    if (v.is_array())
      for (const auto& f : v) out.push_back(f.get<std::string>());
    if (v.is_object())
      for (const auto& [k, f] : v.items()) out.push_back(f.get<std::string>());
  }
  return out;
}

std::string compare(const Derivation& got, const fs::path& file) {
  const Derivation want = load_derivation(file);
  std::string d = first_difference(got, want);
  if (!d.empty()) return file.filename().string() + " " + d;
  return {};
}

std::string run_cut(const GoldenCase& c, const fs::path& dir) {
  const Derivation in = load_derivation(dir / str(c.spec, "input"));
  if (!is_cut(in.rule()) || !in.annotation().cut_formula) return "input is not a cut";
  CutLog log;
  const Derivation out =
      eliminate_cut(in.premise(0), in.premise(1), *in.annotation().cut_formula, in.rule(), &log);
  const CheckReport rep = check_derivation(out);
  if (!rep.valid) return "output invalid: " + rep.first_violation.value_or("");
  if (rep.cut_count) return "output still has cuts";
  if (!(out.conclusion() == in.conclusion())) return "output concludes " + format_sequent(out.conclusion());
  const std::string want_case = str(c.spec, "case");
  const CutStep& root = log.steps.at(0);
  if (root.case_id != want_case && root.via != want_case)
    return "root case " + root.case_id + (root.via.empty() ? "" : " via " + root.via) + ", expected " + want_case;
  if (c.spec.contains("root_rule") && rule_name(out.rule()) != str(c.spec, "root_rule"))
    return "root rule " + std::string(rule_name(out.rule())) + ", expected " + str(c.spec, "root_rule");
  if (c.spec.contains("child_steps")) {
    std::vector<const CutStep*> kids;
    for (const auto& s : log.steps)
      if (s.parent == 0) kids.push_back(&s);
    const auto& want = c.spec["child_steps"];
    if (want.size() != kids.size())
      return std::to_string(kids.size()) + " sub-cuts below the root, expected " + std::to_string(want.size());
    std::vector<bool> used(kids.size(), false);
    for (const auto& w : want) {
      bool found = false;
      for (std::size_t i = 0; i < kids.size() && !found; ++i) {
        if (used[i] || rule_name(kids[i]->variant) != w["variant"].get<std::string>() ||
            kids[i]->weight != w["weight"].get<std::size_t>())
          continue;
        if (!w["cut_height"].is_null() && kids[i]->cut_height != w["cut_height"].get<std::size_t>()) continue;
        used[i] = found = true;
      }
      if (!found) return "no sub-cut matching " + w.dump() + "; trace:\n" + log.trace();
    }
  }
  if (c.spec.contains("expected")) return compare(out, dir / str(c.spec, "expected"));
  return {};
}

std::string run_case(const GoldenCase& c, const fs::path& dir) {
  const auto& s = c.spec;
  if (c.kind == "identity") {
    const auto [g, d] = parse_contexts(str(s, "context"));
    const Formula f = parse_formula(str(s, "formula"));
    for (const auto& [pol, file] : s["expected"].items()) {
      const std::string r = compare(derive_identity(g, d, f, polarity_of(pol)), dir / file.get<std::string>());
      if (!r.empty()) return r;
    }
    return {};
  }
  if (c.kind == "weaken") {
    const Derivation in = load_derivation(dir / str(s, "input"));
    return compare(weaken(in, parse_formula(str(s, "formula")), side_of(str(s, "side"))), dir / str(s, "expected"));
  }
  if (c.kind == "unweaken") {
    const Derivation in = load_derivation(dir / str(s, "input"));
    const Unweaken w = str(s, "which") == "top" ? Unweaken::TopInGamma : Unweaken::BotInDelta;
    return compare(unweaken_special(in, w), dir / str(s, "expected"));
  }
  if (c.kind == "contract") {
    const Derivation in = load_derivation(dir / str(s, "input"));
    return compare(contract(in, parse_formula(str(s, "formula")), side_of(str(s, "side"))), dir / str(s, "expected"));
  }
  if (c.kind == "invert") {
    const Derivation in = load_derivation(dir / str(s, "input"));
    const auto got = invert(in, side_of(str(s, "side")), parse_formula(str(s, "formula")));
    const auto& want = s["expected"];
    if (got.size() != want.size())
      return std::to_string(got.size()) + " results, expected " + std::to_string(want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      const std::string r = compare(got[i], dir / want[i].get<std::string>());
      if (!r.empty()) return r;
    }
    return {};
  }
  if (c.kind == "cut") return run_cut(c, dir);
  if (c.kind == "prove") {
    SearchOutcome o = prove(parse_sequent(str(s, "sequent")));
    if (verdict_name(o.verdict) != str(s, "verdict"))
      return std::string(verdict_name(o.verdict)) + ", expected " + str(s, "verdict");
    if (o.proof) {
      const CheckReport rep = check_derivation(*o.proof);
      if (!rep.valid || rep.cut_count) return "proof does not check";
    }
    return {};
  }
  if (c.kind == "check") {
    const CheckReport rep = check_derivation(load_derivation(dir / str(s, "file")));
    if (rep.valid != s["valid"].get<bool>()) return rep.valid ? "valid, expected invalid" : *rep.first_violation;
    if (s.contains("height") && rep.height != s["height"].get<std::size_t>())
      return "height " + std::to_string(rep.height) + ", expected " + std::to_string(s["height"].get<std::size_t>());
    return {};
  }
  return "unknown case kind '" + c.kind + "'";
}

// Outline parsing.
struct OutlineNode {
  std::string rule;
  std::string principal;
  std::vector<OutlineNode> kids;
};

class OutlineParser {
 public:
  explicit OutlineParser(std::string_view t) : t_(t) {}

  OutlineNode parse() {
    OutlineNode n = node();
    skip();
    if (i_ != t_.size()) fail("trailing text");
    return n;
  }

 private:
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("outline column " + std::to_string(i_ + 1) + ": " + why);
  }
  OutlineNode node() {
    skip();
    OutlineNode n;
    while (i_ < t_.size() && std::isalnum(static_cast<unsigned char>(t_[i_]))) n.rule += t_[i_++];
    if (n.rule.empty()) fail("expected a rule name");
    skip();
    if (i_ < t_.size() && t_[i_] == '[') {
      const auto close = t_.find(']', i_);
      if (close == std::string_view::npos) fail("unclosed '['");
      n.principal = std::string(t_.substr(i_ + 1, close - i_ - 1));
      i_ = close + 1;
      skip();
    }
    if (i_ < t_.size() && t_[i_] == '(') {
      ++i_;
      n.kids.push_back(node());
      skip();
      while (i_ < t_.size() && t_[i_] == ',') {
        ++i_;
        n.kids.push_back(node());
        skip();
      }
      if (i_ >= t_.size() || t_[i_] != ')') fail("expected ')'");
      ++i_;
    }
    return n;
  }

  std::string_view t_;
  std::size_t i_ = 0;
};

Derivation build(const Sequent& s, const OutlineNode& n) {
  const auto rule = rule_from_name(n.rule);
  if (!rule) throw std::invalid_argument("unknown rule '" + n.rule + "'");
  const RuleInfo& info = rule_info(*rule);
  if (info.kind == RuleKind::Cut) throw std::invalid_argument("outlines cannot contain cuts");
  if (info.kind == RuleKind::ZeroPremise) {
    if (!n.kids.empty() || !closes(*rule, s))
      throw std::invalid_argument(n.rule + " does not close `" + format_sequent(s) + "`");
    return make_node(*rule, s, {});
  }
  Formula principal = s.succedent;
  if (!n.principal.empty()) {
    principal = parse_formula(n.principal);
  } else if (info.kind == RuleKind::Left) {
    std::vector<Formula> found;
    for (const auto& f : s.side(info.side).support().elements())
      if (f.kind() == info.connective) found.push_back(f);
    if (found.size() != 1)
      throw std::invalid_argument(n.rule + " needs an explicit principal in `" + format_sequent(s) + "`");
    principal = found.front();
  }
  const auto prem = instantiate(*rule, s, principal);
  if (!prem) throw std::invalid_argument(n.rule + " does not apply to `" + format_sequent(s) + "`");
  if (prem->size() != n.kids.size())
    throw std::invalid_argument(n.rule + " has " + std::to_string(prem->size()) + " premises, outline gives " +
                                std::to_string(n.kids.size()));
  std::vector<Derivation> kids;
  for (std::size_t i = 0; i < prem->size(); ++i) kids.push_back(build((*prem)[i], n.kids[i]));
  return make_node(*rule, s, std::move(kids), info.kind == RuleKind::Left ? std::optional(principal) : std::nullopt);
}

}  // namespace

std::vector<GoldenCase> load_manifest(const fs::path& dir) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_file(dir / "manifest.json"));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("manifest: ") + e.what());
  }
  std::vector<GoldenCase> out;
  for (const auto& e : j.at("cases")) {
    GoldenCase c;
    c.id = e.at("id").get<std::string>();
    c.location = e.value("location", "");
    c.description = e.value("description", "");
    c.kind = e.at("kind").get<std::string>();
    c.spec = e;
    out.push_back(std::move(c));
  }
  return out;
}

GoldenResult run_golden(const GoldenCase& c, const fs::path& dir) {
  GoldenResult r{c.id, false, {}};
  try {
    r.report = run_case(c, dir);
  } catch (const std::exception& e) {
    r.report = std::string("error: ") + e.what();
  }
  r.passed = r.report.empty();
  return r;
}

std::vector<GoldenResult> run_all(const std::vector<GoldenCase>& cases, const fs::path& dir) {
  std::vector<GoldenResult> out;
  out.reserve(cases.size());
  for (const auto& c : cases) out.push_back(run_golden(c, dir));
  return out;
}

const std::vector<std::string>& cut_case_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v = {"-1.1-", "-1.2-", "-1.3-", "-2.1-", "-2.2-", "-2.3-"};
    for (int i = 1; i <= 8; ++i) v.push_back("-3." + std::to_string(i) + "-");
    for (int i = 1; i <= 9; ++i) v.push_back("-4." + std::to_string(i) + "-");
    for (const char* s : {"-4.10.1-", "-4.10.2-", "-4.11.1-", "-4.11.2-", "-4.12-", "-4.13-", "-4.14-", "-4.15-",
                          "-4.16-", "-5.1-", "-5.2-", "-5.3-", "-5.4-"})
      v.push_back(s);
    return v;
  }();
  return ids;
}

std::string main_case_id(std::string_view id) {
  const auto paren = id.find('(');
  return std::string(paren == std::string_view::npos ? id : id.substr(0, paren));
}

std::string Coverage::report() const {
  std::ostringstream os;
  os << "rules used: " << rules.size() << "/" << kRuleCount << "\n";
  for (const auto& r : missing_rules) os << "  missing rule " << r << "\n";
  os << "cut cases: " << cut_cases.size() << "/" << cut_case_ids().size() << "\n";
  for (const auto& c : missing_cut_cases) os << "  missing case " << c << "\n";
  os << (complete() ? "coverage complete\n" : "coverage has gaps\n");
  return os.str();
}

Coverage coverage(const std::vector<GoldenCase>& cases, const fs::path& dir) {
  Coverage cov;
  for (const auto& c : cases) {
    std::set<RuleId> used;
    for (const auto& f : files_of(c)) {
      try {
        collect_rules(load_derivation(dir / f), used);
      } catch (const std::exception&) {
        // Unreadable files show up as golden failures.
      }
    }
    for (RuleId r : used) cov.rules[std::string(rule_name(r))].push_back(c.id);
    if (c.kind == "cut" && c.spec.contains("case")) cov.cut_cases[main_case_id(str(c.spec, "case"))].push_back(c.id);
  }
  for (RuleId r : all_rules())
    if (!cov.rules.count(std::string(rule_name(r)))) cov.missing_rules.emplace_back(rule_name(r));
  for (const auto& id : cut_case_ids())
    if (!cov.cut_cases.count(id)) cov.missing_cut_cases.push_back(id);
  return cov;
}

Derivation build_outline(const Sequent& s, std::string_view outline) {
  return build(s, OutlineParser(outline).parse());
}

std::string first_difference(const Derivation& got, const Derivation& want) {
  std::string out;
  diff_rec(got, want, "", out);
  return out;
}

}  // namespace bint
