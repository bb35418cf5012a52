#include "bint/io.hpp"

#include <fstream>
#include <sstream>

namespace bint {

using nlohmann::ordered_json;

namespace {

const char* const kSplitKeys[] = {"gamma", "gamma_prime", "delta", "delta_prime"};

Context* split_field(CutSplit& s, int i) {
  Context* fields[] = {&s.gamma, &s.gamma_prime, &s.delta, &s.delta_prime};
  return fields[i];
}

const std::string& string_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw FormatError(std::string("missing string field '") + key + "'");
  return j[key].get_ref<const std::string&>();
}

void tree_lines(const Derivation& d, std::size_t indent, std::string& out) {
  out.append(indent, ' ');
  out += rule_name(d.rule());
  out += "  ";
  out += format_sequent(d.conclusion());
  if (const auto& a = d.annotation(); a.cut_formula) out += "  [cut " + format_formula(*a.cut_formula) + "]";
  out += '\n';
  for (const auto& p : d.premises()) tree_lines(p, indent + 2, out);
}

void latex_lines(const Derivation& d, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  out += pad + "\\infer[\\scriptstyle " + std::string(rule_info(d.rule()).latex) + "]{" + latex_sequent(d.conclusion()) +
         "}{";
  if (d.is_leaf()) {
    out += "}";
    return;
  }
  out += '\n';
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    if (i) out += "\n" + pad + "  &\n";
    latex_lines(d.premise(i), indent + 2, out);
  }
  out += '\n' + pad + "}";
}

}  // namespace

ordered_json to_json(const Derivation& d) {
  ordered_json j;
  j["rule"] = std::string(rule_name(d.rule()));
  j["conclusion"] = format_sequent(d.conclusion());
  const Annotation& a = d.annotation();
  if (!a.empty()) {
    ordered_json ann = ordered_json::object();
    if (a.principal) ann["principal"] = format_formula(*a.principal);
    if (a.cut_formula) ann["cut_formula"] = format_formula(*a.cut_formula);
    if (a.split) {
      ordered_json s = ordered_json::object();
      CutSplit split = *a.split;
      for (int i = 0; i < 4; ++i) s[kSplitKeys[i]] = format_context(*split_field(split, i));
      ann["split"] = std::move(s);
    }
    j["annotation"] = std::move(ann);
  }
  ordered_json prem = ordered_json::array();
  for (const auto& p : d.premises()) prem.push_back(to_json(p));
  j["premises"] = std::move(prem);
  return j;
}

Derivation from_json(const ordered_json& j) {
  if (!j.is_object()) throw FormatError("derivation node must be an object");
  const std::string& rname = string_field(j, "rule");
  const auto rule = rule_from_name(rname);
  if (!rule) throw FormatError("unknown rule '" + rname + "'");
  Sequent concl = [&] {
    try {
      return parse_sequent(string_field(j, "conclusion"));
    } catch (const ParseError& e) {
      throw FormatError("conclusion: " + std::string(e.what()));
    }
  }();
  Annotation ann;
  try {
    if (j.contains("annotation")) {
      const auto& a = j["annotation"];
      if (!a.is_object()) throw FormatError("annotation must be an object");
      if (a.contains("principal")) ann.principal = parse_formula(string_field(a, "principal"));
      if (a.contains("cut_formula")) ann.cut_formula = parse_formula(string_field(a, "cut_formula"));
      if (a.contains("split")) {
        const auto& s = a["split"];
        if (!s.is_object()) throw FormatError("split must be an object");
        CutSplit split;
        for (int i = 0; i < 4; ++i) *split_field(split, i) = parse_context(string_field(s, kSplitKeys[i]));
        ann.split = std::move(split);
      }
    }
  } catch (const ParseError& e) {
    throw FormatError("annotation: " + std::string(e.what()));
  }
  std::vector<Derivation> premises;
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) throw FormatError("premises must be a list");
    for (const auto& p : j["premises"]) premises.push_back(from_json(p));
  }
  return Derivation(std::move(concl), *rule, std::move(premises), std::move(ann));
}

std::string write_derivation(const Derivation& d) { return to_json(d).dump(2) + "\n"; }

Derivation read_derivation(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(e.what());
  }
  return from_json(j);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Derivation load_derivation(const std::filesystem::path& path) { return read_derivation(read_file(path)); }

void save_derivation(const std::filesystem::path& path, const Derivation& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << write_derivation(d);
}

std::string format_tree(const Derivation& d) {
  std::string out;
  tree_lines(d, 0, out);
  return out;
}

std::string latex_tree(const Derivation& d) {
  std::string out;
  latex_lines(d, 0, out);
  return out + "\n";
}

}  // namespace bint
