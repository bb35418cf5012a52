// Builds the golden corpus (derivation files and manifest.json) from the
// hand-written figure outlines in figures.json.
//
//   bint-mkcorpus FIGURES.json OUTDIR
//
// Cut cases picked by random search use BINT_SEED (default 1).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <json.hpp>

#include "bint/checker.hpp"
#include "bint/corpus.hpp"
#include "bint/cut.hpp"
#include "bint/generator.hpp"
#include "bint/io.hpp"

using namespace bint;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

fs::path out_dir;
ordered_json cases = ordered_json::array();

Derivation outline(const ordered_json& j) {
  return build_outline(parse_sequent(j.at("sequent").get<std::string>()), j.at("outline").get<std::string>());
}

std::string save(const std::string& name, const Derivation& d) {
  save_derivation(out_dir / name, d);
  return name;
}

ordered_json entry(const ordered_json& src, const char* kind) {
  ordered_json e;
  e["id"] = src.at("id");
  e["location"] = src.value("location", "");
  e["description"] = src.value("description", "");
  e["kind"] = kind;
  return e;
}

// Raw node, for deliberately broken files.
Derivation raw(const ordered_json& j) {
  std::vector<Derivation> kids;
  for (const auto& p : j.value("premises", ordered_json::array())) kids.push_back(raw(p));
  return Derivation(parse_sequent(j.at("sequent").get<std::string>()), *rule_from_name(j.at("rule").get<std::string>()),
                    std::move(kids));
}

std::string case_file_id(const std::string& case_id) {
  std::string out = "case-";
  for (char c : case_id) {
    if (c == '(') out += '-';
    else if (c != '-' && c != ')') out += c;
  }
  return out;
}

void random_cuts(const ordered_json& cfg) {
  const char* env = std::getenv("BINT_SEED");
  const std::uint64_t seed = env ? std::strtoull(env, nullptr, 10) : 1;
  const std::size_t tries = cfg.at("tries").get<std::size_t>();
  std::map<std::string, std::pair<std::size_t, CutPair>> best;
  std::map<std::string, RuleId> variant_of;
  for (std::size_t i = 0; i < tries; ++i) {
    Generator g(seed * 1000003 + i);
    const RuleId v = i % 2 ? RuleId::CutA : RuleId::CutC;
    CutPair pair = random_cut_pair(g, v, 2 + g.pick(5));
    CutLog log;
    eliminate_cut(pair.left, pair.right, pair.cut_formula, v, &log);
    const std::size_t size = pair.left.node_count() + pair.right.node_count();
    for (const std::string& id : {log.steps.at(0).case_id, log.steps.at(0).via}) {
      if (id.empty()) continue;
      auto it = best.find(id);
      if (it == best.end() || size < it->second.first) {
        best.insert_or_assign(id, std::pair{size, pair});
        variant_of[id] = v;
      }
    }
  }
  for (const auto& t : cfg.at("targets")) {
    const std::string id = t.get<std::string>();
    auto it = best.find(id);
    if (it == best.end()) {
      std::cerr << "no random pair reaches " << id << "\n";
      continue;
    }
    const CutPair& p = it->second.second;
    const RuleId v = variant_of[id];
    const std::string fid = case_file_id(id);
    ordered_json e;
    e["id"] = fid;
    e["location"] = cfg.at("location_prefix").get<std::string>() + id;
    e["description"] = "smallest random " + std::string(rule_name(v)) + " pair whose first rewrite is " + id;
    e["kind"] = "cut";
    e["input"] = save(fid + ".in.deriv", make_cut(v, p.left, p.right, p.cut_formula));
    e["expected"] = save(fid + ".out.deriv", eliminate_cut(p.left, p.right, p.cut_formula, v));
    e["case"] = id;
    cases.push_back(std::move(e));
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: bint-mkcorpus FIGURES.json OUTDIR\n";
    return 2;
  }
  try {
    const ordered_json fig = ordered_json::parse(read_file(argv[1]));
    out_dir = argv[2];
    fs::create_directories(out_dir);

    for (const auto& c : fig.at("identity")) {
      const std::string id = c.at("id").get<std::string>();
      const Formula f = parse_formula(c.at("formula").get<std::string>());
      const auto [g, d] = parse_contexts(c.at("context").get<std::string>());
      ordered_json e = entry(c, "identity");
      e["context"] = c.at("context");
      e["formula"] = format_formula(f);
      e["inductive"] = c.at("inductive");
      e["expected"]["+"] = save(id + ".deriv", build_outline(Sequent(g.with(f), d, Polarity::Plus, f), c.at("plus").get<std::string>()));
      e["expected"]["-"] =
          save(id + ".minus.deriv", build_outline(Sequent(g, d.with(f), Polarity::Minus, f), c.at("minus").get<std::string>()));
      cases.push_back(std::move(e));
    }
    for (const char* kind : {"weaken", "unweaken", "contract", "invert"}) {
      for (const auto& c : fig.at(kind)) {
        const std::string id = c.at("id").get<std::string>();
        ordered_json e = entry(c, kind);
        for (const char* k : {"formula", "side", "which"})
          if (c.contains(k)) e[k] = c[k];
        e["input"] = save(id + ".in.deriv", outline(c.at("input")));
        if (c.at("expected").is_array()) {
          e["expected"] = ordered_json::array();
          for (std::size_t i = 0; i < c["expected"].size(); ++i)
            e["expected"].push_back(save(id + ".out" + std::to_string(i) + ".deriv", outline(c["expected"][i])));
        } else {
          e["expected"] = save(id + ".out.deriv", outline(c.at("expected")));
        }
        cases.push_back(std::move(e));
      }
    }
    for (const auto& c : fig.at("cut")) {
      const std::string id = c.at("id").get<std::string>();
      ordered_json e = entry(c, "cut");
      const RuleId v = *rule_from_name(c.at("variant").get<std::string>());
      e["input"] = save(id + ".in.deriv", make_cut(v, outline(c.at("left")), outline(c.at("right")),
                                                   parse_formula(c.at("formula").get<std::string>())));
      for (const char* k : {"case", "root_rule", "child_steps"})
        if (c.contains(k)) e[k] = c[k];
      cases.push_back(std::move(e));
    }
    random_cuts(fig.at("random_cut"));
    for (const auto& c : fig.at("prove")) {
      ordered_json e = entry(c, "prove");
      e["sequent"] = c.at("sequent");
      e["verdict"] = c.at("verdict");
      cases.push_back(std::move(e));
    }
    for (const auto& c : fig.at("check")) {
      ordered_json e = entry(c, "check");
      e["file"] = c.contains("write") ? save(c.at("file").get<std::string>(), raw(c["write"])) : c.at("file").get<std::string>();
      e["valid"] = c.at("valid");
      if (c.contains("height")) e["height"] = c["height"];
      cases.push_back(std::move(e));
    }

    ordered_json manifest;
    manifest["cases"] = std::move(cases);
    std::ofstream(out_dir / "manifest.json") << manifest.dump(2) << "\n";
    std::cout << "wrote " << manifest["cases"].size() << " cases to " << out_dir.string() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "bint-mkcorpus: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
