#include "bint/cli.hpp"

#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "bint/checker.hpp"
#include "bint/corpus.hpp"
#include "bint/cut.hpp"
#include "bint/io.hpp"
#include "bint/search.hpp"
#include "bint/transform.hpp"

#ifndef BINT_CORPUS_DIR
#define BINT_CORPUS_DIR "corpus"
#endif

namespace bint {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t max_depth = 50;
  bool no_loop_check = false;
  bool exhaustive = false;
  bool trace = false;
  bool latex = false;
  std::string format = "text";
  std::optional<std::size_t> premise;
  std::string dir;
};

Side parse_side(const std::string& s) {
  if (s == "a") return Side::A;
  if (s == "c") return Side::C;
  throw UsageError("side must be 'a' or 'c'");
}

Polarity parse_polarity(const std::string& s) {
  if (s == "+") return Polarity::Plus;
  if (s == "-") return Polarity::Minus;
  throw UsageError("polarity must be '+' or '-'");
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  void emit(const Derivation& d) {
    if (o_.format == "data") {
      out_ << write_derivation(d);
    } else if (o_.latex) {
      out_ << latex_tree(d);
    } else {
      out_ << format_tree(d);
    }
  }

  void emit_all(const std::vector<Derivation>& ds) {
    if (o_.premise) {
      if (*o_.premise >= ds.size()) throw UsageError("--premise out of range");
      emit(ds[*o_.premise]);
      return;
    }
    if (o_.format == "data" && ds.size() > 1) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& d : ds) arr.push_back(to_json(d));
      out_ << arr.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (ds.size() > 1 && o_.format != "data") out_ << "premise " << i << ":\n";
      emit(ds[i]);
    }
  }

  int check(const std::string& file) {
    const Derivation d = load_derivation(file);
    const CheckReport r = check_derivation(d);
    if (o_.format == "data") {
      nlohmann::ordered_json j;
      j["valid"] = r.valid;
      j["height"] = r.height;
      j["cut_count"] = r.cut_count;
      if (r.first_violation) j["violation"] = *r.first_violation;
      out_ << j.dump(2) << "\n";
    } else if (r.valid) {
      out_ << "valid, height " << r.height << ", " << r.cut_count << (r.cut_count == 1 ? " cut" : " cuts") << "\n";
    } else {
      out_ << "invalid " << *r.first_violation << "\n";
    }
    return r.valid ? 0 : 1;
  }

  int prove_cmd(const std::string& text) {
    const Sequent s = parse_sequent(text);
    SearchConfig cfg;
    cfg.max_depth = o_.max_depth;
    cfg.loop_check = !o_.no_loop_check;
    cfg.exhaustive = o_.exhaustive;
    if (const char* seed = std::getenv("BINT_SEED")) cfg.seed = std::strtoull(seed, nullptr, 10);
    const SearchOutcome r = prove(s, cfg);
    if (r.proof) {
      if (o_.format != "data") out_ << "Proved, height " << r.proof->height() << "\n";
      emit(*r.proof);
      return 0;
    }
    if (o_.format == "data") {
      nlohmann::ordered_json j;
      j["verdict"] = std::string(verdict_name(r.verdict));
      out_ << j.dump(2) << "\n";
    } else {
      out_ << verdict_name(r.verdict) << "\n";
    }
    return 1;
  }

  int identity(const std::string& ctx, const std::string& formula, const std::string& pol) {
    const auto [g, d] = parse_contexts(ctx);
    emit(derive_identity(g, d, parse_formula(formula), parse_polarity(pol)));
    return 0;
  }

  int weaken_cmd(const std::string& file, const std::string& formula, const std::string& side) {
    emit(weaken(load_derivation(file), parse_formula(formula), parse_side(side)));
    return 0;
  }

  int contract_cmd(const std::string& file, const std::string& formula, const std::string& side) {
    emit(contract(load_derivation(file), parse_formula(formula), parse_side(side)));
    return 0;
  }

  int invert_cmd(const std::string& file, const std::string& formula, const std::string& side) {
    emit_all(invert(load_derivation(file), parse_side(side), parse_formula(formula)));
    return 0;
  }

  int cut_cmd(const std::vector<std::string>& args) {
    CutLog log;
    Derivation result = [&] {
      if (args.size() == 1) return eliminate_cuts(load_derivation(args[0]), &log);
      if (args.size() != 4) throw UsageError("cut-eliminate takes LEFT RIGHT D a|c, or one file with cuts");
      const RuleId v = parse_side(args[3]) == Side::A ? RuleId::CutA : RuleId::CutC;
      return eliminate_cut(load_derivation(args[0]), load_derivation(args[1]), parse_formula(args[2]), v, &log);
    }();
    emit(result);
    if (o_.trace) {
      if (o_.format == "data") {
        err_ << log.trace();
      } else {
        out_ << "trace:\n" << log.trace();
      }
    }
    return 0;
  }

  int golden() {
    const std::string dir = !o_.dir.empty()                    ? o_.dir
                            : std::getenv("BINT_CORPUS") != nullptr ? std::string(std::getenv("BINT_CORPUS"))
                                                                    : std::string(BINT_CORPUS_DIR);
    const auto cases = load_manifest(dir);
    const auto results = run_all(cases, dir);
    std::size_t failed = 0;
    for (const auto& r : results) {
      if (r.passed) {
        out_ << "PASS " << r.id << "\n";
      } else {
        ++failed;
        out_ << "FAIL " << r.id << ": " << r.report << "\n";
      }
    }
    const Coverage cov = coverage(cases, dir);
    out_ << results.size() - failed << "/" << results.size() << " golden cases pass\n" << cov.report();
    return failed == 0 && cov.complete() ? 0 : 1;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bint: derivations in a bi-intuitionistic sequent calculus"};
  app.name("bint");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--max-depth", o.max_depth, "height bound for proof search")->check(CLI::PositiveNumber);
  app.add_flag("--no-loop-check", o.no_loop_check, "disable the loop check in proof search");
  app.add_flag("--exhaustive", o.exhaustive, "search for a proof of least height");
  app.add_flag("--trace", o.trace, "print the cut-elimination case log");
  app.add_flag("--latex", o.latex, "print derivations as \\infer markup");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "data"}));
  app.add_option("--premise", o.premise, "print only this result of invert");

  std::string file, seq, ctx, formula, side, pol;
  std::vector<std::string> cut_args;
  std::function<int(Runner&)> action;

  auto* check = app.add_subcommand("check", "validate a derivation file");
  check->add_option("FILE", file)->required();
  check->callback([&] { action = [&](Runner& r) { return r.check(file); }; });

  auto* prove_sc = app.add_subcommand("prove", "search for a cut-free derivation");
  prove_sc->add_option("SEQ", seq)->required();
  prove_sc->callback([&] { action = [&](Runner& r) { return r.prove_cmd(seq); }; });

  auto* ident = app.add_subcommand("identity", "derive (G, C; D) |-+ C or (G; D, C) |-- C");
  ident->add_option("CONTEXT", ctx, "\"Gamma ; Delta\"")->required();
  ident->add_option("FORMULA", formula)->required();
  ident->add_option("POLARITY", pol, "+ or -")->required();
  ident->callback([&] { action = [&](Runner& r) { return r.identity(ctx, formula, pol); }; });

  for (const char* name : {"weaken", "contract", "invert"}) {
    auto* sc = app.add_subcommand(name, std::string(name) + " a derivation on one side");
    sc->add_option("FILE", file)->required();
    sc->add_option("FORMULA", formula)->required();
    sc->add_option("SIDE", side, "a or c")->required();
    const std::string n = name;
    sc->callback([&, n] {
      action = [&, n](Runner& r) {
        if (n == "weaken") return r.weaken_cmd(file, formula, side);
        if (n == "contract") return r.contract_cmd(file, formula, side);
        return r.invert_cmd(file, formula, side);
      };
    });
  }

  auto* cut = app.add_subcommand("cut-eliminate", "eliminate a cut");
  cut->add_option("ARGS", cut_args, "LEFT RIGHT D a|c, or one file containing cuts")->required();
  cut->callback([&] { action = [&](Runner& r) { return r.cut_cmd(cut_args); }; });

  auto* gold = app.add_subcommand("golden", "run the golden corpus");
  gold->add_option("--dir", o.dir, "corpus directory");
  gold->callback([&] { action = [&](Runner& r) { return r.golden(); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "bint: " << e.what() << "\n" << "run 'bint --help' for usage\n";
    return 2;
  }

  Runner runner(o, out, err);
  try {
    return action(runner);
  } catch (const UsageError& e) {
    err << "bint: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "bint: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "bint: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "bint: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bint
