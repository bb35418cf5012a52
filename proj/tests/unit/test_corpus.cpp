#include <doctest.h>

#include "bint/corpus.hpp"
#include "bint/io.hpp"
#include "helpers.hpp"

using namespace bint;
using th::seq;

TEST_SUITE("corpus") {
  TEST_CASE("manifest loads and every case passes") {
    const auto cases = load_manifest(BINT_CORPUS_DIR);
    CHECK(cases.size() >= 60);
    for (const auto& r : run_all(cases, BINT_CORPUS_DIR)) CHECK_MESSAGE(r.passed, r.id, ": ", r.report);
  }

  TEST_CASE("coverage is complete") {
    const auto cases = load_manifest(BINT_CORPUS_DIR);
    const Coverage cov = coverage(cases, BINT_CORPUS_DIR);
    CHECK_MESSAGE(cov.complete(), cov.report());
    CHECK(cov.cut_cases.size() == cut_case_ids().size());
  }

  TEST_CASE("named cases exist") {
    const auto cases = load_manifest(BINT_CORPUS_DIR);
    for (const char* id : {"L3.1.3-bot-and-bot", "L3.1.3-top-yleft-bot", "case-5.3-cuta", "thm3.2.1-andRminus1",
                           "case-4.16-shape"}) {
      bool found = false;
      for (const auto& c : cases) found = found || c.id == id;
      CHECK_MESSAGE(found, id);
    }
  }

  TEST_CASE("a wrong expectation is reported") {
    GoldenCase c;
    c.id = "tampered";
    c.kind = "prove";
    c.spec = nlohmann::ordered_json::parse(R"({"sequent": "; |-+ p -> p", "verdict": "Refuted"})");
    const GoldenResult r = run_golden(c, BINT_CORPUS_DIR);
    CHECK_FALSE(r.passed);
    CHECK(r.report == "Proved, expected Refuted");
  }

  TEST_CASE("case ids") {
    CHECK(cut_case_ids().size() == 36);
    CHECK(cut_case_ids().front() == "-1.1-");
    CHECK(cut_case_ids().back() == "-5.4-");
    CHECK(main_case_id("-1.2-(d)") == "-1.2-");
    CHECK(main_case_id("-4.10.1-") == "-4.10.1-");
  }

  TEST_CASE("outlines") {
    const Derivation d = build_outline(seq("; |-+ p -> p"), "ImpRPlus(RfPlus)");
    CHECK(d.height() == 1);
    CHECK_THROWS_AS(build_outline(seq("; |-+ p -> p"), "ImpRPlus"), std::invalid_argument);
    CHECK_THROWS_AS(build_outline(seq("; |-+ p -> p"), "ImpRPlus(BotLa)"), std::invalid_argument);
    CHECK_THROWS_AS(build_outline(seq("p /\\ q, r /\\ s ; |-+ p"), "AndLa(RfPlus)"), std::invalid_argument);
    CHECK_THROWS_AS(build_outline(seq("; |-+ p"), "Bogus"), std::invalid_argument);
    CHECK_THROWS_AS(build_outline(seq("; |-+ p -> p"), "ImpRPlus(RfPlus"), std::invalid_argument);
  }

  TEST_CASE("first difference") {
    const Derivation a = build_outline(seq("T ; |-+ T /\\ T"), "AndRPlus(TopRPlus, TopRPlus)");
    const Derivation b = build_outline(seq("T ; |-+ T /\\ T"), "AndRPlus(TopRPlus, TopRPlus)");
    CHECK(first_difference(a, b).empty());
    const Derivation c(a.conclusion(), RuleId::AndRPlus, {a.premise(0), Derivation(seq("T ; |-+ T"), RuleId::RfPlus)});
    CHECK(first_difference(c, a) == "at /1: got `RfPlus T ; |-+ T`, expected `TopRPlus T ; |-+ T`");
  }
}
