#include <doctest.h>

#include "bint/checker.hpp"
#include "bint/cut.hpp"
#include "bint/generator.hpp"
#include "bint/io.hpp"
#include "helpers.hpp"

using namespace bint;
using th::seq;

TEST_SUITE("io") {
  TEST_CASE("file layout") {
    const Derivation d = make_node(RuleId::ImpRPlus, seq("; |-+ p -> p"), {Derivation(seq("p ; |-+ p"), RuleId::RfPlus)});
    CHECK(write_derivation(d) ==
          "{\n"
          "  \"rule\": \"ImpRPlus\",\n"
          "  \"conclusion\": \"; |-+ p -> p\",\n"
          "  \"premises\": [\n"
          "    {\n"
          "      \"rule\": \"RfPlus\",\n"
          "      \"conclusion\": \"p ; |-+ p\",\n"
          "      \"premises\": []\n"
          "    }\n"
          "  ]\n"
          "}\n");
  }

  TEST_CASE("cut annotations survive") {
    const Derivation ax(seq("p ; |-+ p"), RuleId::RfPlus);
    const Derivation cut = make_cut(RuleId::CutA, ax, Derivation(seq("p, q ; r |-+ q"), RuleId::RfPlus), th::p());
    const std::string text = write_derivation(cut);
    CHECK(text.find("\"cut_formula\": \"p\"") != std::string::npos);
    CHECK(text.find("\"gamma_prime\": \"q\"") != std::string::npos);
    const Derivation back = read_derivation(text);
    CHECK(back == cut);
    CHECK(write_derivation(back) == text);
  }

  TEST_CASE("random round-trips") {
    Generator g(77);
    for (int i = 0; i < 100; ++i) {
      const Derivation d = g.any(1 + g.pick(15));
      const std::string text = write_derivation(d);
      const Derivation back = read_derivation(text);
      CHECK(back == d);
      CHECK(write_derivation(back) == text);
    }
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(read_derivation("{"), FormatError);
    CHECK_THROWS_AS(read_derivation("[]"), FormatError);
    CHECK_THROWS_AS(read_derivation(R"({"rule": "Nope", "conclusion": "p ; |-+ p", "premises": []})"), FormatError);
    CHECK_THROWS_AS(read_derivation(R"({"rule": "RfPlus", "conclusion": "p |-+ p", "premises": []})"), FormatError);
    CHECK_THROWS_AS(read_derivation(R"({"rule": "RfPlus", "premises": []})"), FormatError);
  }

  TEST_CASE("reading does not validate") {
    const Derivation d = read_derivation(R"({"rule": "RfPlus", "conclusion": "; |-+ p", "premises": []})");
    CHECK_FALSE(check_derivation(d).valid);
  }

  TEST_CASE("text tree") {
    const Derivation d = make_node(RuleId::ImpRPlus, seq("; |-+ p -> p"), {Derivation(seq("p ; |-+ p"), RuleId::RfPlus)});
    CHECK(format_tree(d) == "ImpRPlus  ; |-+ p -> p\n  RfPlus  p ; |-+ p\n");
  }

  TEST_CASE("latex tree") {
    const Derivation d = make_node(RuleId::ImpRPlus, seq("; |-+ p -> p"), {Derivation(seq("p ; |-+ p"), RuleId::RfPlus)});
    CHECK(latex_tree(d) ==
          "\\infer[\\scriptstyle {\\rightarrow} R^{+}]{(\\varnothing; \\varnothing) \\vdash^{+} p \\rightarrow p}{\n"
          "  \\infer[\\scriptstyle Rf^{+}]{(p; \\varnothing) \\vdash^{+} p}{}\n"
          "}\n");
  }
}
