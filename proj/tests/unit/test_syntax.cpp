#include <doctest.h>

#include "bint/generator.hpp"
#include "helpers.hpp"

using namespace bint;
using th::f;

TEST_SUITE("syntax") {
  TEST_CASE("parse examples") {
    CHECK(f("p") == Formula::atom("p"));
    CHECK(f("p /\\ q -> F") == Formula::imp(Formula::conj(th::p(), th::q()), Formula::bottom()));
    const Formula a = Formula::atom("a"), b = Formula::atom("b"), c = Formula::atom("c");
    CHECK(f("a -< b -< c") == Formula::coimp(a, Formula::coimp(b, c)));
    CHECK(f("a -> b -> c") == Formula::imp(a, Formula::imp(b, c)));
    CHECK(f("T") == Formula::top());
    CHECK(f("  ( ( p ) ) ") == th::p());
    CHECK(f("p_1") == Formula::atom("p_1"));
    CHECK_THROWS_AS(f("p'"), ParseError);
  }

  TEST_CASE("precedence and associativity") {
    const Formula p = th::p(), q = th::q(), r = th::r();
    CHECK(f("p \\/ q /\\ r") == Formula::disj(p, Formula::conj(q, r)));
    CHECK(f("p /\\ q /\\ r") == Formula::conj(Formula::conj(p, q), r));
    CHECK(f("p \\/ q \\/ r") == Formula::disj(Formula::disj(p, q), r));
    CHECK(f("p \\/ q -> r") == Formula::imp(Formula::disj(p, q), r));
    CHECK(f("p -< q \\/ r") == Formula::coimp(p, Formula::disj(q, r)));
    CHECK(f("(p -> q) -< r") == Formula::coimp(Formula::imp(p, q), r));
    CHECK(f("p -> (q -< r)") == Formula::imp(p, Formula::coimp(q, r)));
  }

  TEST_CASE("format examples") {
    CHECK(format_formula(Formula::bottom()) == "F");
    CHECK(format_formula(Formula::imp(th::p(), th::p())) == "p -> p");
    CHECK(format_formula(Formula::conj(Formula::disj(th::p(), th::q()), th::r())) == "(p \\/ q) /\\ r");
    CHECK(format_formula(Formula::conj(th::p(), Formula::conj(th::q(), th::r()))) == "p /\\ (q /\\ r)");
    CHECK(format_formula(Formula::imp(Formula::imp(th::p(), th::q()), th::r())) == "(p -> q) -> r");
    CHECK(format_formula(Formula::imp(th::p(), Formula::coimp(th::q(), th::r()))) == "p -> (q -< r)");
    CHECK(format_formula(f("a -< b -< c")) == "a -< b -< c");
  }

  TEST_CASE("weight") {
    CHECK(Formula::bottom().weight() == 0);
    CHECK(Formula::top().weight() == 0);
    CHECK(th::p().weight() == 1);
    CHECK(f("p /\\ (q -> F)").weight() == 4);
    CHECK(f("F /\\ F").weight() == 1);
    CHECK(f("(p -< q) \\/ T").weight() == 4);
  }

  TEST_CASE("parse errors carry positions") {
    auto error_at = [](std::string_view text) -> std::pair<std::size_t, std::string> {
      try {
        parse_formula(text);
      } catch (const ParseError& e) {
        return {e.position(), e.reason()};
      }
      return {0, "no error"};
    };
    CHECK(error_at("p -> q -< r").second.find("mixed") != std::string::npos);
    CHECK(error_at("p -< q -> r").second.find("mixed") != std::string::npos);
    CHECK(error_at("(p").second == "unbalanced '('");
    CHECK(error_at("p)").second == "unbalanced ')'");
    CHECK(error_at("p $ q") == std::pair<std::size_t, std::string>{2, "unknown token '$'"});
    CHECK(error_at("p /\\") == std::pair<std::size_t, std::string>{2, "dangling operator '/\\'"});
    CHECK(error_at("-> p").second == "dangling operator '->'");
    CHECK(error_at("p /\\ /\\ q").second == "dangling operator '/\\'");
    CHECK(error_at("(p ->)") == std::pair<std::size_t, std::string>{3, "dangling operator '->'"});
    CHECK_THROWS_AS(parse_formula(""), ParseError);
    CHECK_THROWS_WITH(parse_formula("p $ q"), "parse error at column 3: unknown token '$'");
  }

  TEST_CASE("ordering and hashing") {
    CHECK(th::p() < Formula::bottom());
    CHECK(Formula::bottom() < Formula::top());
    CHECK(Formula::top() < f("p /\\ q"));
    CHECK(f("p /\\ q") < f("p \\/ q"));
    CHECK(f("p \\/ q") < f("p -> q"));
    CHECK(f("p -> q") < f("p -< q"));
    CHECK(f("p") < f("q"));
    CHECK(std::hash<Formula>{}(f("p -> q")) == std::hash<Formula>{}(Formula::imp(th::p(), th::q())));
  }

  TEST_CASE("latex") {
    CHECK(latex_formula(f("p -< q")) == "p \\Yleft q");
    CHECK(latex_formula(f("F -> T")) == "\\bot \\rightarrow \\top");
    CHECK(latex_formula(f("(p /\\ q) \\/ r")) == "(p \\wedge q) \\vee r");
  }

  TEST_CASE("random formulas round-trip") {
    Generator g(7);
    for (int i = 0; i < 500; ++i) {
      const Formula x = g.formula(1 + g.pick(6));
      const std::string text = format_formula(x);
      CHECK(parse_formula(text) == x);
      CHECK(format_formula(parse_formula(text)) == text);
    }
  }
}

TEST_SUITE("sequent") {
  TEST_CASE("parse and canonical print") {
    const Sequent s = th::seq("q, p, p ; r |-- s");
    CHECK(s.gamma.count(th::p()) == 2);
    CHECK(s.gamma.count(th::q()) == 1);
    CHECK(s.delta.count(th::r()) == 1);
    CHECK(s.polarity == Polarity::Minus);
    CHECK(format_sequent(s) == "p, p, q ; r |-- s");
    CHECK(format_sequent(th::seq(";|-+p")) == "; |-+ p");
    CHECK(format_sequent(th::seq(" ; p |-+ q")) == "; p |-+ q");
    CHECK(format_sequent(th::seq("p -> q ; |-+ q")) == "p -> q ; |-+ q");
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(th::seq("p |-+ p"), ParseError);
    CHECK_THROWS_AS(th::seq("p ; |- p"), ParseError);
    CHECK_THROWS_AS(th::seq("p ; q"), ParseError);
    CHECK_THROWS_AS(th::seq("p, ; |-+ p"), ParseError);
  }

  TEST_CASE("context arithmetic") {
    const Context a{th::p(), th::p(), th::q()};
    const Context b{th::p()};
    CHECK((a - b) == Context{th::p(), th::q()});
    CHECK((a + b).count(th::p()) == 3);
    CHECK(a.size() == 3);
    CHECK(a.distinct() == 2);
    CHECK(a.includes(b));
    CHECK_FALSE(b.includes(a));
    CHECK(a.support() == Context{th::p(), th::q()});
    Context c = a;
    CHECK(c.remove(th::q()));
    CHECK_FALSE(c.remove(th::r()));
  }

  TEST_CASE("latex sequent") {
    CHECK(latex_sequent(th::seq("; |-+ p")) == "(\\varnothing; \\varnothing) \\vdash^{+} p");
    CHECK(latex_sequent(th::seq("p ; q |-- r")) == "(p; q) \\vdash^{-} r");
  }
}
