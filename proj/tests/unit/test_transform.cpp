#include <doctest.h>

#include "bint/checker.hpp"
#include "bint/corpus.hpp"
#include "bint/duality.hpp"
#include "bint/generator.hpp"
#include "bint/transform.hpp"
#include "helpers.hpp"

using namespace bint;
using th::f;
using th::seq;

namespace {

void require_good(const Derivation& d) {
  const CheckReport r = check_derivation(d);
  CHECK_MESSAGE(r.valid, r.first_violation.value_or(""));
  CHECK(r.cut_count == 0);
}

}  // namespace

TEST_SUITE("identity") {
  TEST_CASE("atom and constants") {
    const Derivation a = derive_identity({}, {}, th::p(), Polarity::Plus);
    CHECK(a.rule() == RuleId::RfPlus);
    CHECK(a.conclusion() == seq("p ; |-+ p"));
    CHECK(derive_identity({}, {}, Formula::bottom(), Polarity::Plus).rule() == RuleId::BotLa);
    CHECK(derive_identity({}, {}, Formula::bottom(), Polarity::Minus).rule() == RuleId::BotRMinus);
    CHECK(derive_identity({}, {}, Formula::top(), Polarity::Plus).rule() == RuleId::TopRPlus);
    CHECK(derive_identity({}, {}, Formula::top(), Polarity::Minus).rule() == RuleId::TopLc);
  }

  TEST_CASE("F /\\ F at plus") {
    const Derivation d = derive_identity({}, {}, f("F /\\ F"), Polarity::Plus);
    CHECK(d.height() == 1);
    CHECK(d.rule() == RuleId::AndLa);
    CHECK(d.premise(0).rule() == RuleId::BotLa);
    CHECK(d.premise(0).conclusion() == seq("F, F ; |-+ F /\\ F"));
  }

  TEST_CASE("p /\\ q at plus has height 2") {
    const Derivation d = derive_identity({}, {}, f("p /\\ q"), Polarity::Plus);
    CHECK(d.height() == 2);
    CHECK(same_shape(d, build_outline(seq("p /\\ q ; |-+ p /\\ q"), "AndRPlus(AndLa(RfPlus), AndLa(RfPlus))")));
  }

  TEST_CASE("contexts are carried") {
    const Derivation d = derive_identity(Context{th::r()}, Context{th::q()}, f("p -> q"), Polarity::Minus);
    CHECK(d.conclusion() == seq("r ; q, p -> q |-- p -> q"));
    require_good(d);
  }

  TEST_CASE("larger formulas") {
    Generator g(11);
    for (int i = 0; i < 100; ++i) {
      const Formula c = g.formula(1 + g.pick(6));
      for (Polarity pol : {Polarity::Plus, Polarity::Minus}) {
        const Derivation d = derive_identity({}, {}, c, pol);
        require_good(d);
        CHECK(d.conclusion().succedent == c);
      }
    }
  }
}

TEST_SUITE("weakening") {
  TEST_CASE("axiom") {
    const Derivation d = weaken(Derivation(seq("p ; |-+ p"), RuleId::RfPlus), th::q(), Side::A);
    CHECK(d.rule() == RuleId::RfPlus);
    CHECK(d.conclusion() == seq("p, q ; |-+ p"));
    CHECK(d.height() == 0);
  }

  TEST_CASE("two-premise rule on side c") {
    const Derivation in = derive_identity({}, {}, f("T /\\ T"), Polarity::Plus);
    const Derivation out = weaken(in, th::r(), Side::C);
    CHECK(same_shape(out, build_outline(seq("T /\\ T ; r |-+ T /\\ T"), "AndRPlus(TopRPlus, TopRPlus)")));
    CHECK(out.height() == in.height());
  }

  TEST_CASE("weaken by T then remove it") {
    Generator g(3);
    for (int i = 0; i < 50; ++i) {
      const Derivation d = g.any(2 + g.pick(10));
      const Derivation w = weaken(d, Formula::top(), Side::A);
      const Derivation back = unweaken_special(w, Unweaken::TopInGamma);
      CHECK(back.conclusion() == d.conclusion());
      require_good(back);
      CHECK(back.height() <= w.height());
    }
  }

  TEST_CASE("weaken_all matches repeated weaken") {
    Generator g(5);
    for (int i = 0; i < 30; ++i) {
      const Derivation d = g.any(1 + g.pick(10));
      const Context gx{th::p(), f("q -> r")};
      const Context dx{f("p -< q"), f("p -< q")};
      Derivation step = d;
      for (const auto& x : gx.elements()) step = weaken(step, x, Side::A);
      for (const auto& x : dx.elements()) step = weaken(step, x, Side::C);
      CHECK(same_shape(weaken_all(d, gx, dx), step));
    }
  }

  TEST_CASE("rejects invalid input") {
    const Derivation bad(seq("; |-+ p"), RuleId::RfPlus);
    CHECK_THROWS_AS(weaken(bad, th::q(), Side::A), TransformError);
  }
}

TEST_SUITE("unweaken") {
  TEST_CASE("T right rule") {
    const Derivation d = unweaken_special(Derivation(seq("T ; |-+ T"), RuleId::TopRPlus), Unweaken::TopInGamma);
    CHECK(d.rule() == RuleId::TopRPlus);
    CHECK(d.conclusion() == seq("; |-+ T"));
  }

  TEST_CASE("implication left rule on side c") {
    const Derivation in = build_outline(seq("T ; p -> q |-- q"), "ImpLc(RfMinus)");
    const Derivation out = unweaken_special(in, Unweaken::TopInGamma);
    CHECK(out.conclusion() == seq("; p -> q |-- q"));
    require_good(out);
  }

  TEST_CASE("missing constant") {
    CHECK_THROWS_AS(unweaken_special(Derivation(seq("p ; |-+ p"), RuleId::RfPlus), Unweaken::TopInGamma), TransformError);
    CHECK_THROWS_AS(unweaken_special(Derivation(seq("p ; |-+ p"), RuleId::RfPlus), Unweaken::BotInDelta), TransformError);
  }
}

TEST_SUITE("inversion") {
  TEST_CASE("case labels") {
    CHECK(inversion_case(Formula::Kind::And, Side::A) == "i1");
    CHECK(inversion_case(Formula::Kind::And, Side::C) == "i2");
    CHECK(inversion_case(Formula::Kind::Or, Side::A) == "ii1");
    CHECK(inversion_case(Formula::Kind::Or, Side::C) == "ii2");
    CHECK(inversion_case(Formula::Kind::Imp, Side::A) == "iii1");
    CHECK(inversion_case(Formula::Kind::Imp, Side::C) == "iii2");
    CHECK(inversion_case(Formula::Kind::Coimp, Side::A) == "iv1");
    CHECK(inversion_case(Formula::Kind::Coimp, Side::C) == "iv2");
  }

  TEST_CASE("principal at the root gives the premise") {
    const Derivation d = build_outline(seq("p /\\ q ; |-+ p /\\ q"), "AndLa(AndRPlus(RfPlus, RfPlus))");
    const auto out = invert(d, Side::A, f("p /\\ q"));
    REQUIRE(out.size() == 1);
    CHECK(out[0] == d.premise(0));
  }

  TEST_CASE("disjunction in the counterassumptions") {
    const Derivation d = derive_identity({}, {}, f("p \\/ q"), Polarity::Minus);
    const auto out = invert(d, Side::C, f("p \\/ q"));
    REQUIRE(out.size() == 1);
    CHECK(out[0].conclusion() == seq("; p, q |-- p \\/ q"));
    require_good(out[0]);
    CHECK(out[0].height() <= d.height());
  }

  TEST_CASE("targets") {
    const auto t = inversion_targets(seq("p -> q ; |-+ r"), Side::A, f("p -> q"));
    REQUIRE(t.size() == 1);
    CHECK(t[0] == seq("q ; |-+ r"));
    const auto t2 = inversion_targets(seq("; p /\\ q |-+ r"), Side::C, f("p /\\ q"));
    REQUIRE(t2.size() == 2);
    CHECK(t2[0] == seq("; p |-+ r"));
    CHECK(t2[1] == seq("; q |-+ r"));
  }

  TEST_CASE("target must be present and compound") {
    const Derivation d(seq("p ; |-+ p"), RuleId::RfPlus);
    CHECK_THROWS_AS(invert(d, Side::A, f("p /\\ q")), TransformError);
    CHECK_THROWS_AS(invert(d, Side::A, th::p()), TransformError);
  }
}

TEST_SUITE("contraction") {
  TEST_CASE("axiom") {
    const Derivation d = contract(Derivation(seq("p, p ; |-+ p"), RuleId::RfPlus), th::p(), Side::A);
    CHECK(d.rule() == RuleId::RfPlus);
    CHECK(d.conclusion() == seq("p ; |-+ p"));
  }

  TEST_CASE("conjunction on side c") {
    const Derivation d = build_outline(seq("; r, p /\\ q, p /\\ q |-- r"), "AndLc[p /\\ q](RfMinus, RfMinus)");
    const Derivation out = contract(d, f("p /\\ q"), Side::C);
    CHECK(out.conclusion() == seq("; r, p /\\ q |-- r"));
    require_good(out);
    CHECK(out.height() <= d.height());
  }

  TEST_CASE("needs two copies") {
    CHECK_THROWS_AS(contract(Derivation(seq("p ; |-+ p"), RuleId::RfPlus), th::p(), Side::A), TransformError);
  }
}

TEST_SUITE("dual derivations") {
  TEST_CASE("random derivations dualize with equal height") {
    Generator g(99);
    for (int i = 0; i < 100; ++i) {
      const Derivation d = g.any(1 + g.pick(14));
      const Derivation e = dual(d);
      require_good(e);
      CHECK(e.height() == d.height());
      CHECK(e.conclusion() == dual(d.conclusion()));
      CHECK(dual(e) == d);
    }
  }
}
