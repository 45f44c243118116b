#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operadforge/parser.hpp"
#include "operadforge/presets.hpp"

using namespace operadforge;

TEST_CASE("jacobi relation parses to three terms") {
  auto pres = parse_operad_presentation(R"(operad t
gen q : anti;
rel q(a,q(b,c)) + q(b,q(c,a)) + q(c,q(a,b));
)");
  REQUIRE(pres.relations.size() == 1);
  CHECK(pres.relations[0].size() == 3);
  for (const auto& term : pres.relations[0]) CHECK(term.coeff.constant_value() == Rat(1));
}

TEST_CASE("ll2 preset shape") {
  auto pres = operad_preset("ll2");
  REQUIRE(pres.generators.size() == 3);
  int comm = 0, anti = 0;
  for (const auto& g : pres.generators) {
    if (g.symmetry == Symmetry::Comm) ++comm;
    if (g.symmetry == Symmetry::Anti) ++anti;
  }
  CHECK(comm == 1);
  CHECK(anti == 2);
  CHECK(pres.relations.size() == 6);
  CHECK(pres.params == std::vector<std::string>{"h1", "h2"});
}

TEST_CASE("arity mismatch is rejected") {
  CHECK_THROWS_AS(parse_operad_presentation(R"(operad t
gen m : comm;
rel m(a,b,c);
)"),
                  ParseError);
}

TEST_CASE("undeclared generator") {
  CHECK_THROWS_AS(parse_operad_presentation(R"(operad t
gen m : comm;
rel q(a,m(b,c));
)"),
                  ParseError);
}

TEST_CASE("wrong leaf multiset") {
  CHECK_THROWS_AS(parse_operad_presentation(R"(operad t
gen m : comm;
rel m(a,m(b,b));
)"),
                  ParseError);
  CHECK_THROWS_AS(parse_operad_presentation(R"(operad t
gen m : comm;
rel m(a,m(a,b));
)"),
                  ParseError);
}

TEST_CASE("parse_element") {
  auto pres = parse_operad_presentation(R"(operad t
gen m : comm;
gen q : anti;
)");
  auto assoc = parse_element("m(m(a,b),c) - m(a,m(b,c))", pres, 3);
  REQUIRE(assoc.size() == 2);
  CHECK(assoc[1].coeff.constant_value() == Rat(-1));

  auto two = parse_element("m(a,b) + q(a,b)", pres, 2);
  CHECK(two.size() == 2);

  CHECK_THROWS_AS(parse_element("m(a,a)", pres, 2), ParseError);
  CHECK_THROWS_AS(parse_element("m(a,d)", pres, 2), ParseError);
  CHECK_THROWS_AS(parse_element("m(a,b) extra", pres, 2), ParseError);
}

TEST_CASE("coefficients with parameters") {
  auto pres = parse_operad_presentation(R"(operad t params (h1, h2)
gen m : comm;
rel 2*m(m(a,b),c) - h1*h1*m(a,m(b,c)) + (h1 + 3*h2)*m(m(a,c),b);
)");
  const auto& rel = pres.relations[0];
  REQUIRE(rel.size() == 3);
  auto vals = resolve_params(pres.params, ParamAssignment::parse("h1=2,h2=1/3"));
  CHECK(rel[0].coeff.evaluate(vals) == Rat(2));
  CHECK(rel[1].coeff.evaluate(vals) == Rat(-4));
  CHECK(rel[2].coeff.evaluate(vals) == Rat(3));
}

TEST_CASE("algebra preset text for gv(3)") {
  auto pres = algebra_preset("gv", 3);
  CHECK(pres.variables == std::vector<std::string>{"x12", "x13", "x23"});
  CHECK(pres.params == std::vector<std::string>{"h"});
  // squares plus deduplicated triangle instances
  CHECK(pres.relations.size() > 3);
}

TEST_CASE("gv2(2) preset relations") {
  auto pres = algebra_preset("gv2", 2);
  CHECK(pres.variables == std::vector<std::string>{"x12", "y12"});
  CHECK(pres.relations.size() == 3);
}

TEST_CASE("malformed exponent") {
  AlgebraPresentation shell;
  shell.variables = {"x"};
  CHECK_THROWS_AS(parse_algebra_polynomial("x^", shell), ParseError);
  CHECK_THROWS_AS(parse_algebra_polynomial("x^y", shell), ParseError);
  CHECK(parse_algebra_polynomial("x^2 - x", shell).terms.size() == 2);
}

TEST_CASE("algebra parse errors") {
  CHECK_THROWS_AS(parse_algebra_presentation(R"(algebra t
var x;
rel x*z;
)"),
                  ParseError);
  CHECK_THROWS_AS(parse_algebra_presentation(R"(algebra t
var x, x;
)"),
                  std::invalid_argument);
}

TEST_CASE("round trip on the whole catalog") {
  for (const auto& name : operad_preset_names()) {
    auto pres = parse_operad_presentation(operad_preset_text(name));
    std::string printed = print_operad_presentation(pres);
    auto reparsed = parse_operad_presentation(printed);
    CHECK(print_operad_presentation(reparsed) == printed);
    CHECK(reparsed.generators == pres.generators);
    CHECK(reparsed.relations == pres.relations);
  }
  for (const auto& name : algebra_preset_names()) {
    for (int n = 2; n <= 4; ++n) {
      auto pres = parse_algebra_presentation(algebra_preset_text(name, n));
      std::string printed = print_algebra_presentation(pres);
      auto reparsed = parse_algebra_presentation(printed);
      CHECK(print_algebra_presentation(reparsed) == printed);
      CHECK(reparsed.variables == pres.variables);
    }
  }
}

TEST_CASE("unknown presets are rejected") {
  CHECK_THROWS_AS(operad_preset("nope"), std::invalid_argument);
  CHECK_THROWS_AS(algebra_preset("nope", 3), std::invalid_argument);
  CHECK(is_operad_preset("ll2"));
  CHECK_FALSE(is_operad_preset("gv2"));
  CHECK(is_algebra_preset("gv2"));
}

TEST_CASE("relation terms always cover the letters") {
  for (const auto& name : operad_preset_names()) {
    auto pres = operad_preset(name);
    for (const auto& rel : pres.relations)
      for (const auto& term : rel) {
        std::vector<int> seen(3, 0);
        for (auto c : term.tree.code)
          if (c > 0) ++seen[static_cast<std::size_t>(c - 1)];
        CHECK(seen == std::vector<int>{1, 1, 1});
      }
  }
}

TEST_CASE("element printing round trip") {
  auto pres = operad_preset("ll2");
  auto el = parse_element("m(a,b) - 2*lb(a,b) + h1*sb(a,b)", pres, 2);
  std::string printed = print_element(el, pres);
  auto reparsed = parse_element(printed, pres, 2);
  CHECK(print_element(reparsed, pres) == printed);
}
