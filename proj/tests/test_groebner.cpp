#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operadforge/groebner.hpp"
#include "operadforge/parser.hpp"
#include "operadforge/presets.hpp"

using namespace operadforge;

namespace {

AlgebraPresentation tiny(const std::vector<std::string>& vars,
                         const std::vector<std::string>& rels,
                         const std::vector<std::string>& params = {}) {
  AlgebraPresentation p;
  p.name = "t";
  p.params = params;
  p.variables = vars;
  for (const auto& r : rels) p.relations.push_back(parse_algebra_polynomial(r, p));
  p.validate();
  return p;
}

}  // namespace

TEST_CASE("monomial order comparisons") {
  MonomialOrder drl{MonomialOrder::Kind::DegRevLex};
  MonomialOrder lex{MonomialOrder::Kind::Lex};
  // variables v0 < v1 < v2
  CommMonomial a(3), b(3);
  // v2^2*v0 vs v1^2*v2 (degree 3 both)
  a.exps = {1, 0, 2};
  b.exps = {0, 2, 1};
  // degrevlex: first differing index 0: a has larger exponent there, so a < b
  CHECK(drl.less(a, b));
  // lex from the largest variable: index 2: a has 2 > 1, so b < a
  CHECK(lex.less(b, a));
  CommMonomial c(3);
  c.exps = {3, 0, 0};
  // same degree; at index 0 the pure power has the larger exponent, so it
  // is the smaller monomial in degrevlex
  CHECK(drl.less(c, a));
  CHECK(drl.less(c, b));
}

TEST_CASE("s-polynomial cancels leading terms") {
  MonomialOrder ord;
  auto p = tiny({"x", "y"}, {"x^2 + y", "x*y + x"});
  auto vals = resolve_params(p.params, ParamAssignment{});
  auto f = p.relations[0].specialize(vals, ord);
  auto g = p.relations[1].specialize(vals, ord);
  auto s = s_polynomial(f, g);
  // S = y*f - x*g = y^2 - x^2
  CHECK(s.size() == 2);
  CHECK(poly_is_zero(s_polynomial(f, f)));
}

TEST_CASE("buchberger on a one-variable ideal") {
  auto gb = buchberger(tiny({"x"}, {"x^2 - x"}), ParamAssignment{}, MonomialOrder{});
  REQUIRE(gb.polys.size() == 1);
  auto d = algebra_dimension(gb);
  REQUIRE(d.has_value());
  CHECK(*d == 2);
}

TEST_CASE("buchberger classic example") {
  // <x^2 - y, x^3 - x> has the reduced basis {x^2 - y, xy - x, y^2 - y}
  auto gb = buchberger(tiny({"x", "y"}, {"x^2 - y", "x^3 - x"}), ParamAssignment{},
                       MonomialOrder{});
  CHECK(gb.polys.size() == 3);
  auto d = algebra_dimension(gb);
  REQUIRE(d.has_value());
  CHECK(*d == 3);
  // every S-polynomial reduces to zero
  for (std::size_t i = 0; i < gb.polys.size(); ++i)
    for (std::size_t j = i + 1; j < gb.polys.size(); ++j)
      CHECK(poly_is_zero(normal_form(s_polynomial(gb.polys[i], gb.polys[j]), gb)));
}

TEST_CASE("gv dimensions equal n factorial") {
  for (const char* hs : {"h=1", "h=2"}) {
    auto pa = ParamAssignment::parse(hs);
    long expected[3] = {2, 6, 24};
    for (int n = 2; n <= 4; ++n) {
      auto gb = buchberger(algebra_preset("gv", n), pa, MonomialOrder{});
      auto d = algebra_dimension(gb);
      REQUIRE(d.has_value());
      CHECK(*d == expected[n - 2]);
    }
  }
}

TEST_CASE("normal form behaviour") {
  auto pa = ParamAssignment::parse("h=1");
  auto pres = algebra_preset("gv", 3);
  auto gb = buchberger(pres, pa, MonomialOrder{});
  // any basis element reduces to zero
  for (const auto& g : gb.polys) CHECK(poly_is_zero(normal_form(g, gb)));
  // the algebra is unital: 1 stays 1
  CommPolynomial one = make_poly(gb.order);
  poly_add_term(one, CommMonomial(pres.variables.size()), Rat(1));
  CHECK(normal_form(one, gb) == one);
  // x12*x23 + x13 - x12*x13 - x23*x13 is a defining relation at h=1
  auto rel = parse_algebra_polynomial("x12*x23 + x13 - x12*x13 - x23*x13", pres)
                 .specialize({Rat(1)}, gb.order);
  CHECK(poly_is_zero(normal_form(rel, gb)));
}

TEST_CASE("gv2 pair relations identify the two families off the origin") {
  // at (1,1): multiplying 2xy = x + y by x and y forces y = x,
  // so the quotient is two-dimensional
  auto gb = buchberger(algebra_preset("gv2", 2), ParamAssignment::parse("h1=1,h2=1"),
                       MonomialOrder{});
  auto d = algebra_dimension(gb);
  REQUIRE(d.has_value());
  CHECK(*d == 2);
  // at the origin the mixed product vanishes and the dimension is 3
  auto gb0 = buchberger(algebra_preset("gv2", 2), ParamAssignment::parse("h1=0,h2=0"),
                        MonomialOrder{});
  CHECK(algebra_dimension(gb0) == 3);
  // arity 3: 16 at the origin, 6 off it
  auto gb3 = buchberger(algebra_preset("gv2", 3), ParamAssignment::parse("h1=0,h2=0"),
                        MonomialOrder{});
  CHECK(algebra_dimension(gb3) == 16);
  auto gb3g = buchberger(algebra_preset("gv2", 3), ParamAssignment::parse("h1=1,h2=1"),
                         MonomialOrder{});
  CHECK(algebra_dimension(gb3g) == 6);
}

TEST_CASE("infinite staircase detection") {
  auto gb = buchberger(tiny({"x", "y"}, {"x*y"}), ParamAssignment{}, MonomialOrder{});
  CHECK_FALSE(algebra_dimension(gb).has_value());
}

TEST_CASE("unit ideal") {
  auto gb = buchberger(tiny({"x"}, {"x^2 - x", "x^2 - x - 1"}), ParamAssignment{},
                       MonomialOrder{});
  CHECK(algebra_dimension(gb) == 0);
}

TEST_CASE("dimension does not depend on the order") {
  auto pa2 = ParamAssignment::parse("h1=1,h2=1");
  for (int n = 2; n <= 4; ++n) {
    auto pres = algebra_preset("gv2", n);
    auto d1 = algebra_dimension(buchberger(pres, pa2, {MonomialOrder::Kind::DegRevLex}));
    auto d2 = algebra_dimension(buchberger(pres, pa2, {MonomialOrder::Kind::Lex}));
    CHECK(d1 == d2);
  }
}

TEST_CASE("standard monomials span count") {
  auto gb = buchberger(algebra_preset("gv", 3), ParamAssignment::parse("h=1"), MonomialOrder{});
  auto monos = standard_monomials(gb);
  CHECK(static_cast<long>(monos.size()) == algebra_dimension(gb).value());
}

TEST_CASE("substitution isomorphism checks") {
  auto pa = ParamAssignment::parse("h1=1,h2=1");
  // identity substitution on gv(3)
  auto gv3 = algebra_preset("gv", 3);
  std::map<std::string, std::string> idmap;
  for (const auto& v : gv3.variables) idmap[v] = v;
  CHECK(static_cast<bool>(
      check_substitution_iso(gv3, gv3, idmap, idmap, ParamAssignment::parse("h=1"))));

  // shift substitution between the two gv2 presentations at n=2
  auto A = algebra_preset("gv2", 2);
  auto B = algebra_preset("gv2alt", 2);
  std::map<std::string, std::string> ab = {{"x12", "1/2*(a12 + h1)"}, {"y12", "1/2*(b12 + h2)"}};
  std::map<std::string, std::string> ba = {{"a12", "2*x12 - h1"}, {"b12", "2*y12 - h2"}};
  CHECK(static_cast<bool>(check_substitution_iso(A, B, ab, ba, pa)));

  // a deliberately wrong substitution: a12 -> x12 maps a12 + a21 = 0 to h1 != 0
  std::map<std::string, std::string> wrong_ba = {{"a12", "x12"}, {"b12", "2*y12 - h2"}};
  std::map<std::string, std::string> wrong_ab = {{"x12", "a12"}, {"y12", "1/2*(b12 + h2)"}};
  CHECK_FALSE(static_cast<bool>(check_substitution_iso(A, B, wrong_ab, wrong_ba, pa)));

  // at n=3 the triangle constants of the two presentations disagree in sign,
  // so the shift substitution fails
  auto A3 = algebra_preset("gv2", 3);
  auto B3 = algebra_preset("gv2alt", 3);
  std::map<std::string, std::string> ab3, ba3;
  for (const auto& v : A3.variables) {
    std::string suffix = v.substr(1);
    std::string target = (v[0] == 'x' ? "a" : "b") + suffix;
    std::string h = v[0] == 'x' ? "h1" : "h2";
    ab3[v] = "1/2*(" + target + " + " + h + ")";
  }
  for (const auto& v : B3.variables) {
    std::string suffix = v.substr(1);
    std::string target = (v[0] == 'a' ? "x" : "y") + suffix;
    std::string h = v[0] == 'a' ? "h1" : "h2";
    ba3[v] = "2*" + target + " - " + h;
  }
  CHECK_FALSE(static_cast<bool>(check_substitution_iso(A3, B3, ab3, ba3, pa)));

  // undefined variable in substitution
  std::map<std::string, std::string> partial = {{"x12", "a12"}};
  CHECK_THROWS_AS(check_substitution_iso(A, B, partial, ba, pa), std::invalid_argument);
}

TEST_CASE("gv2alt squares force a two-dimensional quotient at n=2") {
  auto gb = buchberger(algebra_preset("gv2alt", 2), ParamAssignment::parse("h1=1,h2=1"),
                       MonomialOrder{});
  CHECK(algebra_dimension(gb) == 2);
}
