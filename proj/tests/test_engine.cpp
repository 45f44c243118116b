#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "operadforge/koszul.hpp"
#include "operadforge/operad_engine.hpp"
#include "operadforge/parser.hpp"
#include "operadforge/presets.hpp"

using namespace operadforge;

TEST_CASE("ideal ranks at arity 3") {
  OperadEngine lie(operad_preset("lie"), ParamAssignment{});
  CHECK(lie.dim_free(3) == 3);
  CHECK(lie.ideal(3).rank() == 1);

  OperadEngine ll(operad_preset("ll"), ParamAssignment::parse("h=1"));
  CHECK(ll.dim_free(3) == 12);
  CHECK(ll.ideal(3).rank() == 6);

  // no relations: zero ideal at every arity
  auto empty = parse_operad_presentation(R"(operad free2
gen m : comm;
gen br : anti;
)");
  OperadEngine fe(empty, ParamAssignment{});
  CHECK(fe.ideal(4).rank() == 0);
  CHECK(fe.dim(4) == fe.dim_free(4));
}

TEST_CASE("component dimensions") {
  OperadEngine ll1(operad_preset("ll"), ParamAssignment::parse("h=1"));
  CHECK(ll1.dim(1) == 1);
  CHECK(ll1.dim(2) == 2);
  CHECK(ll1.dim(3) == 6);
  CHECK(ll1.dim(4) == 24);

  OperadEngine ll0(operad_preset("ll"), ParamAssignment::parse("h=0"));
  CHECK(ll0.dim(4) == 24);

  OperadEngine p(operad_preset("poisson"), ParamAssignment{});
  CHECK(p.dim(3) == 6);
  CHECK(p.dim(4) == 24);

  OperadEngine lie2(operad_preset("lie2"), ParamAssignment{});
  CHECK(lie2.dim(2) == 2);
  CHECK(lie2.dim(3) == 9);
  CHECK(lie2.dim(4) == 64);

  OperadEngine ll2_origin(operad_preset("ll2"), ParamAssignment::parse("h1=0,h2=0"));
  CHECK(ll2_origin.dim(2) == 3);
  CHECK(ll2_origin.dim(3) == 16);
  CHECK(ll2_origin.dim(4) == 125);

  // off the origin the arity-4 dimension drops from 125 to 115
  OperadEngine ll2_11(operad_preset("ll2"), ParamAssignment::parse("h1=1,h2=1"));
  CHECK(ll2_11.dim(3) == 16);
  CHECK(ll2_11.dim(4) == 115);
}

TEST_CASE("dimension is independent of relation order") {
  auto pres = operad_preset("ll");
  auto reordered = pres;
  std::swap(reordered.relations[0], reordered.relations[2]);
  std::reverse(reordered.relations.begin(), reordered.relations.end());
  OperadEngine a(pres, ParamAssignment::parse("h=1"));
  OperadEngine b(reordered, ParamAssignment::parse("h=1"));
  CHECK(a.dim(4) == b.dim(4));
  CHECK(subspace_equal(a.ideal(4).matrix, b.ideal(4).matrix));
}

TEST_CASE("ideal row space is S_n stable") {
  OperadEngine eng(operad_preset("ll2"), ParamAssignment::parse("h1=1,h2=1"));
  const Signature& sig = eng.signature();
  for (int n = 3; n <= 4; ++n) {
    const IdealBasis& ib = eng.ideal(n);
    const auto& basis = eng.basis(n);
    for (int t = 0; t + 1 < n; ++t) {
      Permutation sigma = Permutation::identity(n);
      std::swap(sigma.img[static_cast<std::size_t>(t)], sigma.img[static_cast<std::size_t>(t + 1)]);
      for (const auto& row : ib.matrix.rows) {
        RatMatrix::Row image;
        for (const auto& [c, v] : row) {
          auto sm = relabel(basis[static_cast<std::size_t>(c)], sigma, sig);
          image.emplace_back(eng.basis_index(n, sm.mono), Rat(sm.sign) * v);
        }
        std::sort(image.begin(), image.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Rat> dense(static_cast<std::size_t>(eng.dim_free(n)), Rat(0));
        for (const auto& [c, v] : image) dense[static_cast<std::size_t>(c)] += v;
        CHECK(in_row_space(ib.matrix, dense));
      }
    }
  }
}

TEST_CASE("saturation: symmetrizing the ideal adds nothing") {
  OperadEngine eng(operad_preset("ll2"), ParamAssignment::parse("h1=2,h2=-3"));
  const IdealBasis& ib = eng.ideal(4);
  const auto& basis = eng.basis(4);
  RatMatrix stacked(RationalField{}, 2 * ib.matrix.nrows, ib.matrix.ncols);
  for (int i = 0; i < ib.matrix.nrows; ++i)
    stacked.rows[static_cast<std::size_t>(i)] = ib.matrix.rows[static_cast<std::size_t>(i)];
  Permutation sigma = Permutation::identity(4);
  std::swap(sigma.img[1], sigma.img[2]);
  for (int i = 0; i < ib.matrix.nrows; ++i) {
    RatMatrix::Row image;
    for (const auto& [c, v] : ib.matrix.rows[static_cast<std::size_t>(i)]) {
      auto sm = relabel(basis[static_cast<std::size_t>(c)], sigma, eng.signature());
      image.emplace_back(eng.basis_index(4, sm.mono), Rat(sm.sign) * v);
    }
    stacked.set_row(ib.matrix.nrows + i, std::move(image));
  }
  CHECK(rank(stacked) == ib.rank());
}

TEST_CASE("flatness samples at low arity") {
  const char* samples[5] = {"h1=0,h2=0", "h1=1,h2=0", "h1=0,h2=1", "h1=1,h2=1", "h1=2,h2=-3"};
  for (const char* s : samples) {
    OperadEngine e(operad_preset("ll2"), ParamAssignment::parse(s));
    CHECK(e.dim(2) == 3);
    CHECK(e.dim(3) == 16);
  }
}

TEST_CASE("ideal membership") {
  auto lie = operad_preset("lie");
  OperadEngine el(lie, ParamAssignment{});
  CHECK(el.in_ideal(parse_element("br(a,br(b,c)) + br(b,br(c,a)) + br(c,br(a,b))", lie, 3)));
  CHECK_FALSE(el.in_ideal(parse_element("br(a,br(b,c))", lie, 3)));

  auto ll = operad_preset("ll");
  OperadEngine ell(ll, ParamAssignment::parse("h=1"));
  // associator of a*b := a.b + [a,b]
  const char* assoc =
      "m(m(a,b),c) + br(m(a,b),c) + m(br(a,b),c) + br(br(a,b),c)"
      " - m(a,m(b,c)) - br(a,m(b,c)) - m(a,br(b,c)) - br(a,br(b,c))";
  CHECK(ell.in_ideal(parse_element(assoc, ll, 3)));
  CHECK_FALSE(ell.in_ideal(parse_element("m(br(a,b),c)", ll, 3)));
}

TEST_CASE("characters") {
  OperadEngine eng(operad_preset("ll2"), ParamAssignment::parse("h1=1,h2=1"));
  CHECK(eng.character(2, Permutation::identity(2)) == Rat(3));
  CHECK(eng.character(2, Permutation{{2, 1}}) == Rat(-1));
  CHECK(eng.character(3, Permutation::identity(3)) == Rat(16));
  // class function: conjugate transpositions agree
  CHECK(eng.character(3, Permutation{{2, 1, 3}}) == eng.character(3, Permutation{{1, 3, 2}}));
  CHECK(eng.character(3, Permutation{{2, 1, 3}}) == eng.character(3, Permutation{{3, 2, 1}}));
  CHECK_THROWS_AS(eng.character(3, Permutation::identity(2)), std::invalid_argument);
}

TEST_CASE("character depends only on the cycle type") {
  OperadEngine eng(operad_preset("ll2"), ParamAssignment::parse("h1=1,h2=1"));
  // two 4-cycles
  CHECK(eng.character(4, Permutation{{2, 3, 4, 1}}) ==
        eng.character(4, Permutation{{2, 4, 1, 3}}));
  // two double transpositions
  CHECK(eng.character(4, Permutation{{2, 1, 4, 3}}) ==
        eng.character(4, Permutation{{3, 4, 1, 2}}));
  // 3-cycles fixing different points
  CHECK(eng.character(4, Permutation{{2, 3, 1, 4}}) ==
        eng.character(4, Permutation{{1, 3, 4, 2}}));
}

TEST_CASE("characters match dimensions at the identity") {
  OperadEngine eng(operad_preset("lie2"), ParamAssignment{});
  for (int n = 2; n <= 4; ++n)
    CHECK(eng.character(n, Permutation::identity(n)) == Rat(eng.dim(n)));
}

TEST_CASE("morphism checks") {
  auto ll2 = operad_preset("ll2");
  // identity endomorphism
  std::map<std::string, Element> idmap;
  idmap["m"] = parse_element("m(a,b)", ll2, 2);
  idmap["lb"] = parse_element("lb(a,b)", ll2, 2);
  idmap["sb"] = parse_element("sb(a,b)", ll2, 2);
  CHECK(static_cast<bool>(check_morphism(ll2, ll2, idmap, ParamAssignment::parse("h1=1,h2=1"))));

  // the quantization assignment lands in the ideal at (1,0)
  std::map<std::string, Element> as;
  as["st"] = parse_element("m(a,b) + h1*lb(a,b) + h2*sb(a,b)", ll2, 2);
  as["br"] = parse_element("sb(a,b)", ll2, 2);
  CHECK(static_cast<bool>(
      check_morphism(operad_preset("ass2"), ll2, as, ParamAssignment::parse("h1=1,h2=0"))));

  // antisymmetric generator mapped to a symmetric element: rejected
  auto lie = operad_preset("lie");
  auto com = operad_preset("com");
  std::map<std::string, Element> bad;
  bad["br"] = parse_element("m(a,b)", com, 2);
  auto res = check_morphism(lie, com, bad, ParamAssignment{});
  CHECK_FALSE(static_cast<bool>(res));
  CHECK_FALSE(res.symmetry_ok);

  // missing assignment
  std::map<std::string, Element> none;
  CHECK_FALSE(static_cast<bool>(check_morphism(lie, com, none, ParamAssignment{})));
}

TEST_CASE("modular dimensions") {
  auto primes = default_rank_primes();
  OperadEngine ll(operad_preset("ll"), ParamAssignment::parse("h=1"), 4, 5);
  auto md = ll.dim_modular(5, primes);
  CHECK(md.dim == 120);
  CHECK(md.stable);
  CHECK(md.dim_free == 1680);

  OperadEngine lie2(operad_preset("lie2"), ParamAssignment{}, 4, 5);
  CHECK(lie2.dim_modular(5, primes).dim == 625);

  // modular and exact agree at arity 4
  OperadEngine ll2(operad_preset("ll2"), ParamAssignment::parse("h1=1,h2=1"), 4, 5);
  auto m4 = ll2.dim_modular(4, primes);
  CHECK(m4.dim == ll2.dim(4));
  CHECK(m4.stable);
}

TEST_CASE("component report") {
  auto rep = component_dimension(operad_preset("ll"), ParamAssignment::parse("h=5/3"), 4,
                                 FieldMode::Exact);
  CHECK(rep.dim == 24);
  CHECK(rep.dim_free == 120);
  CHECK(rep.rank_ideal == 96);
  CHECK(rep.field == "rational");
  CHECK(rep.params == "h=5/3");

  auto mrep = component_dimension(operad_preset("ll"), ParamAssignment::parse("h=5/3"), 5,
                                  FieldMode::Modular);
  CHECK(mrep.dim == 120);
  CHECK(mrep.stable);
  CHECK(mrep.field.substr(0, 4) == "mod ");
}

TEST_CASE("engine argument validation") {
  OperadEngine eng(operad_preset("ll"), ParamAssignment::parse("h=1"));
  CHECK_THROWS_AS(eng.dim(0), std::invalid_argument);
  CHECK_THROWS_AS(eng.ideal(2), std::invalid_argument);
  CHECK_THROWS_AS(eng.ideal(5), std::invalid_argument);
  CHECK_THROWS_AS(OperadEngine(operad_preset("ll"), ParamAssignment{}),
                  std::invalid_argument);  // unassigned parameter
  auto el = parse_element("br(a,br(b,c))", operad_preset("ll"), 3);
  (void)el;
  CHECK_THROWS_AS(eng.dim_modular(5, {default_rank_primes()[0]}), std::invalid_argument);
}

TEST_CASE("expand_ideal free function") {
  auto ib = expand_ideal(operad_preset("lie"), ParamAssignment{}, 4);
  CHECK(ib.arity == 4);
  CHECK(ib.rank() == 9);  // 15 free - 6
}
