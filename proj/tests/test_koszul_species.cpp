#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operadforge/koszul.hpp"
#include "operadforge/presets.hpp"
#include "operadforge/species.hpp"

using namespace operadforge;

TEST_CASE("pairing matrix invertible for every preset signature") {
  for (const auto& name : operad_preset_names()) {
    auto sig = operad_preset(name).generators;
    auto g = pairing_matrix(sig);
    CHECK(rank(g) == g.ncols);
  }
}

TEST_CASE("classical duality anchors") {
  ParamAssignment none;
  auto dcom = quadratic_dual(operad_preset("com"), none);
  OperadEngine lie(operad_preset("lie"), none, 3);
  CHECK(subspace_equal(dcom.dual_span, lie.ideal(3).matrix));

  auto dlie = quadratic_dual(operad_preset("lie"), none);
  OperadEngine com(operad_preset("com"), none, 3);
  CHECK(subspace_equal(dlie.dual_span, com.ideal(3).matrix));

  auto dass = quadratic_dual(operad_preset("ass"), none);
  OperadEngine ass(operad_preset("ass"), none, 3);
  CHECK(subspace_equal(dass.dual_span, ass.ideal(3).matrix));
}

TEST_CASE("dual involutivity") {
  ParamAssignment none;
  auto pa11 = ParamAssignment::parse("h1=1,h2=1");
  struct Case {
    const char* name;
    ParamAssignment pa;
  } cases[] = {{"com", none}, {"lie", none}, {"ass", none}, {"poisson", none}, {"ll2", pa11}};
  for (const auto& c : cases) {
    auto pres = operad_preset(c.name);
    auto d = quadratic_dual(pres, c.pa);
    auto dd = quadratic_dual(d.presentation, ParamAssignment{});
    OperadEngine orig(pres, c.pa, 3);
    CHECK(subspace_equal(dd.dual_span, orig.ideal(3).matrix));
  }
}

TEST_CASE("rank complementarity") {
  ParamAssignment none;
  auto pa11 = ParamAssignment::parse("h1=1,h2=1");
  struct Case {
    const char* name;
    ParamAssignment pa;
  } cases[] = {{"com", none},  {"lie", none},      {"ass", none},
               {"poisson", none}, {"lie2", none},  {"ass2", none},
               {"ll2", pa11}};
  for (const auto& c : cases) {
    auto d = quadratic_dual(operad_preset(c.name), c.pa);
    CHECK(d.relation_span.nrows + d.dual_span.nrows == d.relation_span.ncols);
  }
}

TEST_CASE("poisson self-duality dimensions") {
  auto d = quadratic_dual(operad_preset("poisson"), ParamAssignment{});
  OperadEngine dual_engine(d.presentation, ParamAssignment{});
  OperadEngine poisson(operad_preset("poisson"), ParamAssignment{});
  for (int n = 1; n <= 4; ++n) CHECK(dual_engine.dim(n) == poisson.dim(n));
}

TEST_CASE("ll2 dual relation span matches the stated dual presentation") {
  for (const char* ps : {"h1=1,h2=1", "h1=1,h2=0", "h1=0,h2=0"}) {
    auto pa = ParamAssignment::parse(ps);
    auto d = quadratic_dual(operad_preset("ll2"), pa);
    OperadEngine stated(operad_preset("ll2dual"), pa, 3);
    CHECK(subspace_equal(d.dual_span, stated.ideal(3).matrix));
  }
}

TEST_CASE("subspace_equal basics") {
  RatMatrix a(RationalField{}, 2, 3);
  a.rows[0] = {{0, Rat(1)}, {1, Rat(2)}};
  a.rows[1] = {{2, Rat(1)}};
  RatMatrix b(RationalField{}, 2, 3);
  b.rows[0] = a.rows[1];
  b.rows[1] = a.rows[0];
  CHECK(subspace_equal(a, b));

  RatMatrix c = a;
  c.nrows = 3;
  c.rows.push_back({{1, Rat(1)}});
  CHECK_FALSE(subspace_equal(a, c));

  RatMatrix wrong(RationalField{}, 1, 4);
  wrong.rows[0] = {{0, Rat(1)}};
  CHECK_THROWS_AS(subspace_equal(a, wrong), std::invalid_argument);
}

TEST_CASE("series test analytic anchors") {
  DimensionTable com = {1, 1, 1, 1, 1};
  DimensionTable lie = {1, 1, 2, 6, 24};
  CHECK(koszulness_series_test(com, lie, 5).pass);
  CHECK(koszulness_series_test(lie, com, 5).pass);

  DimensionTable ass = {1, 2, 6, 24, 120};
  CHECK(koszulness_series_test(ass, ass, 5).pass);

  DimensionTable corrupted = {1, 1, 3, 6, 24};
  auto r = koszulness_series_test(com, corrupted, 5);
  CHECK_FALSE(r.pass);
  CHECK(r.first_fail_degree == 3);

  CHECK_THROWS_AS(koszulness_series_test(com, lie, 6), std::invalid_argument);
  DimensionTable bad_head = {2, 1, 1};
  CHECK_THROWS_AS(koszulness_series_test(bad_head, lie, 3), std::invalid_argument);
}

TEST_CASE("series test for the bi-Hamiltonian pair") {
  DimensionTable p2 = {1, 3, 16, 125, 1296};
  DimensionTable p2dual = {1, 3, 11, 50, 274};
  CHECK(koszulness_series_test(p2, p2dual, 5).pass);
}

TEST_CASE("set partitions") {
  long bell[8] = {1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) CHECK(count_set_partitions(n) == bell[n - 1]);
  CHECK_THROWS_AS(count_set_partitions(9), std::invalid_argument);
}

TEST_CASE("species composition dimensions") {
  DimensionTable com = {1, 1, 1, 1, 1};
  DimensionTable lie = {1, 1, 2, 6, 24};
  DimensionTable lie2 = {1, 2, 9, 64, 625};
  CHECK(species_compose_dims(com, lie, 3) == 6);
  CHECK(species_compose_dims(com, lie, 4) == 24);
  CHECK(species_compose_dims(com, lie2, 2) == 3);
  CHECK(species_compose_dims(com, lie2, 3) == 16);
  CHECK(species_compose_dims(com, lie2, 4) == 125);
  CHECK(species_compose_dims(com, lie2, 5) == 1296);

  // identity species on the B side
  DimensionTable one_only = {1, 0, 0};
  DimensionTable arbitrary = {1, 5, 7};
  CHECK(species_compose_dims(arbitrary, one_only, 3) == 7);

  // linearity in the A table
  DimensionTable a1 = {1, 0, 2}, a2 = {0, 3, 1}, sum = {1, 3, 3};
  CHECK(species_compose_dims(sum, lie, 3) ==
        species_compose_dims(a1, lie, 3) + species_compose_dims(a2, lie, 3));

  CHECK_THROWS_AS(species_compose_dims(one_only, one_only, 4), std::invalid_argument);
}

TEST_CASE("xi checks") {
  auto r = xi_check(operad_preset("com"), operad_preset("lie"), operad_preset("poisson"),
                    ParamAssignment{});
  CHECK(r.equal);
  CHECK(r.species_dim == 24);

  auto bad = xi_check(operad_preset("com"), operad_preset("lie"), operad_preset("lie"),
                      ParamAssignment{});
  CHECK_FALSE(bad.equal);
  CHECK(bad.species_dim == 24);
  CHECK(bad.operad_dim == 6);
}

TEST_CASE("xi result is sample independent away from the origin") {
  auto a = xi_check(operad_preset("com"), operad_preset("lie2"), operad_preset("ll2"),
                    ParamAssignment::parse("h1=1,h2=1"));
  auto b = xi_check(operad_preset("com"), operad_preset("lie2"), operad_preset("ll2"),
                    ParamAssignment::parse("h1=2,h2=-3"));
  CHECK(a.species_dim == b.species_dim);
  CHECK(a.operad_dim == b.operad_dim);
  CHECK(a.equal == b.equal);
}

TEST_CASE("pairing sign examples") {
  Signature com = {{"m", 2, Symmetry::Comm}};
  auto basis = enumerate_basis(com, 3);
  // (1.2).3 pairs positively, the right-comb class negatively
  TreeMonomial left = TreeMonomial::node(0, TreeMonomial::node(0, TreeMonomial::leaf(1),
                                                               TreeMonomial::leaf(2)),
                                         TreeMonomial::leaf(3));
  TreeMonomial right = TreeMonomial::node(0, TreeMonomial::leaf(1),
                                          TreeMonomial::node(0, TreeMonomial::leaf(2),
                                                             TreeMonomial::leaf(3)));
  CHECK(pairing_sign(left) == 1);
  CHECK(pairing_sign(right) == -1);
  CHECK_THROWS_AS(pairing_sign(TreeMonomial::leaf(1)), std::invalid_argument);
}
