#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "operadforge/tree_monomial.hpp"

using namespace operadforge;

namespace {

const Signature kLL2Sig = {{"m", 2, Symmetry::Comm},
                           {"lb", 2, Symmetry::Anti},
                           {"sb", 2, Symmetry::Anti}};

TreeMonomial leaf(int l) { return TreeMonomial::leaf(l); }

// all raw planar trees on the label multiset, every generator decoration
void brute_enumerate(const Signature& sig, std::vector<int> labels,
                     std::vector<TreeMonomial>& out) {
  std::sort(labels.begin(), labels.end());
  do {
    // planar shapes by recursive splits of the label sequence
    auto shapes = [&](auto&& self, int lo, int hi) -> std::vector<TreeMonomial> {
      if (hi - lo == 1) return {leaf(labels[static_cast<std::size_t>(lo)])};
      std::vector<TreeMonomial> res;
      for (int cut = lo + 1; cut < hi; ++cut)
        for (const auto& l : self(self, lo, cut))
          for (const auto& r : self(self, cut, hi))
            for (std::size_t g = 0; g < sig.size(); ++g)
              res.push_back(TreeMonomial::node(static_cast<int>(g), l, r));
      return res;
    };
    for (const auto& t : shapes(shapes, 0, static_cast<int>(labels.size())))
      out.push_back(canonical_form(t, sig).mono);
  } while (std::next_permutation(labels.begin(), labels.end()));
}

}  // namespace

TEST_CASE("canonical form antisymmetry") {
  Signature sig = {{"br", 2, Symmetry::Anti}};
  auto sm = canonical_form(TreeMonomial::node(0, leaf(2), leaf(1)), sig);
  CHECK(sm.sign == -1);
  CHECK(sm.mono == TreeMonomial::node(0, leaf(1), leaf(2)));
}

TEST_CASE("canonical form commutative swap keeps sign") {
  Signature sig = {{"m", 2, Symmetry::Comm}};
  auto sm = canonical_form(TreeMonomial::node(0, leaf(2), leaf(1)), sig);
  CHECK(sm.sign == 1);
  CHECK(sm.mono == TreeMonomial::node(0, leaf(1), leaf(2)));
}

TEST_CASE("canonical form nested swap") {
  // {[3,1],2}: inner antisymmetric swap only
  auto raw = TreeMonomial::node(2, TreeMonomial::node(1, leaf(3), leaf(1)), leaf(2));
  auto sm = canonical_form(raw, kLL2Sig);
  CHECK(sm.sign == -1);
  CHECK(sm.mono == TreeMonomial::node(2, TreeMonomial::node(1, leaf(1), leaf(3)), leaf(2)));
}

TEST_CASE("nonsym children keep order") {
  Signature sig = {{"mu", 2, Symmetry::NonSym}};
  auto raw = TreeMonomial::node(0, leaf(2), leaf(1));
  auto sm = canonical_form(raw, sig);
  CHECK(sm.sign == 1);
  CHECK(sm.mono == raw);
}

TEST_CASE("basis enumeration counts") {
  Signature com = {{"m", 2, Symmetry::Comm}};
  CHECK(enumerate_basis(com, 1).size() == 1);
  CHECK(enumerate_basis(com, 3).size() == 3);
  Signature nonsym = {{"mu", 2, Symmetry::NonSym}};
  CHECK(enumerate_basis(nonsym, 3).size() == 12);
  CHECK(enumerate_basis(nonsym, 4).size() == 120);
  CHECK(enumerate_basis(kLL2Sig, 3).size() == 27);
  CHECK(enumerate_basis(kLL2Sig, 4).size() == 405);
  CHECK(enumerate_basis(kLL2Sig, 5).size() == 8505);
  CHECK_THROWS_AS(enumerate_basis(kLL2Sig, 6), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(kLL2Sig, 0), std::invalid_argument);
}

TEST_CASE("basis matches brute force") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> labels;
    for (int k = 1; k <= n; ++k) labels.push_back(k);
    std::vector<TreeMonomial> brute;
    brute_enumerate(kLL2Sig, labels, brute);
    std::sort(brute.begin(), brute.end());
    brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
    CHECK(brute == enumerate_basis(kLL2Sig, n));
  }
}

TEST_CASE("compose with the one-leaf tree is the identity") {
  auto m = enumerate_basis(kLL2Sig, 3)[7];
  auto sm = compose(m, 2, leaf(1), kLL2Sig);
  CHECK(sm.sign == 1);
  CHECK(sm.mono == m);
  auto sm2 = compose(leaf(1), 1, m, kLL2Sig);
  CHECK(sm2.sign == 1);
  CHECK(sm2.mono == m);
}

TEST_CASE("compose brackets") {
  Signature sig = {{"m", 2, Symmetry::Comm}, {"br", 2, Symmetry::Anti}};
  auto br12 = TreeMonomial::node(1, leaf(1), leaf(2));
  auto sm = compose(br12, 1, br12, sig);
  CHECK(sm.sign == 1);
  CHECK(sm.mono == TreeMonomial::node(1, TreeMonomial::node(1, leaf(1), leaf(2)), leaf(3)));

  auto m12 = TreeMonomial::node(0, leaf(1), leaf(2));
  auto sm2 = compose(br12, 2, m12, sig);
  CHECK(sm2.sign == 1);
  CHECK(sm2.mono == TreeMonomial::node(1, leaf(1), TreeMonomial::node(0, leaf(2), leaf(3))));

  CHECK_THROWS_AS(compose(br12, 3, m12, sig), std::out_of_range);
}

TEST_CASE("act examples") {
  Signature sig = {{"br", 2, Symmetry::Anti}};
  LinearCombination v;
  v.arity = 2;
  v.add_term(TreeMonomial::node(0, leaf(1), leaf(2)), Rat(1));

  auto idp = Permutation::identity(2);
  CHECK(act(idp, v, sig) == v);

  Permutation swap{{2, 1}};
  auto w = act(swap, v, sig);
  REQUIRE(w.terms.size() == 1);
  CHECK(w.terms.begin()->second == Rat(-1));

  // (123) on [[1,2],3] lands on -[1,[2,3]]
  LinearCombination u;
  u.arity = 3;
  u.add_term(TreeMonomial::node(0, TreeMonomial::node(0, leaf(1), leaf(2)), leaf(3)), Rat(1));
  Permutation rot{{2, 3, 1}};
  auto r1 = act(rot, u, sig);
  REQUIRE(r1.terms.size() == 1);
  CHECK(r1.terms.begin()->first ==
        TreeMonomial::node(0, leaf(1), TreeMonomial::node(0, leaf(2), leaf(3))));
  CHECK(r1.terms.begin()->second == Rat(-1));
  auto r3 = act(rot, act(rot, r1, sig), sig);
  CHECK(r3 == u);

  CHECK_THROWS_AS(act(rot, v, sig), std::invalid_argument);
}

TEST_CASE("group action composition property") {
  std::mt19937 rng(5150);
  auto b4 = enumerate_basis(kLL2Sig, 4);
  std::uniform_int_distribution<int> dc(-3, 3);
  for (int t = 0; t < 25; ++t) {
    LinearCombination v;
    v.arity = 4;
    for (int k = 0; k < 6; ++k) v.add_term(b4[rng() % b4.size()], Rat(dc(rng)));
    Permutation sigma = Permutation::identity(4), tau = Permutation::identity(4);
    std::shuffle(sigma.img.begin(), sigma.img.end(), rng);
    std::shuffle(tau.img.begin(), tau.img.end(), rng);
    CHECK(act(sigma.compose_after(tau), v, kLL2Sig) ==
          act(sigma, act(tau, v, kLL2Sig), kLL2Sig));
  }
}

TEST_CASE("canonical form is idempotent on random trees") {
  std::mt19937 rng(99);
  auto b5 = enumerate_basis(kLL2Sig, 5);
  for (int t = 0; t < 50; ++t) {
    const auto& m = b5[rng() % b5.size()];
    auto sm = canonical_form(m, kLL2Sig);
    CHECK(sm.sign == 1);
    CHECK(sm.mono == m);
  }
}

TEST_CASE("operad composition axioms with signs") {
  std::mt19937 rng(2718);
  auto b2 = enumerate_basis(kLL2Sig, 2);
  auto b3 = enumerate_basis(kLL2Sig, 3);
  for (int t = 0; t < 60; ++t) {
    const auto& x = b3[rng() % b3.size()];
    const auto& y = b2[rng() % b2.size()];
    const auto& z = b2[rng() % b2.size()];
    int i = 1 + static_cast<int>(rng() % 3);
    int j = 1 + static_cast<int>(rng() % 2);
    // sequential: (x o_i y) o_{i-1+j} z = x o_i (y o_j z)
    auto l1 = compose(x, i, y, kLL2Sig);
    auto l2 = compose(l1.mono, i - 1 + j, z, kLL2Sig);
    auto r1 = compose(y, j, z, kLL2Sig);
    auto r2 = compose(x, i, r1.mono, kLL2Sig);
    CHECK(l2.mono == r2.mono);
    CHECK(l1.sign * l2.sign == r1.sign * r2.sign);
    // disjoint slots: i < k: (x o_i y) o_{k+1} z = (x o_k z) o_i y
    if (i < 3) {
      int k = i + 1;
      auto a1 = compose(x, i, y, kLL2Sig);
      auto a2 = compose(a1.mono, k + 1, z, kLL2Sig);
      auto c1 = compose(x, k, z, kLL2Sig);
      auto c2 = compose(c1.mono, i, y, kLL2Sig);
      CHECK(a2.mono == c2.mono);
      CHECK(a1.sign * a2.sign == c1.sign * c2.sign);
    }
  }
}

TEST_CASE("monomial serialization") {
  auto m = TreeMonomial::node(0, leaf(1), TreeMonomial::node(1, leaf(2), leaf(3)));
  CHECK(monomial_to_string(m, kLL2Sig) == "m(1, lb(2, 3))");
  LinearCombination lc;
  lc.arity = 3;
  lc.add_term(m, Rat(-3));
  CHECK(combination_to_string(lc, kLL2Sig) == "-3*m(1, lb(2, 3))");
}

TEST_CASE("permutation helpers") {
  Permutation p{{2, 3, 1}};
  CHECK(p.sign() == 1);
  CHECK(p.cycle_type() == std::vector<int>{3});
  CHECK(all_permutations(3).size() == 6);
  CHECK(class_representatives(4).size() == 5);
}
