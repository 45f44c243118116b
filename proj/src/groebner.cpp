#include "operadforge/groebner.hpp"

#include "operadforge/parser.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace operadforge {

namespace {

const CommMonomial& leading_monomial(const CommPolynomial& p) { return p.begin()->first; }
const Rat& leading_coeff(const CommPolynomial& p) { return p.begin()->second; }

CommPolynomial make_monic(const CommPolynomial& p) {
  if (p.empty()) return p;
  return poly_scale(p, Rat(1) / leading_coeff(p));
}

// Remainder of p on division by the (not necessarily reduced) family gens.
CommPolynomial divide_remainder(const CommPolynomial& p,
                                const std::vector<CommPolynomial>& gens) {
  CommPolynomial rem(p.key_comp());
  CommPolynomial work = p;
  while (!work.empty()) {
    const CommMonomial& lm = leading_monomial(work);
    bool reduced = false;
    for (const auto& g : gens) {
      if (g.empty()) continue;
      if (!leading_monomial(g).divides(lm)) continue;
      Rat factor = leading_coeff(work) / leading_coeff(g);
      work = poly_sub(work, poly_mul_term(g, lm / leading_monomial(g), factor));
      reduced = true;
      break;
    }
    if (!reduced) {
      auto it = work.begin();
      rem.emplace(it->first, it->second);
      work.erase(it);
    }
  }
  return rem;
}

}  // namespace

CommPolynomial s_polynomial(const CommPolynomial& f, const CommPolynomial& g) {
  if (f.empty() || g.empty()) return CommPolynomial(f.empty() ? g.key_comp() : f.key_comp());
  CommMonomial l = CommMonomial::lcm(leading_monomial(f), leading_monomial(g));
  CommPolynomial a = poly_mul_term(f, l / leading_monomial(f), Rat(1) / leading_coeff(f));
  CommPolynomial b = poly_mul_term(g, l / leading_monomial(g), Rat(1) / leading_coeff(g));
  return poly_sub(a, b);
}

GroebnerBasis buchberger_polys(std::vector<CommPolynomial> gens, std::size_t nvars,
                               MonomialOrder order) {
  std::vector<CommPolynomial> basis;
  for (auto& g : gens)
    if (!g.empty()) basis.push_back(make_monic(g));

  // pair queue, normal selection: smallest lcm degree first
  struct Pair {
    int deg;
    std::size_t i, j;
    bool operator<(const Pair& o) const { return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j); }
  };
  std::set<Pair> pairs;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].empty()) continue;
      CommMonomial l = CommMonomial::lcm(leading_monomial(basis[i]), leading_monomial(basis[j]));
      pairs.insert({l.degree(), i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const CommMonomial& li = leading_monomial(basis[i]);
    const CommMonomial& lj = leading_monomial(basis[j]);
    if (li.coprime(lj)) continue;  // first Buchberger criterion
    CommPolynomial s = divide_remainder(s_polynomial(basis[i], basis[j]), basis);
    if (s.empty()) continue;
    basis.push_back(make_monic(s));
    push_pairs_for(basis.size() - 1);
  }

  // reduce: drop redundant leading terms, then tail-reduce
  std::vector<CommPolynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const CommMonomial& lj = leading_monomial(basis[j]);
      const CommMonomial& li = leading_monomial(basis[i]);
      if (lj.divides(li) && !(lj == li && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<CommPolynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CommPolynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    CommPolynomial r = divide_remainder(minimal[i], others);
    if (!r.empty()) reduced.push_back(make_monic(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const CommPolynomial& a, const CommPolynomial& b) {
    return order.less(leading_monomial(a), leading_monomial(b));
  });

  GroebnerBasis gb;
  gb.order = order;
  gb.nvars = nvars;
  gb.polys = std::move(reduced);
  return gb;
}

GroebnerBasis buchberger(const AlgebraPresentation& pres, const ParamAssignment& params,
                         MonomialOrder order) {
  auto values = resolve_params(pres.params, params);
  std::vector<CommPolynomial> gens;
  for (const auto& rel : pres.relations) {
    CommPolynomial p = rel.specialize(values, order);
    if (!p.empty()) gens.push_back(std::move(p));
  }
  return buchberger_polys(std::move(gens), pres.variables.size(), order);
}

CommPolynomial normal_form(const CommPolynomial& p, const GroebnerBasis& gb) {
  return divide_remainder(p, gb.polys);
}

std::optional<long> algebra_dimension(const GroebnerBasis& gb) {
  // unit ideal: quotient is zero
  for (const auto& g : gb.polys)
    if (leading_monomial(g).is_one()) return 0;
  // every variable needs a pure power among the leading terms
  std::vector<int> bound(gb.nvars, -1);
  std::vector<CommMonomial> lts;
  for (const auto& g : gb.polys) {
    const CommMonomial& lm = leading_monomial(g);
    lts.push_back(lm);
    int support = -1;
    bool pure = true;
    for (std::size_t v = 0; v < gb.nvars; ++v) {
      if (lm.exps[v] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = static_cast<int>(v);
    }
    if (pure && support >= 0) {
      int e = lm.exps[static_cast<std::size_t>(support)];
      if (bound[static_cast<std::size_t>(support)] < 0 ||
          e < bound[static_cast<std::size_t>(support)])
        bound[static_cast<std::size_t>(support)] = e;
    }
  }
  for (std::size_t v = 0; v < gb.nvars; ++v)
    if (bound[v] < 0) return std::nullopt;

  long count = 0;
  CommMonomial m(gb.nvars);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == gb.nvars) {
      for (const auto& lt : lts)
        if (lt.divides(m)) return;
      ++count;
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      m.exps[v] = static_cast<std::uint16_t>(e);
      self(self, v + 1);
    }
    m.exps[v] = 0;
  };
  rec(rec, 0);
  return count;
}

std::vector<CommMonomial> standard_monomials(const GroebnerBasis& gb) {
  std::vector<CommMonomial> out;
  for (const auto& g : gb.polys)
    if (leading_monomial(g).is_one()) return out;
  std::vector<int> bound(gb.nvars, -1);
  std::vector<CommMonomial> lts;
  for (const auto& g : gb.polys) lts.push_back(leading_monomial(g));
  for (std::size_t v = 0; v < gb.nvars; ++v) {
    for (const auto& lt : lts) {
      bool pure = true;
      for (std::size_t w = 0; w < gb.nvars; ++w)
        if (w != v && lt.exps[w] != 0) pure = false;
      if (pure && lt.exps[v] > 0) {
        if (bound[v] < 0 || lt.exps[v] < bound[v]) bound[v] = lt.exps[v];
      }
    }
    if (bound[v] < 0) throw std::domain_error("standard_monomials: infinite staircase");
  }
  CommMonomial m(gb.nvars);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == gb.nvars) {
      for (const auto& lt : lts)
        if (lt.divides(m)) return;
      out.push_back(m);
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      m.exps[v] = static_cast<std::uint16_t>(e);
      self(self, v + 1);
    }
    m.exps[v] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [&](const CommMonomial& a, const CommMonomial& b) { return gb.order.less(a, b); });
  return out;
}

CommPolynomial specialize_poly(const ParamCommPoly& p, const AlgebraPresentation& pres,
                               const ParamAssignment& params, const MonomialOrder& order) {
  return p.specialize(resolve_params(pres.params, params), order);
}

CommPolynomial substitute(const CommPolynomial& p, const std::vector<CommPolynomial>& images,
                          std::size_t target_nvars, const MonomialOrder& order) {
  CommPolynomial out = make_poly(order);
  for (const auto& [m, c] : p) {
    CommPolynomial term = make_poly(order);
    poly_add_term(term, CommMonomial(target_nvars), c);
    for (std::size_t v = 0; v < m.exps.size(); ++v)
      for (int e = 0; e < m.exps[v]; ++e) term = poly_mul(term, images.at(v));
    out = poly_add(out, term);
  }
  return out;
}

SubstitutionIso check_substitution_iso(const AlgebraPresentation& presA,
                                       const AlgebraPresentation& presB,
                                       const std::map<std::string, std::string>& subAtoB,
                                       const std::map<std::string, std::string>& subBtoA,
                                       const ParamAssignment& params) {
  MonomialOrder order;
  auto valsA = resolve_params(presA.params, params);
  auto valsB = resolve_params(presB.params, params);
  GroebnerBasis gbA = buchberger(presA, params, order);
  GroebnerBasis gbB = buchberger(presB, params, order);

  auto images_of = [&](const AlgebraPresentation& from, const AlgebraPresentation& to,
                       const std::map<std::string, std::string>& sub,
                       const std::vector<Rat>& to_vals) {
    std::vector<CommPolynomial> images;
    for (const auto& v : from.variables) {
      auto it = sub.find(v);
      if (it == sub.end())
        throw std::invalid_argument("substitution undefined on variable " + v);
      images.push_back(parse_algebra_polynomial(it->second, to).specialize(to_vals, order));
    }
    return images;
  };
  auto imgAB = images_of(presA, presB, subAtoB, valsB);
  auto imgBA = images_of(presB, presA, subBtoA, valsA);

  SubstitutionIso res;
  for (const auto& rel : presA.relations) {
    CommPolynomial r = rel.specialize(valsA, order);
    if (!normal_form(substitute(r, imgAB, presB.variables.size(), order), gbB).empty()) {
      res.relations_ab_ok = false;
      res.detail = "a relation of the first algebra does not map to zero";
      return res;
    }
  }
  for (const auto& rel : presB.relations) {
    CommPolynomial r = rel.specialize(valsB, order);
    if (!normal_form(substitute(r, imgBA, presA.variables.size(), order), gbA).empty()) {
      res.relations_ba_ok = false;
      res.detail = "a relation of the second algebra does not map to zero";
      return res;
    }
  }
  for (std::size_t v = 0; v < presA.variables.size(); ++v) {
    CommPolynomial round = substitute(imgAB[v], imgBA, presA.variables.size(), order);
    CommPolynomial var = make_poly(order);
    CommMonomial mv(presA.variables.size());
    mv.exps[v] = 1;
    poly_add_term(var, mv, Rat(1));
    if (!normal_form(poly_sub(round, var), gbA).empty()) {
      res.roundtrip_ok = false;
      res.detail = "round trip does not fix variable " + presA.variables[v];
      return res;
    }
  }
  for (std::size_t v = 0; v < presB.variables.size(); ++v) {
    CommPolynomial round = substitute(imgBA[v], imgAB, presB.variables.size(), order);
    CommPolynomial var = make_poly(order);
    CommMonomial mv(presB.variables.size());
    mv.exps[v] = 1;
    poly_add_term(var, mv, Rat(1));
    if (!normal_form(poly_sub(round, var), gbB).empty()) {
      res.roundtrip_ok = false;
      res.detail = "round trip does not fix variable " + presB.variables[v];
      return res;
    }
  }
  return res;
}

}  // namespace operadforge
