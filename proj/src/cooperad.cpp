#include "operadforge/cooperad.hpp"

#include <algorithm>
#include <stdexcept>

#include "operadforge/operad_engine.hpp"
#include "operadforge/presets.hpp"

namespace operadforge {

void TensorPolynomial::add_term(const std::vector<CommMonomial>& mono, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = terms.find(mono);
  if (it == terms.end()) {
    terms.emplace(mono, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

TensorPolynomial tensor_mul(const TensorPolynomial& a, const TensorPolynomial& b) {
  if (a.nfactors != b.nfactors) throw std::invalid_argument("tensor_mul: factor count mismatch");
  TensorPolynomial out;
  out.nfactors = a.nfactors;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      std::vector<CommMonomial> prod;
      prod.reserve(ma.size());
      for (std::size_t f = 0; f < ma.size(); ++f) prod.push_back(ma[f] * mb[f]);
      out.add_term(prod, ca * cb);
    }
  return out;
}

TensorPolynomial tensor_reduce(const TensorPolynomial& p,
                               const std::vector<const GroebnerBasis*>& bases) {
  if (static_cast<int>(bases.size()) != p.nfactors)
    throw std::invalid_argument("tensor_reduce: basis count mismatch");
  TensorPolynomial cur = p;
  for (int f = 0; f < p.nfactors; ++f) {
    TensorPolynomial next;
    next.nfactors = p.nfactors;
    for (const auto& [mono, c] : cur.terms) {
      CommPolynomial single = make_poly(bases[static_cast<std::size_t>(f)]->order);
      poly_add_term(single, mono[static_cast<std::size_t>(f)], c);
      CommPolynomial nf = normal_form(single, *bases[static_cast<std::size_t>(f)]);
      for (const auto& [m2, c2] : nf) {
        std::vector<CommMonomial> tuple = mono;
        tuple[static_cast<std::size_t>(f)] = m2;
        next.add_term(tuple, c2);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

namespace {

LabelSet merge_sorted(LabelSet a, const LabelSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] == a[i + 1]) throw std::invalid_argument("label sets not disjoint");
  return a;
}

bool contains(const LabelSet& s, Label l) {
  return std::binary_search(s.begin(), s.end(), l);
}

TensorPolynomial pure_tensor(const ParamCommPoly& left, const ParamCommPoly& right,
                             const std::vector<Rat>& params, const MonomialOrder& order,
                             std::size_t nv_left, std::size_t nv_right) {
  CommPolynomial l = left.specialize(params, order);
  CommPolynomial r = right.specialize(params, order);
  TensorPolynomial out;
  out.nfactors = 2;
  for (const auto& [ml, cl] : l)
    for (const auto& [mr, cr] : r) out.add_term({ml, mr}, cl * cr);
  (void)nv_left;
  (void)nv_right;
  return out;
}

}  // namespace

CocompositionMap::CocompositionMap(LabelSet i, LabelSet j) : I(std::move(i)), J(std::move(j)) {
  if (I.empty() || J.empty())
    throw std::invalid_argument("CocompositionMap: blocks must be nonempty");
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  for (const auto& l : I)
    if (l.star) throw std::invalid_argument("CocompositionMap: slot label not allowed in I");
  source = merge_sorted(I, J);
  left_labels = with_slot(I);
}

TensorPolynomial CocompositionMap::generator_image(int family, Label u, Label v,
                                                   const std::vector<Rat>& params,
                                                   const MonomialOrder& order) const {
  if (u == v) throw std::invalid_argument("generator needs distinct labels");
  if (!contains(source, u) || !contains(source, v))
    throw std::invalid_argument("generator label outside I u J");
  std::size_t nvL = 2 * (left_labels.size() * (left_labels.size() - 1) / 2);
  std::size_t nvR = 2 * (J.size() * (J.size() - 1) / 2);
  ParamCommPoly oneL = pcp_const(ParamPoly::constant(Rat(1)), nvL);
  ParamCommPoly oneR = pcp_const(ParamPoly::constant(Rat(1)), nvR);
  bool uI = contains(I, u), vI = contains(I, v);
  if (uI && vI)
    return pure_tensor(gv2_generator(left_labels, family, u, v), oneR, params, order, nvL, nvR);
  if (!uI && !vI)
    return pure_tensor(oneL, gv2_generator(J, family, u, v), params, order, nvL, nvR);
  if (uI && !vI)
    return pure_tensor(gv2_generator(left_labels, family, u, Label::slot()), oneR, params, order,
                       nvL, nvR);
  return pure_tensor(gv2_generator(left_labels, family, Label::slot(), v), oneR, params, order,
                     nvL, nvR);
}

TensorPolynomial rho_image(const CocompositionMap& map, const CommPolynomial& p,
                           const ParamAssignment& params) {
  MonomialOrder order;
  std::vector<Rat> pv = resolve_params({"h1", "h2"}, params);
  TensorPolynomial out;
  out.nfactors = 2;
  std::size_t nvars_expected = 2 * (map.source.size() * (map.source.size() - 1) / 2);
  std::size_t nvL = 2 * (map.left_labels.size() * (map.left_labels.size() - 1) / 2);
  std::size_t nvR = 2 * (map.J.size() * (map.J.size() - 1) / 2);
  for (const auto& [mono, c] : p) {
    if (mono.exps.size() != nvars_expected)
      throw std::invalid_argument("rho_image: polynomial over wrong variable set");
    TensorPolynomial term;
    term.nfactors = 2;
    term.add_term({CommMonomial(nvL), CommMonomial(nvR)}, c);
    for (std::size_t v = 0; v < mono.exps.size(); ++v)
      for (int e = 0; e < mono.exps[v]; ++e) {
        Gv2Var gv = gv2_var_decode(map.source, static_cast<int>(v));
        term = tensor_mul(term, map.generator_image(gv.family,
                                                    map.source[static_cast<std::size_t>(gv.p)],
                                                    map.source[static_cast<std::size_t>(gv.q)],
                                                    pv, order));
      }
    for (const auto& [tuple, tc] : term.terms) out.add_term(tuple, tc);
  }
  return out;
}

namespace {

struct Gv2Checker {
  LabelSet labels;
  std::vector<Rat> pv;
  MonomialOrder order;
  Rat h1, h2;

  // relation instances over ordered label pairs/triples, expressed through a
  // generator-image callback returning tensor polynomials
  template <class Img>
  bool relations_vanish(const Img& img, const std::vector<const GroebnerBasis*>& bases,
                        int nfactors) const {
    auto one = [&]() {
      TensorPolynomial t;
      t.nfactors = nfactors;
      std::vector<CommMonomial> unit;
      for (const auto* gb : bases) unit.emplace_back(gb->nvars);
      t.add_term(unit, Rat(1));
      return t;
    };
    auto scale = [](TensorPolynomial t, const Rat& c) {
      for (auto& [m, v] : t.terms) v *= c;
      if (sgn(c) == 0) t.terms.clear();
      return t;
    };
    auto add = [](TensorPolynomial a, const TensorPolynomial& b) {
      for (const auto& [m, v] : b.terms) a.add_term(m, v);
      return a;
    };
    auto zero = [&](const TensorPolynomial& t) { return tensor_reduce(t, bases).is_zero(); };

    int n = static_cast<int>(labels.size());
    // pair families, both orders
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        Label u = labels[static_cast<std::size_t>(a)], v = labels[static_cast<std::size_t>(b)];
        auto X = img(0, u, v), Y = img(1, u, v);
        auto Xr = img(0, v, u), Yr = img(1, v, u);
        // symmetry: x_uv + x_vu = h1, y_uv + y_vu = h2
        if (!zero(add(add(X, Xr), scale(one(), -h1)))) return false;
        if (!zero(add(add(Y, Yr), scale(one(), -h2)))) return false;
        // squares and the mixed pair relation
        if (!zero(add(tensor_mul(X, X), scale(X, -h1)))) return false;
        if (!zero(add(tensor_mul(Y, Y), scale(Y, -h2)))) return false;
        if (!zero(add(scale(tensor_mul(X, Y), Rat(2)),
                      add(scale(X, -h2), scale(Y, -h1)))))
          return false;
      }
    // triangle families over ordered triples
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (a == b || b == c || a == c) continue;
          Label i = labels[static_cast<std::size_t>(a)];
          Label j = labels[static_cast<std::size_t>(b)];
          Label k = labels[static_cast<std::size_t>(c)];
          auto Xij = img(0, i, j), Xjk = img(0, j, k), Xik = img(0, i, k);
          auto Yij = img(1, i, j), Yjk = img(1, j, k), Yik = img(1, i, k);
          // x_ij x_jk + h1 x_ik - x_ij x_ik - x_jk x_ik
          if (!zero(add(add(tensor_mul(Xij, Xjk), scale(Xik, h1)),
                        add(scale(tensor_mul(Xij, Xik), Rat(-1)),
                            scale(tensor_mul(Xjk, Xik), Rat(-1))))))
            return false;
          if (!zero(add(add(tensor_mul(Yij, Yjk), scale(Yik, h2)),
                        add(scale(tensor_mul(Yij, Yik), Rat(-1)),
                            scale(tensor_mul(Yjk, Yik), Rat(-1))))))
            return false;
          // mixed triangle
          auto lhs = add(add(tensor_mul(Xij, Yjk), tensor_mul(Yij, Xjk)),
                         add(scale(Xik, h2), scale(Yik, h1)));
          auto rhs = add(add(tensor_mul(Xij, Yik), tensor_mul(Yij, Xik)),
                         add(tensor_mul(Xjk, Yik), tensor_mul(Yjk, Xik)));
          if (!zero(add(lhs, scale(rhs, Rat(-1))))) return false;
        }
    return true;
  }
};

}  // namespace

bool rho_well_defined(const LabelSet& I, const LabelSet& J, const ParamAssignment& params) {
  CocompositionMap map(I, J);
  MonomialOrder order;
  GroebnerBasis gbL = buchberger(build_gv2(map.left_labels), params, order);
  GroebnerBasis gbR = buchberger(build_gv2(map.J), params, order);
  std::vector<const GroebnerBasis*> bases = {&gbL, &gbR};

  Gv2Checker chk;
  chk.labels = map.source;
  chk.pv = resolve_params({"h1", "h2"}, params);
  chk.h1 = chk.pv[0];
  chk.h2 = chk.pv[1];
  auto img = [&](int family, Label u, Label v) {
    return map.generator_image(family, u, v, chk.pv, order);
  };
  return chk.relations_vanish(img, bases, 2);
}

namespace {

// Applies a cocomposition map to one factor of a tensor polynomial,
// replacing that factor by two.
TensorPolynomial expand_factor(const TensorPolynomial& p, int factor, const CocompositionMap& map,
                               const std::vector<Rat>& pv, const MonomialOrder& order) {
  TensorPolynomial out;
  out.nfactors = p.nfactors + 1;
  std::size_t nvL = 2 * (map.left_labels.size() * (map.left_labels.size() - 1) / 2);
  std::size_t nvR = 2 * (map.J.size() * (map.J.size() - 1) / 2);
  for (const auto& [mono, c] : p.terms) {
    TensorPolynomial img;
    img.nfactors = 2;
    img.add_term({CommMonomial(nvL), CommMonomial(nvR)}, Rat(1));
    const CommMonomial& m = mono[static_cast<std::size_t>(factor)];
    for (std::size_t v = 0; v < m.exps.size(); ++v)
      for (int e = 0; e < m.exps[v]; ++e) {
        Gv2Var gv = gv2_var_decode(map.source, static_cast<int>(v));
        img = tensor_mul(img, map.generator_image(gv.family,
                                                  map.source[static_cast<std::size_t>(gv.p)],
                                                  map.source[static_cast<std::size_t>(gv.q)], pv,
                                                  order));
      }
    for (const auto& [pair2, c2] : img.terms) {
      std::vector<CommMonomial> tuple;
      for (int f = 0; f < p.nfactors; ++f) {
        if (f == factor) {
          tuple.push_back(pair2[0]);
          tuple.push_back(pair2[1]);
        } else {
          tuple.push_back(mono[static_cast<std::size_t>(f)]);
        }
      }
      out.add_term(tuple, c * c2);
    }
  }
  return out;
}

}  // namespace

bool coassociativity_check(int size_i, int size_j, int size_k, const ParamAssignment& params) {
  if (size_i < 1 || size_j < 1 || size_k < 1)
    throw std::invalid_argument("coassociativity_check: block sizes must be positive");
  int n = size_i + size_j + size_k;
  if (n > 5) throw std::invalid_argument("coassociativity_check: total size over cap");
  MonomialOrder order;
  std::vector<Rat> pv = resolve_params({"h1", "h2"}, params);

  LabelSet I, J, K;
  for (int t = 1; t <= size_i; ++t) I.push_back(Label::of(t));
  for (int t = size_i + 1; t <= size_i + size_j; ++t) J.push_back(Label::of(t));
  for (int t = size_i + size_j + 1; t <= n; ++t) K.push_back(Label::of(t));
  LabelSet JK = merge_sorted(J, K);
  LabelSet IJ = merge_sorted(I, J);
  LabelSet all = merge_sorted(IJ, K);

  CocompositionMap mapA1(I, JK);        // -> GV2(I+slot) (x) GV2(J u K)
  CocompositionMap mapA2(J, K);         // second factor -> GV2(J+slot) (x) GV2(K)
  CocompositionMap mapB1(IJ, K);        // -> GV2(I u J + slot) (x) GV2(K)
  CocompositionMap mapB2(I, with_slot(J));  // first factor -> GV2(I+slot) (x) GV2(J+slot)

  GroebnerBasis gb1 = buchberger(build_gv2(with_slot(I)), params, order);
  GroebnerBasis gb2 = buchberger(build_gv2(with_slot(J)), params, order);
  GroebnerBasis gb3 = buchberger(build_gv2(K), params, order);
  std::vector<const GroebnerBasis*> bases = {&gb1, &gb2, &gb3};

  for (int family = 0; family < 2; ++family)
    for (const Label& u : all)
      for (const Label& v : all) {
        if (u == v) continue;
        TensorPolynomial a1 = mapA1.generator_image(family, u, v, pv, order);
        TensorPolynomial pathA = expand_factor(a1, 1, mapA2, pv, order);
        TensorPolynomial b1 = mapB1.generator_image(family, u, v, pv, order);
        TensorPolynomial pathB = expand_factor(b1, 0, mapB2, pv, order);
        if (!(tensor_reduce(pathA, bases) == tensor_reduce(pathB, bases))) return false;
      }
  return true;
}

DimMatch dim_match_operad(int n, const ParamAssignment& params) {
  MonomialOrder order;
  GroebnerBasis gb = buchberger(build_gv2(int_labels(n)), params, order);
  auto adim = algebra_dimension(gb);
  OperadEngine eng(operad_preset("ll2"), params);
  DimMatch out;
  out.algebra_dim = adim ? *adim : -1;
  out.operad_dim = eng.dim(n);
  out.equal = adim.has_value() && out.algebra_dim == out.operad_dim;
  return out;
}

}  // namespace operadforge
