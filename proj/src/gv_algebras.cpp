#include "operadforge/gv_algebras.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "operadforge/parser.hpp"

namespace operadforge {

std::string Label::token() const {
  if (star) return "s";
  if (value < 1 || value > 9) throw std::invalid_argument("label out of range for naming");
  return std::to_string(value);
}

LabelSet int_labels(int n) {
  LabelSet out;
  for (int i = 1; i <= n; ++i) out.push_back(Label::of(i));
  return out;
}

LabelSet with_slot(LabelSet labels) {
  labels.push_back(Label::slot());
  std::sort(labels.begin(), labels.end());
  return labels;
}

namespace {

using Work = std::map<CommMonomial, ParamPoly>;

ParamCommPoly from_work(const Work& w) {
  ParamCommPoly out;
  for (const auto& [m, c] : w)
    if (!c.is_zero()) out.terms.emplace_back(m, c);
  return out;
}

Work to_work(const ParamCommPoly& p) {
  Work w;
  for (const auto& [m, c] : p.terms) {
    if (c.is_zero()) continue;
    auto it = w.find(m);
    if (it == w.end())
      w.emplace(m, c);
    else {
      it->second = it->second + c;
      if (it->second.is_zero()) w.erase(it);
    }
  }
  return w;
}

void work_add(Work& w, const CommMonomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto it = w.find(m);
  if (it == w.end())
    w.emplace(m, c);
  else {
    it->second = it->second + c;
    if (it->second.is_zero()) w.erase(it);
  }
}

}  // namespace

ParamCommPoly pcp_zero() { return {}; }

ParamCommPoly pcp_const(const ParamPoly& c, std::size_t nvars) {
  ParamCommPoly p;
  if (!c.is_zero()) p.terms.emplace_back(CommMonomial(nvars), c);
  return p;
}

ParamCommPoly pcp_var(std::size_t v, std::size_t nvars) {
  ParamCommPoly p;
  CommMonomial m(nvars);
  m.exps.at(v) = 1;
  p.terms.emplace_back(m, ParamPoly::constant(Rat(1)));
  return p;
}

ParamCommPoly pcp_add(const ParamCommPoly& a, const ParamCommPoly& b) {
  Work w = to_work(a);
  for (const auto& [m, c] : b.terms) work_add(w, m, c);
  return from_work(w);
}

ParamCommPoly pcp_sub(const ParamCommPoly& a, const ParamCommPoly& b) {
  Work w = to_work(a);
  for (const auto& [m, c] : b.terms) work_add(w, m, -c);
  return from_work(w);
}

ParamCommPoly pcp_mul(const ParamCommPoly& a, const ParamCommPoly& b) {
  Work w;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) work_add(w, ma * mb, ca * cb);
  return from_work(w);
}

ParamCommPoly pcp_scale(const ParamCommPoly& a, const ParamPoly& c) {
  Work w;
  for (const auto& [m, v] : a.terms) work_add(w, m, v * c);
  return from_work(w);
}

namespace {

struct PairTable {
  // variables: family-major, pairs (p,q) p<q in lexicographic order
  int n = 0;
  int pairs_per_family = 0;

  int index(int family, int p, int q) const {
    if (p > q) std::swap(p, q);
    int k = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (a == p && b == q) return family * pairs_per_family + k;
        ++k;
      }
    throw std::out_of_range("pair index");
  }
};

int position_of(const LabelSet& labels, Label l) {
  auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || !(*it == l)) throw std::invalid_argument("label not in set");
  return static_cast<int>(it - labels.begin());
}

// Ordered generator as eliminated polynomial. sign_flip selects the skew
// convention (g_qp = -g_pq) instead of g_qp = h - g_pq.
ParamCommPoly ordered_generator(const PairTable& pt, std::size_t nvars, int family, int p, int q,
                                std::size_t nparams, bool skew) {
  if (p == q) throw std::invalid_argument("generator needs distinct labels");
  std::size_t v = static_cast<std::size_t>(pt.index(family, p, q));
  ParamCommPoly var = pcp_var(v, nvars);
  if (p < q) return var;
  if (skew) return pcp_scale(var, ParamPoly::constant(Rat(-1)));
  ParamPoly h = ParamPoly::param(static_cast<std::size_t>(family), nparams);
  return pcp_sub(pcp_const(h, nvars), var);
}

std::vector<std::string> pair_var_names(const LabelSet& labels, const char* fam0,
                                        const char* fam1) {
  std::vector<std::string> names;
  int n = static_cast<int>(labels.size());
  for (const char* f : {fam0, fam1}) {
    if (f == nullptr) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        names.push_back(std::string(f) + labels[static_cast<std::size_t>(p)].token() +
                        labels[static_cast<std::size_t>(q)].token());
  }
  return names;
}

void append_unique(std::vector<ParamCommPoly>& rels, const ParamCommPoly& r) {
  if (r.structurally_zero()) return;
  for (const auto& e : rels)
    if (e.terms == r.terms) return;
  rels.push_back(r);
}

}  // namespace

int gv2_var_index(const LabelSet& labels, int family, int p, int q) {
  PairTable pt{static_cast<int>(labels.size()),
               static_cast<int>(labels.size() * (labels.size() - 1) / 2)};
  return pt.index(family, p, q);
}

Gv2Var gv2_var_decode(const LabelSet& labels, int var_index) {
  int n = static_cast<int>(labels.size());
  int per = n * (n - 1) / 2;
  Gv2Var out;
  out.family = var_index / per;
  int k = var_index % per;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (k == 0) {
        out.p = p;
        out.q = q;
        return out;
      }
      --k;
    }
  throw std::out_of_range("gv2_var_decode");
}

ParamCommPoly gv2_generator(const LabelSet& labels, int family, Label u, Label v) {
  PairTable pt{static_cast<int>(labels.size()),
               static_cast<int>(labels.size() * (labels.size() - 1) / 2)};
  std::size_t nvars = static_cast<std::size_t>(2 * pt.pairs_per_family);
  return ordered_generator(pt, nvars, family, position_of(labels, u), position_of(labels, v), 2,
                           false);
}

ParamCommPoly gv2alt_generator(const LabelSet& labels, int family, Label u, Label v) {
  PairTable pt{static_cast<int>(labels.size()),
               static_cast<int>(labels.size() * (labels.size() - 1) / 2)};
  std::size_t nvars = static_cast<std::size_t>(2 * pt.pairs_per_family);
  return ordered_generator(pt, nvars, family, position_of(labels, u), position_of(labels, v), 2,
                           true);
}

AlgebraPresentation build_gv2(const LabelSet& labels) {
  int n = static_cast<int>(labels.size());
  if (n < 1) throw std::invalid_argument("build_gv2: empty label set");
  for (int i = 0; i + 1 < n; ++i)
    if (!(labels[static_cast<std::size_t>(i)] < labels[static_cast<std::size_t>(i + 1)]))
      throw std::invalid_argument("build_gv2: labels must be sorted and distinct");

  AlgebraPresentation pres;
  pres.name = "gv2_" + std::to_string(n);
  pres.params = {"h1", "h2"};
  pres.variables = pair_var_names(labels, "x", "y");
  PairTable pt{n, n * (n - 1) / 2};
  std::size_t nvars = pres.variables.size();
  auto X = [&](int p, int q) { return ordered_generator(pt, nvars, 0, p, q, 2, false); };
  auto Y = [&](int p, int q) { return ordered_generator(pt, nvars, 1, p, q, 2, false); };
  ParamPoly h1 = ParamPoly::param(0, 2), h2 = ParamPoly::param(1, 2);

  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      auto x = X(p, q), y = Y(p, q);
      append_unique(pres.relations, pcp_sub(pcp_mul(x, x), pcp_scale(x, h1)));
      append_unique(pres.relations, pcp_sub(pcp_mul(y, y), pcp_scale(y, h2)));
      append_unique(pres.relations,
                    pcp_sub(pcp_scale(pcp_mul(x, y), ParamPoly::constant(Rat(2))),
                            pcp_add(pcp_scale(x, h2), pcp_scale(y, h1))));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        auto xt = pcp_sub(pcp_add(pcp_mul(X(i, j), X(j, k)), pcp_scale(X(i, k), h1)),
                          pcp_add(pcp_mul(X(i, j), X(i, k)), pcp_mul(X(j, k), X(i, k))));
        append_unique(pres.relations, xt);
        auto yt = pcp_sub(pcp_add(pcp_mul(Y(i, j), Y(j, k)), pcp_scale(Y(i, k), h2)),
                          pcp_add(pcp_mul(Y(i, j), Y(i, k)), pcp_mul(Y(j, k), Y(i, k))));
        append_unique(pres.relations, yt);
        auto mt = pcp_sub(
            pcp_add(pcp_add(pcp_mul(X(i, j), Y(j, k)), pcp_mul(Y(i, j), X(j, k))),
                    pcp_add(pcp_scale(X(i, k), h2), pcp_scale(Y(i, k), h1))),
            pcp_add(pcp_add(pcp_mul(X(i, j), Y(i, k)), pcp_mul(Y(i, j), X(i, k))),
                    pcp_add(pcp_mul(X(j, k), Y(i, k)), pcp_mul(Y(j, k), X(i, k)))));
        append_unique(pres.relations, mt);
      }
  pres.validate();
  return pres;
}

AlgebraPresentation build_gv(int n) {
  if (n < 1) throw std::invalid_argument("build_gv: need n >= 1");
  LabelSet labels = int_labels(n);
  AlgebraPresentation pres;
  pres.name = "gv_" + std::to_string(n);
  pres.params = {"h"};
  pres.variables = pair_var_names(labels, "x", nullptr);
  PairTable pt{n, n * (n - 1) / 2};
  std::size_t nvars = pres.variables.size();
  auto X = [&](int p, int q) { return ordered_generator(pt, nvars, 0, p, q, 1, false); };
  ParamPoly h = ParamPoly::param(0, 1);

  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      auto x = X(p, q);
      append_unique(pres.relations, pcp_sub(pcp_mul(x, x), pcp_scale(x, h)));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        auto t = pcp_sub(pcp_add(pcp_mul(X(i, j), X(j, k)), pcp_scale(X(i, k), h)),
                         pcp_add(pcp_mul(X(i, j), X(i, k)), pcp_mul(X(j, k), X(i, k))));
        append_unique(pres.relations, t);
      }
  pres.validate();
  return pres;
}

AlgebraPresentation build_gv2alt(int n) {
  if (n < 1) throw std::invalid_argument("build_gv2alt: need n >= 1");
  LabelSet labels = int_labels(n);
  AlgebraPresentation pres;
  pres.name = "gv2alt_" + std::to_string(n);
  pres.params = {"h1", "h2"};
  pres.variables = pair_var_names(labels, "a", "b");
  PairTable pt{n, n * (n - 1) / 2};
  std::size_t nvars = pres.variables.size();
  auto A = [&](int p, int q) { return ordered_generator(pt, nvars, 0, p, q, 2, true); };
  auto B = [&](int p, int q) { return ordered_generator(pt, nvars, 1, p, q, 2, true); };
  ParamPoly h1 = ParamPoly::param(0, 2), h2 = ParamPoly::param(1, 2);
  ParamPoly h1h1 = h1 * h1, h2h2 = h2 * h2, h1h2 = h1 * h2;

  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      auto a = A(p, q), b = B(p, q);
      append_unique(pres.relations, pcp_sub(pcp_mul(a, a), pcp_const(h1h1, nvars)));
      append_unique(pres.relations, pcp_sub(pcp_mul(b, b), pcp_const(h2h2, nvars)));
      append_unique(pres.relations, pcp_sub(pcp_mul(a, b), pcp_const(h1h2, nvars)));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        auto cyc_aa = pcp_add(pcp_add(pcp_mul(A(i, j), A(j, k)), pcp_mul(A(j, k), A(k, i))),
                              pcp_mul(A(k, i), A(i, j)));
        append_unique(pres.relations, pcp_sub(cyc_aa, pcp_const(h1h1, nvars)));
        auto cyc_bb = pcp_add(pcp_add(pcp_mul(B(i, j), B(j, k)), pcp_mul(B(j, k), B(k, i))),
                              pcp_mul(B(k, i), B(i, j)));
        append_unique(pres.relations, pcp_sub(cyc_bb, pcp_const(h2h2, nvars)));
        auto mixed = pcp_add(
            pcp_add(pcp_add(pcp_mul(A(i, j), B(j, k)), pcp_mul(B(i, j), A(j, k))),
                    pcp_add(pcp_mul(A(j, k), B(k, i)), pcp_mul(B(j, k), A(k, i)))),
            pcp_add(pcp_mul(A(k, i), B(i, j)), pcp_mul(B(k, i), A(i, j))));
        append_unique(pres.relations,
                      pcp_sub(mixed, pcp_const(h1h2 * ParamPoly::constant(Rat(2)), nvars)));
      }
  pres.validate();
  return pres;
}

std::string gv_preset_text(int n) { return print_algebra_presentation(build_gv(n)); }
std::string gv2_preset_text(int n) { return print_algebra_presentation(build_gv2(int_labels(n))); }
std::string gv2alt_preset_text(int n) { return print_algebra_presentation(build_gv2alt(n)); }

}  // namespace operadforge
