#include "operadforge/operad_engine.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace operadforge {

OperadEngine::OperadEngine(OperadPresentation pres, const ParamAssignment& params, int exact_cap,
                           int arity_cap)
    : pres_(std::move(pres)), exact_cap_(exact_cap), arity_cap_(arity_cap) {
  pres_.validate();
  param_values_ = resolve_params(pres_.params, params);
  if (exact_cap_ > arity_cap_) throw std::invalid_argument("exact cap exceeds arity cap");
}

const std::vector<TreeMonomial>& OperadEngine::basis(int n) {
  auto it = bases_.find(n);
  if (it == bases_.end())
    it = bases_.emplace(n, enumerate_basis(pres_.generators, n, arity_cap_)).first;
  return it->second;
}

long OperadEngine::dim_free(int n) { return static_cast<long>(basis(n).size()); }

int OperadEngine::basis_index(int n, const TreeMonomial& m) {
  const auto& b = basis(n);
  auto it = std::lower_bound(b.begin(), b.end(), m);
  if (it == b.end() || !(*it == m)) throw std::logic_error("basis_index: monomial not in basis");
  return static_cast<int>(it - b.begin());
}

LinearCombination OperadEngine::specialize(const Element& el) const {
  return specialize_element(el, pres_.generators, param_values_);
}

std::vector<RatMatrix::Row> OperadEngine::seed_rows() {
  std::vector<RatMatrix::Row> rows;
  const auto perms = all_permutations(3);
  for (const auto& rel : pres_.relations) {
    LinearCombination base = specialize(rel);
    if (base.is_zero()) continue;
    base.arity = 3;
    for (const auto& sigma : perms) {
      LinearCombination img = act(sigma, base, pres_.generators);
      RatMatrix::Row row;
      for (const auto& [m, c] : img.terms)
        row.emplace_back(basis_index(3, m), c);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

// One arity step of the ideal closure. For an S_m-stable span V the arity
// m+1 component of the ideal it generates is spanned by
//   (a) g composed with V, the free leaf carrying each label l, and
//   (b) V with a generator grafted at one leaf, the new pair carrying each
//       ordered label pair (p, q),
// with the remaining labels filled in increasing order; stability of V makes
// every other relabeling a combination of these. Each op is a signed index
// map on basis monomials, so rows transform by table lookup.
const std::vector<OperadEngine::OpTable>& OperadEngine::transition_ops(int m) {
  auto found = ops_.find(m);
  if (found != ops_.end()) return found->second;

  const auto& src = basis(m);
  const auto& sig = pres_.generators;
  std::vector<OpTable> tables;

  auto table_from = [&](auto&& raw_of) {
    OpTable t;
    t.map.reserve(src.size());
    for (const auto& b : src) {
      SignedMonomial sm = canonical_form(raw_of(b), sig);
      t.map.emplace_back(basis_index(m + 1, sm.mono), static_cast<std::int8_t>(sm.sign));
    }
    return t;
  };

  for (std::size_t g = 0; g < sig.size(); ++g) {
    const bool nonsym = sig[g].symmetry == Symmetry::NonSym;
    for (int l = 1; l <= m + 1; ++l) {
      // relabel b into {1..m+1} \ {l}, then attach the lone leaf l under g
      auto relabeled = [&](const TreeMonomial& b) {
        TreeMonomial r = b;
        for (auto& c : r.code)
          if (c > 0 && c >= l) c = static_cast<std::int16_t>(c + 1);
        return r;
      };
      tables.push_back(table_from([&](const TreeMonomial& b) {
        return TreeMonomial::node(static_cast<int>(g), relabeled(b), TreeMonomial::leaf(l));
      }));
      if (nonsym)
        tables.push_back(table_from([&](const TreeMonomial& b) {
          return TreeMonomial::node(static_cast<int>(g), TreeMonomial::leaf(l), relabeled(b));
        }));
    }
    for (int p = 1; p <= m + 1; ++p) {
      for (int q = p + 1; q <= m + 1; ++q) {
        std::vector<int> comp;
        for (int x = 1; x <= m + 1; ++x)
          if (x != p && x != q) comp.push_back(x);
        auto graft = [&, p, q](const TreeMonomial& b, bool swap_pq) {
          TreeMonomial raw;
          raw.code.reserve(b.code.size() + 2);
          for (auto c : b.code) {
            if (c <= 0) {
              raw.code.push_back(c);
            } else if (c == 1) {
              raw.code.push_back(static_cast<std::int16_t>(-(static_cast<int>(g) + 1)));
              raw.code.push_back(static_cast<std::int16_t>(swap_pq ? q : p));
              raw.code.push_back(static_cast<std::int16_t>(swap_pq ? p : q));
            } else {
              raw.code.push_back(static_cast<std::int16_t>(comp[static_cast<std::size_t>(c - 2)]));
            }
          }
          return raw;
        };
        tables.push_back(table_from([&](const TreeMonomial& b) { return graft(b, false); }));
        if (nonsym)
          tables.push_back(table_from([&](const TreeMonomial& b) { return graft(b, true); }));
      }
    }
  }
  return ops_.emplace(m, std::move(tables)).first->second;
}

namespace {

template <class F>
typename SparseMatrix<F>::Row apply_table(
    const std::vector<std::pair<std::int32_t, std::int8_t>>& map,
    const typename SparseMatrix<F>::Row& row, const F& field) {
  typename SparseMatrix<F>::Row out;
  out.reserve(row.size());
  for (const auto& [i, v] : row) {
    const auto& [dst, sign] = map[static_cast<std::size_t>(i)];
    out.emplace_back(dst, sign > 0 ? v : field.neg(v));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

const IdealBasis& OperadEngine::ideal(int n) {
  if (n < 3) throw std::invalid_argument("ideal: arity must be >= 3");
  if (n > exact_cap_) throw std::invalid_argument("ideal: arity over exact cap");
  auto found = ideals_.find(n);
  if (found != ideals_.end()) return found->second;

  RationalField F;
  Echelon<RationalField> ech(F, static_cast<int>(basis(n).size()));
  if (n == 3) {
    auto rows = seed_rows();
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      return a.size() < b.size();
    });
    for (const auto& r : rows) ech.insert(r);
  } else {
    const IdealBasis& prev = ideal(n - 1);
    const auto& tables = transition_ops(n - 1);
    for (const auto& row : prev.matrix.rows)
      for (const auto& t : tables) ech.insert(apply_table<RationalField>(t.map, row, F));
  }
  ech.make_rref();
  IdealBasis ib;
  ib.arity = n;
  ib.pivots = ech.pivot_cols_sorted();
  ib.matrix = ech.to_matrix();
  return ideals_.emplace(n, std::move(ib)).first->second;
}

long OperadEngine::dim(int n) {
  if (n < 1) throw std::invalid_argument("dim: arity must be positive");
  if (n <= 2) return dim_free(n);
  return dim_free(n) - ideal(n).rank();
}

ModularDimension OperadEngine::dim_modular(int n, const std::vector<std::uint64_t>& primes) {
  if (n < 3) throw std::invalid_argument("dim_modular: arity must be >= 3");
  if (n > arity_cap_) throw std::invalid_argument("dim_modular: arity over cap");
  if (primes.size() < 2) throw std::invalid_argument("dim_modular: need at least 2 primes");

  ModularDimension out;
  out.arity = n;
  out.dim_free = dim_free(n);

  auto rat_seeds = seed_rows();
  for (std::uint64_t p : primes) {
    PrimeField f(p);
    bool usable = true;
    std::vector<FpMatrix::Row> rows;
    for (const auto& r : rat_seeds) {
      FpMatrix::Row row;
      for (const auto& [c, v] : r) {
        auto e = f.from_rat(v);
        if (!e) {
          usable = false;
          break;
        }
        if (*e != 0) row.emplace_back(c, *e);
      }
      if (!usable) break;
      if (!row.empty()) rows.push_back(std::move(row));
    }
    if (!usable) {
      out.skipped_primes.push_back(p);
      continue;
    }
    int rank_p = 0;
    for (int m = 3; m <= n; ++m) {
      Echelon<PrimeField> ech(f, static_cast<int>(basis(m).size()));
      for (const auto& r : rows) ech.insert(r);
      rank_p = ech.rank();
      if (m == n) break;
      ech.make_rref();
      const auto& tables = transition_ops(m);
      std::vector<FpMatrix::Row> next;
      next.reserve(ech.rows().size() * tables.size());
      for (const auto& row : ech.rows())
        for (const auto& t : tables) next.push_back(apply_table<PrimeField>(t.map, row, f));
      rows = std::move(next);
    }
    out.per_prime.emplace_back(p, rank_p);
  }

  for (const auto& [p, r] : out.per_prime) out.rank = std::max(out.rank, r);
  if (out.per_prime.size() >= 2) {
    auto sorted = out.per_prime;
    std::sort(sorted.begin(), sorted.end());
    out.stable = sorted[sorted.size() - 1].second == sorted[sorted.size() - 2].second;
  }
  out.dim = out.dim_free - out.rank;
  return out;
}

bool OperadEngine::in_ideal(const LinearCombination& element) {
  if (element.is_zero()) return true;
  int n = element.arity;
  if (n < 3) return false;
  if (n > exact_cap_) throw std::invalid_argument("in_ideal: arity over exact cap");
  const IdealBasis& ib = ideal(n);
  std::vector<Rat> dense(static_cast<std::size_t>(ib.matrix.ncols), Rat(0));
  for (const auto& [m, c] : element.terms)
    dense[static_cast<std::size_t>(basis_index(n, m))] = c;
  return in_row_space(ib.matrix, dense);
}

bool OperadEngine::in_ideal(const Element& element) { return in_ideal(specialize(element)); }

Rat OperadEngine::character(int n, const Permutation& sigma) {
  if (sigma.n() != n) throw std::invalid_argument("character: permutation size mismatch");
  if (n > exact_cap_) throw std::invalid_argument("character: arity over exact cap");
  if (n <= 0) throw std::invalid_argument("character: arity must be positive");
  const auto& b = basis(n);
  // action of sigma as a signed index map
  std::vector<std::pair<int, int>> table(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    SignedMonomial sm = relabel(b[i], sigma, pres_.generators);
    table[i] = {basis_index(n, sm.mono), sm.sign};
  }
  Rat chi_free(0);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (table[i].first == static_cast<int>(i)) chi_free += table[i].second;
  if (n <= 2) return chi_free;

  const IdealBasis& ib = ideal(n);
  Rat chi_ideal(0);
  for (std::size_t j = 0; j < ib.matrix.rows.size(); ++j) {
    int pivot = ib.pivots[j];
    for (const auto& [i, v] : ib.matrix.rows[j])
      if (table[static_cast<std::size_t>(i)].first == pivot)
        chi_ideal += Rat(table[static_cast<std::size_t>(i)].second) * v;
  }
  return chi_free - chi_ideal;
}

IdealBasis expand_ideal(const OperadPresentation& pres, const ParamAssignment& params, int n,
                        int arity_cap) {
  OperadEngine eng(pres, params, std::max(n, 3), std::max(arity_cap, n));
  return eng.ideal(n);
}

ComponentReport component_dimension(const OperadPresentation& pres, const ParamAssignment& params,
                                    int n, FieldMode mode,
                                    const std::vector<std::uint64_t>& primes) {
  auto t0 = std::chrono::steady_clock::now();
  ComponentReport rep;
  rep.preset = pres.name;
  rep.params = params.to_string();
  rep.n = n;
  if (mode == FieldMode::Exact || n <= 2) {
    OperadEngine eng(pres, params, std::max(n, 3));
    rep.dim_free = eng.dim_free(n);
    rep.dim = eng.dim(n);
    rep.rank_ideal = static_cast<int>(rep.dim_free - rep.dim);
    rep.field = "rational";
    rep.stable = true;
  } else {
    std::vector<std::uint64_t> ps = primes.empty() ? default_rank_primes() : primes;
    OperadEngine eng(pres, params, std::min(n, 4), std::max(n, kDefaultArityCap));
    ModularDimension md = eng.dim_modular(n, ps);
    rep.dim_free = md.dim_free;
    rep.rank_ideal = md.rank;
    rep.dim = md.dim;
    rep.stable = md.stable;
    std::ostringstream os;
    os << "mod ";
    for (std::size_t i = 0; i < md.per_prime.size(); ++i)
      os << (i ? "," : "") << md.per_prime[i].first;
    rep.field = os.str();
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

namespace {

struct SubstResult {
  LinearCombination lc;       // standard labels 1..k
  std::vector<int> letters;   // ascending original letters; letters[t-1] <-> label t
};

SubstResult substitute_tree(const TreeMonomial& tree, std::size_t pos,
                            const std::vector<const LinearCombination*>& images,
                            const Signature& target_sig, std::size_t* end_out) {
  if (tree.code[pos] > 0) {
    SubstResult r;
    r.lc.arity = 1;
    r.lc.add_term(TreeMonomial::leaf(1), Rat(1));
    r.letters = {static_cast<int>(tree.code[pos])};
    *end_out = pos + 1;
    return r;
  }
  int g = -tree.code[pos] - 1;
  std::size_t mid = 0, end = 0;
  SubstResult a = substitute_tree(tree, pos + 1, images, target_sig, &mid);
  SubstResult b = substitute_tree(tree, mid, images, target_sig, &end);
  *end_out = end;

  const LinearCombination& img = *images[static_cast<std::size_t>(g)];
  int ka = a.lc.arity, kb = b.lc.arity;
  LinearCombination plugged = compose(compose(img, 1, a.lc, target_sig), ka + 1, b.lc, target_sig);

  // merge letters; relabel positions to the rank of their letters
  std::vector<int> combined = a.letters;
  combined.insert(combined.end(), b.letters.begin(), b.letters.end());
  std::vector<int> sorted_letters = combined;
  std::sort(sorted_letters.begin(), sorted_letters.end());
  Permutation sigma;
  sigma.img.resize(combined.size());
  for (std::size_t t = 0; t < combined.size(); ++t) {
    auto it = std::lower_bound(sorted_letters.begin(), sorted_letters.end(), combined[t]);
    sigma.img[t] = static_cast<int>(it - sorted_letters.begin()) + 1;
  }
  SubstResult r;
  r.lc = act(sigma, plugged, target_sig);
  r.lc.arity = ka + kb;
  r.letters = std::move(sorted_letters);
  return r;
}

}  // namespace

MorphismResult check_morphism(const OperadPresentation& source, const OperadPresentation& target,
                              const std::map<std::string, Element>& assignment,
                              const ParamAssignment& params) {
  MorphismResult res;
  OperadEngine tgt(target, params, 3);
  auto tparams = resolve_params(target.params, params);

  std::vector<LinearCombination> images(source.generators.size());
  const Permutation swap12{{2, 1}};
  for (std::size_t g = 0; g < source.generators.size(); ++g) {
    auto it = assignment.find(source.generators[g].name);
    if (it == assignment.end()) {
      res.symmetry_ok = false;
      res.relations_ok = false;
      res.detail = "no image assigned to generator " + source.generators[g].name;
      return res;
    }
    LinearCombination lc = specialize_element(it->second, target.generators, tparams);
    lc.arity = 2;
    images[g] = lc;
    if (source.generators[g].symmetry == Symmetry::NonSym) continue;
    LinearCombination swapped = act(swap12, lc, target.generators);
    if (source.generators[g].symmetry == Symmetry::Anti) swapped *= Rat(-1);
    if (!(swapped == lc)) {
      res.symmetry_ok = false;
      res.detail = "generator " + source.generators[g].name +
                   " image does not respect the declared symmetry";
      return res;
    }
  }

  auto sparams = resolve_params(source.params, params);
  std::vector<const LinearCombination*> image_ptrs;
  for (const auto& lc : images) image_ptrs.push_back(&lc);
  for (std::size_t ri = 0; ri < source.relations.size(); ++ri) {
    LinearCombination total;
    total.arity = 3;
    for (const auto& term : source.relations[ri]) {
      Rat c = term.coeff.evaluate(sparams);
      if (sgn(c) == 0) continue;
      std::size_t end = 0;
      SubstResult sr = substitute_tree(term.tree, 0, image_ptrs, target.generators, &end);
      sr.lc *= c;
      total += sr.lc;
    }
    if (!tgt.in_ideal(total)) {
      res.relations_ok = false;
      res.detail = "relation " + std::to_string(ri + 1) + " does not map into the target ideal";
      return res;
    }
  }
  return res;
}

}  // namespace operadforge
