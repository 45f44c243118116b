#include "operadforge/koszul.hpp"

#include <stdexcept>

namespace operadforge {

int pairing_sign(const TreeMonomial& m) {
  if (m.arity() != 3) throw std::invalid_argument("pairing_sign: arity must be 3");
  // planar leaf word
  std::vector<int> word;
  for (auto c : m.code)
    if (c > 0) word.push_back(c);
  int sign = 1;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) sign = -sign;
  // lone leaf left of the root flips the sign
  if (m.code.size() >= 2 && m.code[1] > 0) sign = -sign;
  return sign;
}

RatMatrix pairing_matrix(const Signature& sig) {
  auto basis = enumerate_basis(sig, 3);
  auto flipped = enumerate_basis(flip_signature(sig), 3);
  if (basis.size() != flipped.size())
    throw std::logic_error("pairing_matrix: basis size mismatch");
  int n = static_cast<int>(basis.size());
  RatMatrix g(RationalField{}, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (basis[static_cast<std::size_t>(i)].code == flipped[static_cast<std::size_t>(j)].code)
        g.rows[static_cast<std::size_t>(i)].emplace_back(
            j, Rat(pairing_sign(basis[static_cast<std::size_t>(i)])));
  for (int i = 0; i < n; ++i)
    if (g.rows[static_cast<std::size_t>(i)].empty())
      throw std::logic_error("pairing_matrix: degenerate pairing row");
  return g;
}

QuadraticDual quadratic_dual(const OperadPresentation& pres, const ParamAssignment& params) {
  for (const auto& g : pres.generators)
    if (g.arity != 2) throw std::invalid_argument("quadratic_dual: generators must be binary");

  OperadEngine eng(pres, params, 3);
  QuadraticDual out;
  out.relation_span = eng.ideal(3).matrix;

  RatMatrix g = pairing_matrix(pres.generators);
  // rows of (relation span) x (pairing): columns indexed by the dual basis
  RatMatrix rg(RationalField{}, out.relation_span.nrows, g.ncols);
  for (int i = 0; i < rg.nrows; ++i) {
    RatMatrix::Row row;
    for (const auto& [c, v] : out.relation_span.rows[static_cast<std::size_t>(i)]) {
      // pairing is diagonal-with-sign; row c of g has a single entry
      const auto& [dc, dv] = g.rows[static_cast<std::size_t>(c)].front();
      row.emplace_back(dc, v * dv);
    }
    rg.set_row(i, std::move(row));
  }
  auto ker = nullspace_basis(rg);

  Signature dual_sig = flip_signature(pres.generators);
  for (auto& gen : dual_sig) gen.name += "_d";
  auto dual_basis = enumerate_basis(dual_sig, 3);

  OperadPresentation dual;
  dual.name = pres.name + "_dual";
  dual.generators = dual_sig;
  for (const auto& vec : ker) {
    Element rel;
    for (const auto& [c, v] : vec)
      rel.push_back({ParamPoly::constant(v), dual_basis[static_cast<std::size_t>(c)]});
    dual.relations.push_back(std::move(rel));
  }
  dual.validate();
  out.presentation = std::move(dual);

  RatMatrix kmat(RationalField{}, static_cast<int>(ker.size()), g.ncols);
  for (std::size_t i = 0; i < ker.size(); ++i) kmat.rows[i] = ker[i];
  auto rr = row_reduce(kmat);
  out.dual_span = std::move(rr.rref);
  return out;
}

bool subspace_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.ncols != b.ncols) throw std::invalid_argument("subspace_equal: dimension mismatch");
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  RatMatrix stacked(RationalField{}, a.nrows + b.nrows, a.ncols);
  for (int i = 0; i < a.nrows; ++i) stacked.rows[static_cast<std::size_t>(i)] = a.rows[static_cast<std::size_t>(i)];
  for (int i = 0; i < b.nrows; ++i)
    stacked.rows[static_cast<std::size_t>(a.nrows + i)] = b.rows[static_cast<std::size_t>(i)];
  return rank(stacked) == ra;
}

SeriesTestResult koszulness_series_test(const DimensionTable& dims_p,
                                        const DimensionTable& dims_pdual, int N) {
  if (static_cast<int>(dims_p.size()) < N || static_cast<int>(dims_pdual.size()) < N)
    throw std::invalid_argument("koszulness_series_test: dimension lists too short");
  if (dims_p[0] != 1 || dims_pdual[0] != 1)
    throw std::invalid_argument("koszulness_series_test: arity-1 dimensions must be 1");

  // series coefficients indexed by degree 1..N
  auto factorial = [](int n) {
    Rat f(1);
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  std::vector<Rat> u(static_cast<std::size_t>(N + 1), Rat(0));  // -g_P(-t)
  for (int n = 1; n <= N; ++n) {
    Rat c = Rat(dims_p[static_cast<std::size_t>(n - 1)]) / factorial(n);
    u[static_cast<std::size_t>(n)] = (n % 2 == 1) ? c : -c;
  }
  // truncated powers of u
  std::vector<Rat> composed(static_cast<std::size_t>(N + 1), Rat(0));
  std::vector<Rat> upow = u;
  for (int k = 1; k <= N; ++k) {
    Rat dk = Rat(dims_pdual[static_cast<std::size_t>(k - 1)]) / factorial(k);
    for (int n = k; n <= N; ++n)
      composed[static_cast<std::size_t>(n)] += dk * upow[static_cast<std::size_t>(n)];
    if (k == N) break;
    // upow <- upow * u, truncated
    std::vector<Rat> next(static_cast<std::size_t>(N + 1), Rat(0));
    for (int i = k; i <= N; ++i) {
      if (sgn(upow[static_cast<std::size_t>(i)]) == 0) continue;
      for (int j = 1; i + j <= N; ++j)
        next[static_cast<std::size_t>(i + j)] +=
            upow[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)];
    }
    upow = std::move(next);
  }

  SeriesTestResult res;
  res.pass = true;
  for (int n = 1; n <= N; ++n) {
    res.composed.push_back(composed[static_cast<std::size_t>(n)]);
    Rat expected = n == 1 ? Rat(1) : Rat(0);
    if (res.pass && composed[static_cast<std::size_t>(n)] != expected) {
      res.pass = false;
      res.first_fail_degree = n;
    }
  }
  return res;
}

}  // namespace operadforge
