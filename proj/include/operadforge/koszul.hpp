#pragma once

#include <vector>

#include "operadforge/operad_engine.hpp"
#include "operadforge/sparse_matrix.hpp"
#include "operadforge/species.hpp"

namespace operadforge {

// Sign of the natural arity-3 pairing between a canonical monomial over W
// and its mirror over the symmetry-flipped W. The pairing is diagonal in the
// canonical bases; the sign is the parity of the planar leaf word times a
// factor -1 when the lone leaf sits left of the root (the convention is
// pinned by Com! = Lie, Lie! = Com, Ass! = Ass).
int pairing_sign(const TreeMonomial& m);

// Square matrix <m_i, m_j^flip> over the canonical bases of F_W(3) and
// F_{W^flip}(3); diagonal with entries +-1, in particular invertible.
RatMatrix pairing_matrix(const Signature& sig);

struct QuadraticDual {
  OperadPresentation presentation;  // flipped generators, R-perp as relations
  RatMatrix relation_span;          // RREF of the input's arity-3 ideal span
  RatMatrix dual_span;              // RREF spanning R-perp
};

// Quadratic dual at fixed parameter values: dual generators are the
// symmetry-flipped copies (name suffix "_d"), dual relations a basis of the
// annihilator of the arity-3 relation span under the pairing.
QuadraticDual quadratic_dual(const OperadPresentation& pres, const ParamAssignment& params);

bool subspace_equal(const RatMatrix& a, const RatMatrix& b);

struct SeriesTestResult {
  bool pass = false;
  int first_fail_degree = -1;
  std::vector<Rat> composed;  // coefficients of g_!(-g_P(-t)), degrees 1..N
};

// Truncated exponential-generating-series test: forms g_P and g_! from the
// dimension tables and checks g_!(-g_P(-t)) = t through degree N.
SeriesTestResult koszulness_series_test(const DimensionTable& dims_p,
                                        const DimensionTable& dims_pdual, int N);

}  // namespace operadforge
