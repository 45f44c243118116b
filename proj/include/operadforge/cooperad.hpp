#pragma once

#include <map>
#include <vector>

#include "operadforge/groebner.hpp"
#include "operadforge/gv_algebras.hpp"

namespace operadforge {

// Linear combination of pure tensors of monomials, one CommMonomial per
// tensor factor. Coefficients collected on distinct monomial tuples.
struct TensorPolynomial {
  int nfactors = 0;
  std::map<std::vector<CommMonomial>, Rat> terms;

  void add_term(const std::vector<CommMonomial>& mono, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const TensorPolynomial&) const = default;
};

TensorPolynomial tensor_mul(const TensorPolynomial& a, const TensorPolynomial& b);

// Factorwise Groebner normal form (valid for a tensor product of quotients
// with disjoint variable sets), collecting like tuples afterwards.
TensorPolynomial tensor_reduce(const TensorPolynomial& p,
                               const std::vector<const GroebnerBasis*>& bases);

// Cocomposition GV2(I u J) -> GV2(I u {slot}) (x) GV2(J): a generator
// indexed by an ordered label pair maps by the four-case table (both in I;
// both in J; I-side kept, J-side replaced by the slot).
struct CocompositionMap {
  LabelSet I, J;
  LabelSet source;       // I u J, sorted
  LabelSet left_labels;  // I u {slot}

  CocompositionMap(LabelSet i, LabelSet j);

  // Image of the ordered generator pair (family, u, v), u != v in I u J, as
  // a pure tensor of eliminated polynomials at the given parameter values.
  TensorPolynomial generator_image(int family, Label u, Label v,
                                   const std::vector<Rat>& params,
                                   const MonomialOrder& order) const;
};

// Multiplicative extension of the generator table to a polynomial over the
// eliminated variables of build_gv2(I u J); bilinear normal form, no
// reduction.
TensorPolynomial rho_image(const CocompositionMap& map, const CommPolynomial& p,
                           const ParamAssignment& params);

// Checks that every defining relation instance of GV2(I u J), including the
// redundant reversed-pair instances, maps to zero after factorwise
// reduction.
bool rho_well_defined(const LabelSet& I, const LabelSet& J, const ParamAssignment& params);

// Compares the two ways of cocomposing a three-block split of {1..a+b+c} on
// every ordered generator.
bool coassociativity_check(int size_i, int size_j, int size_k, const ParamAssignment& params);

// algebra_dimension(GV2(n)) == engine dimension of ll2(n) at the same
// parameters.
struct DimMatch {
  long algebra_dim = 0;
  long operad_dim = 0;
  bool equal = false;
};
DimMatch dim_match_operad(int n, const ParamAssignment& params);

}  // namespace operadforge
