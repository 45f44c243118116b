#pragma once

#include <string>
#include <vector>

#include "operadforge/comm_poly.hpp"
#include "operadforge/param_poly.hpp"
#include "operadforge/signature.hpp"
#include "operadforge/tree_monomial.hpp"

namespace operadforge {

// One term of a formal linear combination of labeled tree expressions. The
// tree is a raw (not canonicalized) TreeMonomial whose leaves are letter
// positions: a=1, b=2, c=3, ...
struct RelTerm {
  ParamPoly coeff;
  TreeMonomial tree;

  bool operator==(const RelTerm&) const = default;
};

using Element = std::vector<RelTerm>;

struct OperadPresentation {
  std::string name;
  std::vector<std::string> params;
  Signature generators;
  std::vector<Element> relations;  // quadratic: every term has 3 leaves

  int generator_index(const std::string& gname) const;  // -1 when absent
  void validate() const;                                // throws on broken invariants
};

struct AlgebraPresentation {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> variables;
  std::vector<ParamCommPoly> relations;

  int variable_index(const std::string& vname) const;  // -1 when absent
  void validate() const;
};

// Evaluates an element's coefficients at parameter values, canonicalizes
// every term and collects like monomials.
LinearCombination specialize_element(const Element& el, const Signature& sig,
                                     const std::vector<Rat>& param_values);

}  // namespace operadforge
