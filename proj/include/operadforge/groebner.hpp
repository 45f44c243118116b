#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "operadforge/comm_poly.hpp"
#include "operadforge/presentation.hpp"

namespace operadforge {

// Reduced Groebner basis: pairwise irreducible monic polynomials.
struct GroebnerBasis {
  MonomialOrder order;
  std::size_t nvars = 0;
  std::vector<CommPolynomial> polys;
};

GroebnerBasis buchberger(const AlgebraPresentation& pres, const ParamAssignment& params,
                         MonomialOrder order = {});
GroebnerBasis buchberger_polys(std::vector<CommPolynomial> gens, std::size_t nvars,
                               MonomialOrder order);

// Fully reduced remainder; zero iff p lies in the ideal.
CommPolynomial normal_form(const CommPolynomial& p, const GroebnerBasis& gb);

CommPolynomial s_polynomial(const CommPolynomial& f, const CommPolynomial& g);

// Standard monomials not divisible by any leading term; nullopt when the
// staircase is infinite.
std::optional<long> algebra_dimension(const GroebnerBasis& gb);

// The standard monomials themselves (finite case), sorted ascending in the
// basis order; they form a vector-space basis of the quotient.
std::vector<CommMonomial> standard_monomials(const GroebnerBasis& gb);

CommPolynomial specialize_poly(const ParamCommPoly& p, const AlgebraPresentation& pres,
                               const ParamAssignment& params, const MonomialOrder& order);

// Substitution check for an isomorphism presented by variable images in both
// directions: relations map to zero and round trips fix the variables.
struct SubstitutionIso {
  bool relations_ab_ok = true;
  bool relations_ba_ok = true;
  bool roundtrip_ok = true;
  std::string detail;

  explicit operator bool() const { return relations_ab_ok && relations_ba_ok && roundtrip_ok; }
};

SubstitutionIso check_substitution_iso(const AlgebraPresentation& presA,
                                       const AlgebraPresentation& presB,
                                       const std::map<std::string, std::string>& subAtoB,
                                       const std::map<std::string, std::string>& subBtoA,
                                       const ParamAssignment& params);

// Applies a variable substitution (image polynomials over the target ring).
CommPolynomial substitute(const CommPolynomial& p, const std::vector<CommPolynomial>& images,
                          std::size_t target_nvars, const MonomialOrder& order);

}  // namespace operadforge
