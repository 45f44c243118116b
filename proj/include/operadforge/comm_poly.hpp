#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "operadforge/param_poly.hpp"
#include "operadforge/rational.hpp"

namespace operadforge {

// Monomial in a fixed list of commutative variables: plain exponent vector.
struct CommMonomial {
  std::vector<std::uint16_t> exps;

  explicit CommMonomial(std::size_t nvars = 0) : exps(nvars, 0) {}

  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const CommMonomial& o) const;
  CommMonomial operator*(const CommMonomial& o) const;
  // exact division; caller must ensure divisibility
  CommMonomial operator/(const CommMonomial& o) const;
  static CommMonomial lcm(const CommMonomial& a, const CommMonomial& b);
  bool coprime(const CommMonomial& o) const;

  auto operator<=>(const CommMonomial&) const = default;
};

struct MonomialOrder {
  enum class Kind { DegRevLex, Lex };
  Kind kind = Kind::DegRevLex;

  // Strict "a < b" in the order; variable 0 is the smallest variable.
  bool less(const CommMonomial& a, const CommMonomial& b) const;
  std::string name() const { return kind == Kind::DegRevLex ? "degrevlex" : "lex"; }
  bool operator==(const MonomialOrder&) const = default;
};

// Comparator putting the leading monomial first in a std::map.
struct MonoGreater {
  MonomialOrder order;
  bool operator()(const CommMonomial& a, const CommMonomial& b) const {
    return order.less(b, a);
  }
};

// Commutative polynomial with exact rational coefficients, terms sorted
// leading-first under the ambient order. No zero coefficients stored.
using CommPolynomial = std::map<CommMonomial, Rat, MonoGreater>;

CommPolynomial make_poly(const MonomialOrder& order);
void poly_add_term(CommPolynomial& p, const CommMonomial& m, const Rat& c);
CommPolynomial poly_add(const CommPolynomial& a, const CommPolynomial& b);
CommPolynomial poly_sub(const CommPolynomial& a, const CommPolynomial& b);
CommPolynomial poly_mul(const CommPolynomial& a, const CommPolynomial& b);
CommPolynomial poly_scale(const CommPolynomial& a, const Rat& c);
// multiply by a single term c*m
CommPolynomial poly_mul_term(const CommPolynomial& a, const CommMonomial& m, const Rat& c);
bool poly_is_zero(const CommPolynomial& p);
CommPolynomial poly_pow(const CommPolynomial& a, int e);

// Relation polynomial before parameter specialization.
struct ParamCommPoly {
  std::vector<std::pair<CommMonomial, ParamPoly>> terms;

  CommPolynomial specialize(const std::vector<Rat>& param_values,
                            const MonomialOrder& order) const;
  bool structurally_zero() const;
};

std::string poly_to_string(const CommPolynomial& p, const std::vector<std::string>& vars);
std::string param_poly_to_string(const ParamCommPoly& p, const std::vector<std::string>& vars,
                                 const std::vector<std::string>& params);

}  // namespace operadforge
