#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadforge/rational.hpp"

namespace operadforge {

// Assignment of exact rational values to named parameters (h, h1, h2, ...).
struct ParamAssignment {
  std::map<std::string, Rat> values;

  static ParamAssignment parse(const std::string& text);  // "h1=1,h2=-3/2"
  std::string to_string() const;
};

// Polynomial in the presentation's parameters with rational coefficients.
// Exponent vectors are indexed by parameter position; presentations are
// specialized to rational values before any numeric work.
class ParamPoly {
 public:
  ParamPoly() = default;

  static ParamPoly constant(const Rat& c);
  static ParamPoly param(std::size_t index, std::size_t nparams);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // valid when is_constant()

  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator-() const;
  bool operator==(const ParamPoly&) const = default;

  Rat evaluate(const std::vector<Rat>& values) const;

  std::string to_string(const std::vector<std::string>& param_names) const;

  const std::map<std::vector<std::uint8_t>, Rat>& terms() const { return terms_; }

 private:
  void add_term(const std::vector<std::uint8_t>& exps, const Rat& c);
  // exponent vector -> coefficient; no zero coefficients stored
  std::map<std::vector<std::uint8_t>, Rat> terms_;
};

// Resolves an assignment against an ordered parameter list; throws when a
// parameter is missing.
std::vector<Rat> resolve_params(const std::vector<std::string>& names,
                                const ParamAssignment& assignment);

}  // namespace operadforge
