#pragma once

#include <stdexcept>
#include <string>

#include "operadforge/presentation.hpp"

namespace operadforge {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg),
        line(l), column(c) {}
};

// Grammar (line oriented, '#' comments):
//
//   operad NAME [params (h1, h2)]
//   gen NAME : comm|anti|nonsym ;
//   rel <lincomb> ;
//
//   algebra NAME [params (...)]
//   var NAME[, NAME...] ;
//   rel <polynomial> ;
//
// Relation letters are the fixed alphabet a,b,c; element letters extend to
// the first n letters. Coefficients are polynomials in the declared
// parameters with rational literals.
OperadPresentation parse_operad_presentation(const std::string& text);

AlgebraPresentation parse_algebra_presentation(const std::string& text);

// Parses a formal combination of arity-n tree expressions over pres's
// generators. Letters must be exactly the first n alphabet letters, each
// used once per term.
Element parse_element(const std::string& text, const OperadPresentation& pres, int n);

// Parses a polynomial in the presentation's variables and parameters.
ParamCommPoly parse_algebra_polynomial(const std::string& text, const AlgebraPresentation& pres);

std::string print_operad_presentation(const OperadPresentation& pres);
std::string print_algebra_presentation(const AlgebraPresentation& pres);
std::string print_element(const Element& el, const OperadPresentation& pres);

}  // namespace operadforge
