#pragma once

#include <string>
#include <vector>

#include "operadforge/comm_poly.hpp"
#include "operadforge/presentation.hpp"

namespace operadforge {

// Label of a tensor-factor input: a positive integer or the distinguished
// grafting slot. The slot sorts after every integer.
struct Label {
  int value = 0;
  bool star = false;

  static Label of(int v) { return {v, false}; }
  static Label slot() { return {0, true}; }
  std::string token() const;

  // integers in value order, the slot after all of them
  auto operator<=>(const Label& o) const {
    if (auto c = star <=> o.star; c != 0) return c;
    return value <=> o.value;
  }
  bool operator==(const Label&) const = default;
};

using LabelSet = std::vector<Label>;  // kept sorted, distinct

LabelSet int_labels(int n);
LabelSet with_slot(LabelSet labels);  // appends the grafting slot

// Helpers for ParamCommPoly construction.
ParamCommPoly pcp_zero();
ParamCommPoly pcp_const(const ParamPoly& c, std::size_t nvars);
ParamCommPoly pcp_var(std::size_t v, std::size_t nvars);
ParamCommPoly pcp_add(const ParamCommPoly& a, const ParamCommPoly& b);
ParamCommPoly pcp_sub(const ParamCommPoly& a, const ParamCommPoly& b);
ParamCommPoly pcp_mul(const ParamCommPoly& a, const ParamCommPoly& b);
ParamCommPoly pcp_scale(const ParamCommPoly& a, const ParamPoly& c);

// Double Gelfand-Varchenko algebra on a label set, with the redundant
// reversed-pair generators eliminated via g_qp = h - g_pq. Variables are
// x-family first, then y-family, pairs in lexicographic position order.
// Parameters are (h1, h2).
AlgebraPresentation build_gv2(const LabelSet& labels);

// Single-family version (parameter h): the arrangement-functions algebra.
AlgebraPresentation build_gv(int n);

// Skew presentation with generators a_pq, b_pq (a_qp = -a_pq) and squares
// equal to parameter squares.
AlgebraPresentation build_gv2alt(int n);

// Position pair index helpers (positions are 0-based in the sorted label
// set, p < q). Families: 0 = x, 1 = y.
int gv2_var_index(const LabelSet& labels, int family, int p, int q);

struct Gv2Var {
  int family = 0;
  int p = 0, q = 0;  // positions, p < q
};
Gv2Var gv2_var_decode(const LabelSet& labels, int var_index);

// Ordered generator g_{uv} (labels in either order) as a polynomial in the
// eliminated variables of build_gv2(labels).
ParamCommPoly gv2_generator(const LabelSet& labels, int family, Label u, Label v);

// Same for the skew presentation.
ParamCommPoly gv2alt_generator(const LabelSet& labels, int family, Label u, Label v);

std::string gv_preset_text(int n);
std::string gv2_preset_text(int n);
std::string gv2alt_preset_text(int n);

}  // namespace operadforge
