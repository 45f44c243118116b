#include "operadforge/comm_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace operadforge {

int CommMonomial::degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool CommMonomial::divides(const CommMonomial& o) const {
  if (exps.size() != o.exps.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > o.exps[i]) return false;
  return true;
}

CommMonomial CommMonomial::operator*(const CommMonomial& o) const {
  CommMonomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i)
    m.exps[i] = static_cast<std::uint16_t>(exps[i] + o.exps[i]);
  return m;
}

CommMonomial CommMonomial::operator/(const CommMonomial& o) const {
  CommMonomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (o.exps[i] > exps[i]) throw std::domain_error("CommMonomial: inexact division");
    m.exps[i] = static_cast<std::uint16_t>(exps[i] - o.exps[i]);
  }
  return m;
}

CommMonomial CommMonomial::lcm(const CommMonomial& a, const CommMonomial& b) {
  CommMonomial m(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    m.exps[i] = std::max(a.exps[i], b.exps[i]);
  return m;
}

bool CommMonomial::coprime(const CommMonomial& o) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0 && o.exps[i] > 0) return false;
  return true;
}

bool MonomialOrder::less(const CommMonomial& a, const CommMonomial& b) const {
  if (kind == Kind::DegRevLex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // variable 0 is smallest; at the first differing position the monomial
    // with the larger exponent is the smaller one
    for (std::size_t i = 0; i < a.exps.size(); ++i)
      if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return false;
  }
  // lex, scanning from the largest variable down
  for (std::size_t i = a.exps.size(); i-- > 0;)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
  return false;
}

CommPolynomial make_poly(const MonomialOrder& order) {
  return CommPolynomial(MonoGreater{order});
}

void poly_add_term(CommPolynomial& p, const CommMonomial& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

CommPolynomial poly_add(const CommPolynomial& a, const CommPolynomial& b) {
  CommPolynomial out = a;
  for (const auto& [m, c] : b) poly_add_term(out, m, c);
  return out;
}

CommPolynomial poly_sub(const CommPolynomial& a, const CommPolynomial& b) {
  CommPolynomial out = a;
  for (const auto& [m, c] : b) poly_add_term(out, m, -c);
  return out;
}

CommPolynomial poly_mul(const CommPolynomial& a, const CommPolynomial& b) {
  CommPolynomial out(a.key_comp());
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) poly_add_term(out, ma * mb, ca * cb);
  return out;
}

CommPolynomial poly_scale(const CommPolynomial& a, const Rat& c) {
  CommPolynomial out(a.key_comp());
  if (sgn(c) == 0) return out;
  for (const auto& [m, v] : a) out.emplace(m, v * c);
  return out;
}

CommPolynomial poly_mul_term(const CommPolynomial& a, const CommMonomial& m, const Rat& c) {
  CommPolynomial out(a.key_comp());
  if (sgn(c) == 0) return out;
  for (const auto& [ma, ca] : a) out.emplace(ma * m, ca * c);
  return out;
}

bool poly_is_zero(const CommPolynomial& p) { return p.empty(); }

CommPolynomial poly_pow(const CommPolynomial& a, int e) {
  if (e < 0) throw std::domain_error("poly_pow: negative exponent");
  CommPolynomial out(a.key_comp());
  std::size_t nvars = a.empty() ? 0 : a.begin()->first.exps.size();
  poly_add_term(out, CommMonomial(nvars), Rat(1));
  for (int k = 0; k < e; ++k) out = poly_mul(out, a);
  return out;
}

CommPolynomial ParamCommPoly::specialize(const std::vector<Rat>& param_values,
                                         const MonomialOrder& order) const {
  CommPolynomial p = make_poly(order);
  for (const auto& [m, c] : terms) poly_add_term(p, m, c.evaluate(param_values));
  return p;
}

bool ParamCommPoly::structurally_zero() const {
  for (const auto& [m, c] : terms)
    if (!c.is_zero()) return false;
  return true;
}

namespace {
std::string mono_str(const CommMonomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.at(i);
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out;
}
}  // namespace

std::string poly_to_string(const CommPolynomial& p, const std::vector<std::string>& vars) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    std::string ms = mono_str(m, vars);
    if (a != 1 || ms.empty()) {
      os << rat_to_string(a);
      if (!ms.empty()) os << "*";
    }
    os << ms;
  }
  return os.str();
}

std::string param_poly_to_string(const ParamCommPoly& p, const std::vector<std::string>& vars,
                                 const std::vector<std::string>& params) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string ms = mono_str(m, vars);
    std::string cs = c.to_string(params);
    bool needs_parens = cs.find(' ') != std::string::npos;
    if (ms.empty()) {
      os << (needs_parens ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      os << ms;
    } else {
      os << (needs_parens ? "(" + cs + ")" : cs) << "*" << ms;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace operadforge
