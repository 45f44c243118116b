#include "operadforge/param_poly.hpp"

#include <sstream>

namespace operadforge {

ParamAssignment ParamAssignment::parse(const std::string& text) {
  ParamAssignment a;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("param assignment needs name=value: " + item);
    std::string name = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    auto strip = [](std::string s) {
      while (!s.empty() && s.front() == ' ') s.erase(s.begin());
      while (!s.empty() && s.back() == ' ') s.pop_back();
      return s;
    };
    a.values[strip(name)] = rat_from_string(strip(val));
  }
  return a;
}

std::string ParamAssignment::to_string() const {
  std::string out;
  for (const auto& [k, v] : values) {
    if (!out.empty()) out += ",";
    out += k + "=" + rat_to_string(v);
  }
  return out;
}

ParamPoly ParamPoly::constant(const Rat& c) {
  ParamPoly p;
  if (sgn(c) != 0) p.terms_.emplace(std::vector<std::uint8_t>{}, c);
  return p;
}

ParamPoly ParamPoly::param(std::size_t index, std::size_t nparams) {
  if (index >= nparams) throw std::out_of_range("ParamPoly::param index");
  ParamPoly p;
  std::vector<std::uint8_t> e(nparams, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.empty();
}

Rat ParamPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  return terms_.begin()->second;
}

void ParamPoly::add_term(const std::vector<std::uint8_t>& exps, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

namespace {
// Aligns two exponent vectors (constants carry empty vectors).
std::vector<std::uint8_t> align(const std::vector<std::uint8_t>& e, std::size_t n) {
  std::vector<std::uint8_t> out(n, 0);
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = e[i];
  return out;
}
}  // namespace

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  for (const auto& [e, c] : o.terms_) n = std::max(n, e.size());
  ParamPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e.empty() && n == 0 ? e : align(e, n), c);
  for (const auto& [e, c] : o.terms_) out.add_term(e.empty() && n == 0 ? e : align(e, n), c);
  return out;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  for (const auto& [e, c] : o.terms_) n = std::max(n, e.size());
  ParamPoly out;
  for (const auto& [e1, c1] : terms_) {
    auto a1 = align(e1, n);
    for (const auto& [e2, c2] : o.terms_) {
      auto a2 = align(e2, n);
      std::vector<std::uint8_t> e(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        e[i] = static_cast<std::uint8_t>(a1[i] + a2[i]);
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

Rat ParamPoly::evaluate(const std::vector<Rat>& values) const {
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= values.size()) throw std::invalid_argument("ParamPoly::evaluate: missing value");
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    }
    total += t;
  }
  return total;
}

std::string ParamPoly::to_string(const std::vector<std::string>& param_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool wrote = false;
    bool has_params = false;
    for (auto x : e)
      if (x) has_params = true;
    if (a != 1 || !has_params) {
      os << rat_to_string(a);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) {
        if (wrote) os << "*";
        os << param_names.at(i);
        wrote = true;
      }
    }
  }
  return os.str();
}

std::vector<Rat> resolve_params(const std::vector<std::string>& names,
                                const ParamAssignment& assignment) {
  std::vector<Rat> out;
  out.reserve(names.size());
  for (const auto& n : names) {
    auto it = assignment.values.find(n);
    if (it == assignment.values.end())
      throw std::invalid_argument("parameter not assigned: " + n);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace operadforge
