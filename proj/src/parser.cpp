#include "operadforge/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace operadforge {

namespace {

constexpr const char* kLeafAlphabet = "abcde";

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_.line, tok_.col, msg); }

 private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_ = {Tok::End, "", line_, col_};
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      tok_ = {Tok::Ident, src_.substr(start, pos_ - start), tok_.line, tok_.col};
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_ = {Tok::Number, src_.substr(start, pos_ - start), tok_.line, tok_.col};
    } else {
      ++pos_;
      ++col_;
      tok_ = {Tok::Punct, std::string(1, c), tok_.line, tok_.col};
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

bool is_punct(const Token& t, const char* s) { return t.kind == Tok::Punct && t.text == s; }
bool is_ident(const Token& t, const char* s) { return t.kind == Tok::Ident && t.text == s; }

void expect_punct(Lexer& lx, const char* s) {
  if (!is_punct(lx.peek(), s)) lx.fail(std::string("expected '") + s + "'");
  lx.next();
}

std::string expect_ident(Lexer& lx, const char* what) {
  if (lx.peek().kind != Tok::Ident) lx.fail(std::string("expected ") + what);
  return lx.next().text;
}

// header := ("operad"|"algebra") IDENT ["params" "(" [IDENT ("," IDENT)*] ")"]
void parse_header(Lexer& lx, const char* kw, std::string& name, std::vector<std::string>& params) {
  if (!is_ident(lx.peek(), kw)) lx.fail(std::string("expected '") + kw + "' header");
  lx.next();
  name = expect_ident(lx, "presentation name");
  if (is_ident(lx.peek(), "params")) {
    lx.next();
    expect_punct(lx, "(");
    while (!is_punct(lx.peek(), ")")) {
      params.push_back(expect_ident(lx, "parameter name"));
      if (is_punct(lx.peek(), ",")) lx.next();
    }
    lx.next();
  }
}

int param_index(const std::vector<std::string>& params, const std::string& name) {
  auto it = std::find(params.begin(), params.end(), name);
  return it == params.end() ? -1 : static_cast<int>(it - params.begin());
}

Rat parse_rational(Lexer& lx) {
  Token num = lx.next();
  std::string text = num.text;
  if (is_punct(lx.peek(), "/")) {
    lx.next();
    if (lx.peek().kind != Tok::Number) lx.fail("expected denominator after '/'");
    text += "/" + lx.next().text;
  }
  return rat_from_string(text);
}

// scalar := ['+'|'-'] sterm (('+'|'-') sterm)*
// sterm  := sfactor ('*' sfactor)*
// sfactor:= rational | param | '(' scalar ')'
ParamPoly parse_scalar(Lexer& lx, const std::vector<std::string>& params);

ParamPoly parse_scalar_factor(Lexer& lx, const std::vector<std::string>& params) {
  const Token& t = lx.peek();
  if (t.kind == Tok::Number) return ParamPoly::constant(parse_rational(lx));
  if (t.kind == Tok::Ident) {
    int pi = param_index(params, t.text);
    if (pi < 0) lx.fail("unknown parameter '" + t.text + "' in coefficient");
    lx.next();
    return ParamPoly::param(static_cast<std::size_t>(pi), params.size());
  }
  if (is_punct(t, "(")) {
    lx.next();
    ParamPoly p = parse_scalar(lx, params);
    expect_punct(lx, ")");
    return p;
  }
  lx.fail("expected coefficient");
}

ParamPoly parse_scalar_term(Lexer& lx, const std::vector<std::string>& params) {
  ParamPoly p = parse_scalar_factor(lx, params);
  while (is_punct(lx.peek(), "*")) {
    lx.next();
    p = p * parse_scalar_factor(lx, params);
  }
  return p;
}

ParamPoly parse_scalar(Lexer& lx, const std::vector<std::string>& params) {
  bool neg = false;
  if (is_punct(lx.peek(), "-")) {
    neg = true;
    lx.next();
  } else if (is_punct(lx.peek(), "+")) {
    lx.next();
  }
  ParamPoly p = parse_scalar_term(lx, params);
  if (neg) p = -p;
  while (is_punct(lx.peek(), "+") || is_punct(lx.peek(), "-")) {
    bool minus = lx.next().text == "-";
    ParamPoly q = parse_scalar_term(lx, params);
    p = minus ? p - q : p + q;
  }
  return p;
}

struct ElementContext {
  const Signature* generators;
  const std::vector<std::string>* params;
  int alphabet_size;  // leaf letters a.. (1-based positions)
};

int generator_index_of(const Signature& sig, const std::string& name) {
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (sig[i].name == name) return static_cast<int>(i);
  return -1;
}

// expr := GEN '(' expr ',' expr ')' | LETTER
TreeMonomial parse_tree_expr(Lexer& lx, const ElementContext& ctx) {
  const Token t = lx.peek();
  if (t.kind != Tok::Ident) lx.fail("expected generator or letter");
  int gi = generator_index_of(*ctx.generators, t.text);
  if (gi >= 0) {
    lx.next();
    if (!is_punct(lx.peek(), "(")) lx.fail("generator '" + t.text + "' must be applied");
    lx.next();
    TreeMonomial l = parse_tree_expr(lx, ctx);
    expect_punct(lx, ",");
    TreeMonomial r = parse_tree_expr(lx, ctx);
    if (is_punct(lx.peek(), ","))
      lx.fail("generator '" + t.text + "' is binary: arity mismatch");
    expect_punct(lx, ")");
    return TreeMonomial::node(gi, l, r);
  }
  if (t.text.size() == 1) {
    auto pos = std::string(kLeafAlphabet).find(t.text[0]);
    if (pos != std::string::npos) {
      if (static_cast<int>(pos) >= ctx.alphabet_size)
        lx.fail("unknown letter '" + t.text + "' (alphabet has " +
                std::to_string(ctx.alphabet_size) + " letters)");
      lx.next();
      if (is_punct(lx.peek(), "(")) lx.fail("letter '" + t.text + "' cannot be applied");
      return TreeMonomial::leaf(static_cast<int>(pos) + 1);
    }
  }
  lx.fail("undeclared generator '" + t.text + "'");
}

void check_leaf_multiset(const TreeMonomial& tree, const ElementContext& ctx, const Token& at) {
  std::vector<int> count(static_cast<std::size_t>(ctx.alphabet_size), 0);
  for (auto c : tree.code) {
    if (c <= 0) continue;
    ++count[static_cast<std::size_t>(c - 1)];
  }
  for (int i = 0; i < ctx.alphabet_size; ++i) {
    if (count[static_cast<std::size_t>(i)] > 1)
      throw ParseError(at.line, at.col,
                       std::string("repeated letter '") + kLeafAlphabet[i] + "' in term");
    if (count[static_cast<std::size_t>(i)] == 0)
      throw ParseError(at.line, at.col,
                       std::string("term must use letter '") + kLeafAlphabet[i] + "' exactly once");
  }
}

// term := scalar-factors* tree-expr scalar-factors*   (joined by optional '*')
RelTerm parse_lin_term(Lexer& lx, const ElementContext& ctx) {
  RelTerm term;
  term.coeff = ParamPoly::constant(Rat(1));
  bool have_tree = false;
  const Token start = lx.peek();
  for (;;) {
    const Token& t = lx.peek();
    bool is_scalar_start = t.kind == Tok::Number || is_punct(t, "(") ||
                           (t.kind == Tok::Ident && param_index(*ctx.params, t.text) >= 0);
    if (is_scalar_start) {
      term.coeff = term.coeff * parse_scalar_factor(lx, *ctx.params);
    } else if (t.kind == Tok::Ident) {
      if (have_tree) lx.fail("unexpected second tree expression in term");
      term.tree = parse_tree_expr(lx, ctx);
      have_tree = true;
    } else {
      break;
    }
    if (is_punct(lx.peek(), "*")) {
      lx.next();
      continue;
    }
    const Token& nx = lx.peek();
    bool more = nx.kind == Tok::Number || nx.kind == Tok::Ident || is_punct(nx, "(");
    if (!more) break;
  }
  if (!have_tree) throw ParseError(start.line, start.col, "term is missing a tree expression");
  check_leaf_multiset(term.tree, ctx, start);
  return term;
}

Element parse_lincomb(Lexer& lx, const ElementContext& ctx) {
  Element el;
  bool neg = false;
  if (is_punct(lx.peek(), "-")) {
    neg = true;
    lx.next();
  } else if (is_punct(lx.peek(), "+")) {
    lx.next();
  }
  RelTerm t = parse_lin_term(lx, ctx);
  if (neg) t.coeff = -t.coeff;
  el.push_back(std::move(t));
  while (is_punct(lx.peek(), "+") || is_punct(lx.peek(), "-")) {
    bool minus = lx.next().text == "-";
    RelTerm u = parse_lin_term(lx, ctx);
    if (minus) u.coeff = -u.coeff;
    el.push_back(std::move(u));
  }
  return el;
}

Symmetry parse_symmetry(Lexer& lx) {
  std::string s = expect_ident(lx, "symmetry (comm|anti|nonsym)");
  if (s == "comm") return Symmetry::Comm;
  if (s == "anti") return Symmetry::Anti;
  if (s == "nonsym") return Symmetry::NonSym;
  lx.fail("unknown symmetry '" + s + "' (want comm|anti|nonsym)");
}

}  // namespace

OperadPresentation parse_operad_presentation(const std::string& text) {
  Lexer lx(text);
  OperadPresentation pres;
  parse_header(lx, "operad", pres.name, pres.params);
  while (lx.peek().kind != Tok::End) {
    if (is_ident(lx.peek(), "gen")) {
      lx.next();
      GeneratorSymbol g;
      g.name = expect_ident(lx, "generator name");
      expect_punct(lx, ":");
      g.symmetry = parse_symmetry(lx);
      expect_punct(lx, ";");
      pres.generators.push_back(std::move(g));
    } else if (is_ident(lx.peek(), "rel")) {
      lx.next();
      ElementContext ctx{&pres.generators, &pres.params, 3};
      pres.relations.push_back(parse_lincomb(lx, ctx));
      expect_punct(lx, ";");
    } else {
      lx.fail("expected 'gen' or 'rel'");
    }
  }
  pres.validate();
  return pres;
}

Element parse_element(const std::string& text, const OperadPresentation& pres, int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("parse_element: alphabet size out of range");
  Lexer lx(text);
  ElementContext ctx{&pres.generators, &pres.params, n};
  Element el = parse_lincomb(lx, ctx);
  if (lx.peek().kind != Tok::End) lx.fail("trailing input after element");
  return el;
}

// ===== algebra side =====

namespace {

struct AlgebraContext {
  const std::vector<std::string>* variables;
  const std::vector<std::string>* params;
};

using WorkPoly = std::map<CommMonomial, ParamPoly>;

WorkPoly wp_const(const ParamPoly& c, std::size_t nvars) {
  WorkPoly p;
  if (!c.is_zero()) p.emplace(CommMonomial(nvars), c);
  return p;
}

void wp_add_term(WorkPoly& p, const CommMonomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) p.erase(it);
  }
}

WorkPoly wp_add(const WorkPoly& a, const WorkPoly& b) {
  WorkPoly out = a;
  for (const auto& [m, c] : b) wp_add_term(out, m, c);
  return out;
}

WorkPoly wp_neg(const WorkPoly& a) {
  WorkPoly out;
  for (const auto& [m, c] : a) out.emplace(m, -c);
  return out;
}

WorkPoly wp_mul(const WorkPoly& a, const WorkPoly& b) {
  WorkPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) wp_add_term(out, ma * mb, ca * cb);
  return out;
}

WorkPoly wp_pow(const WorkPoly& a, int e, std::size_t nvars) {
  WorkPoly out = wp_const(ParamPoly::constant(Rat(1)), nvars);
  for (int k = 0; k < e; ++k) out = wp_mul(out, a);
  return out;
}

int parse_exponent(Lexer& lx) {
  if (lx.peek().kind != Tok::Number) lx.fail("malformed exponent");
  int e = std::stoi(lx.next().text);
  if (e < 0) lx.fail("malformed exponent");
  return e;
}

WorkPoly parse_apoly(Lexer& lx, const AlgebraContext& ctx);

WorkPoly parse_apoly_factor(Lexer& lx, const AlgebraContext& ctx) {
  std::size_t nvars = ctx.variables->size();
  const Token& t = lx.peek();
  WorkPoly base;
  if (t.kind == Tok::Number) {
    base = wp_const(ParamPoly::constant(parse_rational(lx)), nvars);
  } else if (t.kind == Tok::Ident) {
    int pi = param_index(*ctx.params, t.text);
    if (pi >= 0) {
      lx.next();
      base = wp_const(ParamPoly::param(static_cast<std::size_t>(pi), ctx.params->size()), nvars);
    } else {
      auto it = std::find(ctx.variables->begin(), ctx.variables->end(), t.text);
      if (it == ctx.variables->end()) lx.fail("undeclared variable '" + t.text + "'");
      lx.next();
      CommMonomial m(nvars);
      m.exps[static_cast<std::size_t>(it - ctx.variables->begin())] = 1;
      base.emplace(m, ParamPoly::constant(Rat(1)));
    }
  } else if (is_punct(t, "(")) {
    lx.next();
    base = parse_apoly(lx, ctx);
    expect_punct(lx, ")");
  } else {
    lx.fail("expected polynomial factor");
  }
  if (is_punct(lx.peek(), "^")) {
    lx.next();
    base = wp_pow(base, parse_exponent(lx), nvars);
  }
  return base;
}

WorkPoly parse_apoly_term(Lexer& lx, const AlgebraContext& ctx) {
  WorkPoly p = parse_apoly_factor(lx, ctx);
  while (is_punct(lx.peek(), "*")) {
    lx.next();
    p = wp_mul(p, parse_apoly_factor(lx, ctx));
  }
  return p;
}

WorkPoly parse_apoly(Lexer& lx, const AlgebraContext& ctx) {
  bool neg = false;
  if (is_punct(lx.peek(), "-")) {
    neg = true;
    lx.next();
  } else if (is_punct(lx.peek(), "+")) {
    lx.next();
  }
  WorkPoly p = parse_apoly_term(lx, ctx);
  if (neg) p = wp_neg(p);
  while (is_punct(lx.peek(), "+") || is_punct(lx.peek(), "-")) {
    bool minus = lx.next().text == "-";
    WorkPoly q = parse_apoly_term(lx, ctx);
    p = wp_add(p, minus ? wp_neg(q) : q);
  }
  return p;
}

ParamCommPoly to_param_comm_poly(const WorkPoly& p) {
  ParamCommPoly out;
  for (const auto& [m, c] : p) out.terms.emplace_back(m, c);
  return out;
}

}  // namespace

AlgebraPresentation parse_algebra_presentation(const std::string& text) {
  Lexer lx(text);
  AlgebraPresentation pres;
  parse_header(lx, "algebra", pres.name, pres.params);
  // variables must be declared before the relations that use them
  while (lx.peek().kind != Tok::End) {
    if (is_ident(lx.peek(), "var")) {
      lx.next();
      pres.variables.push_back(expect_ident(lx, "variable name"));
      while (is_punct(lx.peek(), ",")) {
        lx.next();
        pres.variables.push_back(expect_ident(lx, "variable name"));
      }
      expect_punct(lx, ";");
    } else if (is_ident(lx.peek(), "rel")) {
      lx.next();
      AlgebraContext ctx{&pres.variables, &pres.params};
      pres.relations.push_back(to_param_comm_poly(parse_apoly(lx, ctx)));
      expect_punct(lx, ";");
    } else {
      lx.fail("expected 'var' or 'rel'");
    }
  }
  pres.validate();
  return pres;
}

ParamCommPoly parse_algebra_polynomial(const std::string& text, const AlgebraPresentation& pres) {
  Lexer lx(text);
  AlgebraContext ctx{&pres.variables, &pres.params};
  ParamCommPoly p = to_param_comm_poly(parse_apoly(lx, ctx));
  if (lx.peek().kind != Tok::End) lx.fail("trailing input after polynomial");
  return p;
}

// ===== printers =====

namespace {

std::string tree_to_string(const TreeMonomial& t, const Signature& sig) {
  std::ostringstream os;
  auto rec = [&](auto&& self, std::size_t pos) -> std::size_t {
    if (t.code[pos] > 0) {
      os << kLeafAlphabet[t.code[pos] - 1];
      return pos + 1;
    }
    int gen = -t.code[pos] - 1;
    os << sig[static_cast<std::size_t>(gen)].name << '(';
    std::size_t next = self(self, pos + 1);
    os << ", ";
    next = self(self, next);
    os << ')';
    return next;
  };
  rec(rec, 0);
  return os.str();
}

// Splits a sign off single-monomial coefficients so relations print in the
// familiar "t1 - t2 + 2*t3" shape.
void print_term(std::ostringstream& os, bool first, const RelTerm& term,
                const OperadPresentation& pres) {
  const auto& terms = term.coeff.terms();
  bool single = terms.size() == 1;
  if (terms.empty()) single = true;
  std::string coeff_str;
  bool negative = false;
  if (single && !terms.empty()) {
    ParamPoly a = term.coeff;
    Rat c = terms.begin()->second;
    if (sgn(c) < 0) {
      negative = true;
      a = -a;
    }
    coeff_str = a.to_string(pres.params);
    if (coeff_str == "1") coeff_str.clear();
  } else if (terms.empty()) {
    coeff_str = "0";
  } else {
    coeff_str = "(" + term.coeff.to_string(pres.params) + ")";
  }
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (!coeff_str.empty()) os << coeff_str << "*";
  os << tree_to_string(term.tree, pres.generators);
}

}  // namespace

std::string print_element(const Element& el, const OperadPresentation& pres) {
  if (el.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < el.size(); ++i) print_term(os, i == 0, el[i], pres);
  return os.str();
}

std::string print_operad_presentation(const OperadPresentation& pres) {
  std::ostringstream os;
  os << "operad " << pres.name;
  if (!pres.params.empty()) {
    os << " params (";
    for (std::size_t i = 0; i < pres.params.size(); ++i)
      os << (i ? ", " : "") << pres.params[i];
    os << ")";
  }
  os << "\n";
  for (const auto& g : pres.generators)
    os << "gen " << g.name << " : " << symmetry_name(g.symmetry) << ";\n";
  for (const auto& r : pres.relations) os << "rel " << print_element(r, pres) << ";\n";
  return os.str();
}

namespace {

std::string algebra_term_string(const CommMonomial& m, const ParamPoly& coeff,
                                const AlgebraPresentation& pres, bool first,
                                std::string* sep_out) {
  std::string mono;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += pres.variables[i];
    if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
  }
  bool single = coeff.terms().size() <= 1;
  std::string cs;
  bool negative = false;
  if (single) {
    ParamPoly a = coeff;
    if (!coeff.terms().empty() && sgn(coeff.terms().begin()->second) < 0) {
      negative = true;
      a = -coeff;
    }
    cs = a.to_string(pres.params);
    if (cs == "1" && !mono.empty()) cs.clear();
  } else {
    cs = "(" + coeff.to_string(pres.params) + ")";
  }
  *sep_out = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
  if (cs.empty()) return mono;
  if (mono.empty()) return cs;
  return cs + "*" + mono;
}

}  // namespace

std::string print_algebra_presentation(const AlgebraPresentation& pres) {
  std::ostringstream os;
  os << "algebra " << pres.name;
  if (!pres.params.empty()) {
    os << " params (";
    for (std::size_t i = 0; i < pres.params.size(); ++i)
      os << (i ? ", " : "") << pres.params[i];
    os << ")";
  }
  os << "\n";
  for (const auto& v : pres.variables) os << "var " << v << ";\n";
  for (const auto& r : pres.relations) {
    os << "rel ";
    bool first = true;
    for (const auto& [m, c] : r.terms) {
      if (c.is_zero()) continue;
      std::string sep;
      std::string body = algebra_term_string(m, c, pres, first, &sep);
      os << sep << body;
      first = false;
    }
    if (first) os << "0";
    os << ";\n";
  }
  return os.str();
}

// ===== presentation validation / helpers =====

int OperadPresentation::generator_index(const std::string& gname) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == gname) return static_cast<int>(i);
  return -1;
}

void OperadPresentation::validate() const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].arity != 2)
      throw std::invalid_argument("generator arity must be 2: " + generators[i].name);
    if (generators[i].name.size() == 1 &&
        std::string(kLeafAlphabet).find(generators[i].name[0]) != std::string::npos)
      throw std::invalid_argument("generator name collides with leaf alphabet: " +
                                  generators[i].name);
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i].name == generators[j].name)
        throw std::invalid_argument("duplicate generator name: " + generators[i].name);
  }
  for (const auto& rel : relations)
    for (const auto& term : rel) {
      int leaves = 0;
      std::vector<int> seen(3, 0);
      for (auto c : term.tree.code) {
        if (c > 0) {
          ++leaves;
          if (c < 1 || c > 3) throw std::invalid_argument("relation leaf outside a,b,c");
          ++seen[static_cast<std::size_t>(c - 1)];
        } else {
          int g = -c - 1;
          if (g < 0 || g >= static_cast<int>(generators.size()))
            throw std::invalid_argument("relation uses undeclared generator");
        }
      }
      if (leaves != 3 || seen[0] != 1 || seen[1] != 1 || seen[2] != 1)
        throw std::invalid_argument("relation term must use letters a,b,c exactly once each");
    }
}

int AlgebraPresentation::variable_index(const std::string& vname) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == vname) return static_cast<int>(i);
  return -1;
}

void AlgebraPresentation::validate() const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    for (std::size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j])
        throw std::invalid_argument("duplicate variable name: " + variables[i]);
  for (const auto& v : variables)
    for (const auto& p : params)
      if (v == p) throw std::invalid_argument("variable name collides with parameter: " + v);
  for (const auto& rel : relations)
    for (const auto& [m, c] : rel.terms)
      if (m.exps.size() != variables.size())
        throw std::invalid_argument("relation monomial over wrong variable count");
}

LinearCombination specialize_element(const Element& el, const Signature& sig,
                                     const std::vector<Rat>& param_values) {
  LinearCombination lc;
  lc.arity = el.empty() ? 0 : el.front().tree.arity();
  for (const auto& term : el) {
    Rat c = term.coeff.evaluate(param_values);
    if (sgn(c) == 0) continue;
    SignedMonomial sm = canonical_form(term.tree, sig);
    lc.add_term(sm.mono, sm.sign * c);
  }
  return lc;
}

}  // namespace operadforge
