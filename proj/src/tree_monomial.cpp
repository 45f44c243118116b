#include "operadforge/tree_monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace operadforge {

std::string symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Comm: return "comm";
    case Symmetry::Anti: return "anti";
    case Symmetry::NonSym: return "nonsym";
  }
  return "?";
}

Signature flip_signature(const Signature& sig) {
  Signature out = sig;
  for (auto& g : out) {
    if (g.symmetry == Symmetry::Comm)
      g.symmetry = Symmetry::Anti;
    else if (g.symmetry == Symmetry::Anti)
      g.symmetry = Symmetry::Comm;
  }
  return out;
}

std::string signature_key(const Signature& sig) {
  std::string k;
  for (const auto& g : sig) {
    k += g.name;
    k += ':';
    k += symmetry_name(g.symmetry);
    k += ';';
  }
  return k;
}

TreeMonomial TreeMonomial::node(int gen, const TreeMonomial& l, const TreeMonomial& r) {
  TreeMonomial m;
  m.code.reserve(1 + l.code.size() + r.code.size());
  m.code.push_back(static_cast<std::int16_t>(-(gen + 1)));
  m.code.insert(m.code.end(), l.code.begin(), l.code.end());
  m.code.insert(m.code.end(), r.code.begin(), r.code.end());
  return m;
}

int TreeMonomial::arity() const {
  int n = 0;
  for (auto c : code)
    if (c > 0) ++n;
  return n;
}

namespace {

struct CanonResult {
  std::size_t end = 0;
  int min_leaf = 0;
  int sign = 1;
};

CanonResult canonicalize_range(const std::vector<std::int16_t>& code, std::size_t pos,
                               const Signature& sig, std::vector<std::int16_t>& out) {
  if (code[pos] > 0) {
    out.push_back(code[pos]);
    return {pos + 1, code[pos], 1};
  }
  int gen = -code[pos] - 1;
  if (gen < 0 || gen >= static_cast<int>(sig.size()))
    throw std::out_of_range("canonical_form: generator index out of range");
  std::vector<std::int16_t> left, right;
  CanonResult l = canonicalize_range(code, pos + 1, sig, left);
  CanonResult r = canonicalize_range(code, l.end, sig, right);
  int sign = l.sign * r.sign;
  bool swap = false;
  if (sig[static_cast<std::size_t>(gen)].symmetry != Symmetry::NonSym && l.min_leaf > r.min_leaf) {
    swap = true;
    if (sig[static_cast<std::size_t>(gen)].symmetry == Symmetry::Anti) sign = -sign;
  }
  out.push_back(code[pos]);
  if (swap) {
    out.insert(out.end(), right.begin(), right.end());
    out.insert(out.end(), left.begin(), left.end());
  } else {
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), right.begin(), right.end());
  }
  return {r.end, std::min(l.min_leaf, r.min_leaf), sign};
}

}  // namespace

SignedMonomial canonical_form(const TreeMonomial& raw, const Signature& sig) {
  SignedMonomial s;
  s.mono.code.reserve(raw.code.size());
  CanonResult cr = canonicalize_range(raw.code, 0, sig, s.mono.code);
  s.sign = cr.sign;
  return s;
}

namespace {

std::vector<TreeMonomial> enumerate_over(const Signature& sig,
                                         const std::vector<std::int16_t>& leaves) {
  if (leaves.size() == 1) return {TreeMonomial::leaf(leaves[0])};
  std::vector<TreeMonomial> out;
  const std::size_t n = leaves.size();
  // split leaves by bitmask; index 0 is the minimal leaf (leaves sorted)
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // minimal leaf always goes left
    std::vector<std::int16_t> a, b;
    for (std::size_t k = 0; k < n; ++k)
      ((mask >> k) & 1u ? a : b).push_back(leaves[k]);
    auto lefts = enumerate_over(sig, a);
    auto rights = enumerate_over(sig, b);
    for (std::size_t g = 0; g < sig.size(); ++g) {
      bool nonsym = sig[g].symmetry == Symmetry::NonSym;
      for (const auto& l : lefts)
        for (const auto& r : rights) {
          out.push_back(TreeMonomial::node(static_cast<int>(g), l, r));
          if (nonsym) out.push_back(TreeMonomial::node(static_cast<int>(g), r, l));
        }
    }
  }
  return out;
}

}  // namespace

std::vector<TreeMonomial> enumerate_basis(const Signature& sig, int n, int arity_cap) {
  if (sig.empty()) throw std::invalid_argument("enumerate_basis: empty signature");
  if (n < 1) throw std::invalid_argument("enumerate_basis: arity must be positive");
  if (n > arity_cap) throw std::invalid_argument("enumerate_basis: arity over cap");
  std::vector<std::int16_t> leaves(static_cast<std::size_t>(n));
  std::iota(leaves.begin(), leaves.end(), 1);
  auto out = enumerate_over(sig, leaves);
  std::sort(out.begin(), out.end());
  return out;
}

SignedMonomial compose(const TreeMonomial& m1, int i, const TreeMonomial& m2,
                       const Signature& sig) {
  int k = m1.arity();
  if (i < 1 || i > k) throw std::out_of_range("compose: input index out of range");
  int m = m2.arity();
  TreeMonomial raw;
  raw.code.reserve(m1.code.size() + m2.code.size());
  for (auto c : m1.code) {
    if (c <= 0) {
      raw.code.push_back(c);
    } else if (c < i) {
      raw.code.push_back(c);
    } else if (c == i) {
      for (auto d : m2.code)
        raw.code.push_back(d > 0 ? static_cast<std::int16_t>(d + i - 1) : d);
    } else {
      raw.code.push_back(static_cast<std::int16_t>(c + m - 1));
    }
  }
  return canonical_form(raw, sig);
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(static_cast<std::size_t>(n));
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

Permutation Permutation::compose_after(const Permutation& tau) const {
  Permutation r;
  r.img.resize(img.size());
  for (std::size_t k = 0; k < img.size(); ++k)
    r.img[k] = (*this)(tau(static_cast<int>(k) + 1));
  return r;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(img.size(), false);
  for (int v : img) {
    if (v < 1 || v > static_cast<int>(img.size()) || seen[static_cast<std::size_t>(v - 1)])
      return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

int Permutation::sign() const {
  int s = 1;
  std::vector<bool> seen(img.size(), false);
  for (std::size_t k = 0; k < img.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0, j = k;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(img[j] - 1);
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  std::vector<bool> seen(img.size(), false);
  for (std::size_t k = 0; k < img.size(); ++k) {
    if (seen[k]) continue;
    int len = 0;
    std::size_t j = k;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(img[j] - 1);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{img});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> class_representatives(int n) {
  // partitions of n in decreasing order, each realized by consecutive cycles
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      parts.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::vector<Permutation> reps;
  for (const auto& pt : parts) {
    Permutation p = Permutation::identity(n);
    int base = 0;
    for (int len : pt) {
      for (int k = 0; k < len; ++k)
        p.img[static_cast<std::size_t>(base + k)] = base + (k + 1) % len + 1;
      base += len;
    }
    reps.push_back(std::move(p));
  }
  return reps;
}

SignedMonomial relabel(const TreeMonomial& m, const Permutation& sigma, const Signature& sig) {
  TreeMonomial raw = m;
  for (auto& c : raw.code)
    if (c > 0) c = static_cast<std::int16_t>(sigma(c));
  return canonical_form(raw, sig);
}

void LinearCombination::add_term(const TreeMonomial& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

LinearCombination& LinearCombination::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

LinearCombination act(const Permutation& sigma, const LinearCombination& v, const Signature& sig) {
  if (sigma.n() != v.arity) throw std::invalid_argument("act: arity mismatch");
  if (!sigma.is_valid()) throw std::invalid_argument("act: not a permutation");
  LinearCombination out;
  out.arity = v.arity;
  for (const auto& [m, c] : v.terms) {
    SignedMonomial sm = relabel(m, sigma, sig);
    out.add_term(sm.mono, sm.sign * c);
  }
  return out;
}

LinearCombination compose(const LinearCombination& a, int i, const LinearCombination& b,
                          const Signature& sig) {
  LinearCombination out;
  out.arity = a.arity + b.arity - 1;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      SignedMonomial sm = compose(ma, i, mb, sig);
      out.add_term(sm.mono, sm.sign * ca * cb);
    }
  return out;
}

std::string monomial_to_string(const TreeMonomial& m, const Signature& sig) {
  std::ostringstream os;
  auto rec = [&](auto&& self, std::size_t pos) -> std::size_t {
    if (m.code[pos] > 0) {
      os << static_cast<int>(m.code[pos]);
      return pos + 1;
    }
    int gen = -m.code[pos] - 1;
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

std::string combination_to_string(const LinearCombination& v, const Signature& sig) {
  if (v.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v.terms) {
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (a != 1) os << rat_to_string(a) << "*";
    os << monomial_to_string(m, sig);
  }
  return os.str();
}

}  // namespace operadforge
