#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "operadforge/rational.hpp"
#include "operadforge/signature.hpp"

namespace operadforge {

// A leaf-labeled generator-decorated binary tree in preorder encoding:
// an internal vertex with generator index g is stored as -(g+1), a leaf with
// label l (1-based) as +l. Binary arities make the encoding self-delimiting.
// The same encoding stores both raw trees (e.g. relation ASTs over letters)
// and canonical monomials; only values produced by canonical_form /
// enumerate_basis are canonical.
struct TreeMonomial {
  std::vector<std::int16_t> code;

  static TreeMonomial leaf(int label) { return TreeMonomial{{static_cast<std::int16_t>(label)}}; }
  static TreeMonomial node(int gen, const TreeMonomial& l, const TreeMonomial& r);

  int arity() const;
  bool is_leaf() const { return code.size() == 1 && code[0] > 0; }

  auto operator<=>(const TreeMonomial&) const = default;
};

struct SignedMonomial {
  TreeMonomial mono;
  int sign = 1;  // +1 or -1
};

// Recursive normal form: at every comm/anti vertex the child subtree holding
// the smaller minimal leaf label comes first; each swap at an anti vertex
// flips the sign. Nonsym vertices keep their planar order.
SignedMonomial canonical_form(const TreeMonomial& raw, const Signature& sig);

constexpr int kDefaultArityCap = 5;

// Complete duplicate-free list of canonical monomials of the given arity,
// sorted by code. Throws when n exceeds the cap.
std::vector<TreeMonomial> enumerate_basis(const Signature& sig, int n,
                                          int arity_cap = kDefaultArityCap);

// Grafts m2 into leaf i of m1 (1-based); inner leaves take labels
// i..i+arity(m2)-1 and outer leaves above i shift up. Result is canonicalized.
SignedMonomial compose(const TreeMonomial& m1, int i, const TreeMonomial& m2,
                       const Signature& sig);

struct Permutation {
  std::vector<int> img;  // img[k] is the image of k+1, values 1..n

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int k) const { return img[static_cast<std::size_t>(k - 1)]; }
  static Permutation identity(int n);
  Permutation compose_after(const Permutation& tau) const;  // this ∘ tau
  bool is_valid() const;
  int sign() const;
  std::vector<int> cycle_type() const;  // decreasing part sizes
};

// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);
// One representative per cycle type (conjugacy class) of S_n.
std::vector<Permutation> class_representatives(int n);

SignedMonomial relabel(const TreeMonomial& m, const Permutation& sigma, const Signature& sig);

// Formal rational span of canonical monomials of one arity.
struct LinearCombination {
  int arity = 0;
  std::map<TreeMonomial, Rat> terms;

  void add_term(const TreeMonomial& m, const Rat& c);
  LinearCombination& operator+=(const LinearCombination& o);
  LinearCombination& operator*=(const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const LinearCombination&) const = default;
};

LinearCombination act(const Permutation& sigma, const LinearCombination& v, const Signature& sig);

// Bilinear partial composition of spans.
LinearCombination compose(const LinearCombination& a, int i, const LinearCombination& b,
                          const Signature& sig);

std::string monomial_to_string(const TreeMonomial& m, const Signature& sig);
std::string combination_to_string(const LinearCombination& v, const Signature& sig);

}  // namespace operadforge
