#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "operadforge/rational.hpp"

namespace operadforge {

// Arithmetic context for Z/p. Elements are plain uint64_t residues in [0, p).
// p must be an odd prime below 2^62 so that products fit in __uint128_t.
struct PrimeField {
  std::uint64_t p = 0;

  using Elem = std::uint64_t;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (p <= 2) throw std::invalid_argument("PrimeField: p must be an odd prime > 2");
  }

  static Elem zero() { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // Reduction of an exact rational; nullopt when p divides the denominator.
  std::optional<Elem> from_rat(const Rat& q) const;
};

// Precomputed multiplier for repeated c*x mod p (Shoup's trick); used in the
// elimination hot loop.
struct ShoupMul {
  std::uint64_t c = 0, c_pre = 0, p = 0;
  ShoupMul(std::uint64_t c_, std::uint64_t p_) : c(c_), p(p_) {
    c_pre = static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) << 64) / p);
  }
  std::uint64_t operator()(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(c_pre) * x) >> 64);
    std::uint64_t r = c * x - q * p;
    return r >= p ? r - p : r;
  }
};

bool is_probable_prime(std::uint64_t n);

// Two fixed primes just above 2^31, used for certified modular ranks.
std::vector<std::uint64_t> default_rank_primes();

}  // namespace operadforge
