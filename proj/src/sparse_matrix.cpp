#include "operadforge/sparse_matrix.hpp"

#include <algorithm>

namespace operadforge {

std::optional<FpMatrix> reduce_mod_p(const RatMatrix& m, std::uint64_t p) {
  PrimeField f(p);
  FpMatrix out(f, m.nrows, m.ncols);
  for (int i = 0; i < m.nrows; ++i) {
    for (const auto& [c, v] : m.rows[static_cast<std::size_t>(i)]) {
      auto e = f.from_rat(v);
      if (!e) return std::nullopt;
      if (*e != 0) out.rows[static_cast<std::size_t>(i)].emplace_back(c, *e);
    }
  }
  return out;
}

MultimodularRank multimodular_rank(const RatMatrix& m, const std::vector<std::uint64_t>& primes) {
  if (primes.size() < 2)
    throw std::invalid_argument("multimodular_rank: need at least 2 primes");
  for (std::uint64_t p : primes)
    if (p <= (1ULL << 20))
      throw std::invalid_argument("multimodular_rank: primes must exceed 2^20");

  MultimodularRank result;
  for (std::uint64_t p : primes) {
    auto mp = reduce_mod_p(m, p);
    if (!mp) {
      result.skipped_primes.push_back(p);
      continue;
    }
    result.per_prime.emplace_back(p, rank(*mp));
  }
  for (const auto& [p, r] : result.per_prime) result.rank = std::max(result.rank, r);
  if (result.per_prime.size() >= 2) {
    auto sorted = result.per_prime;
    std::sort(sorted.begin(), sorted.end());
    result.stable = sorted[sorted.size() - 1].second == sorted[sorted.size() - 2].second;
  }
  return result;
}

void write_matrix_market(const RatMatrix& m, std::ostream& os) {
  os << "%%MatrixMarket matrix coordinate rational general\n";
  os << m.nrows << ' ' << m.ncols << ' ' << m.nnz() << '\n';
  for (int i = 0; i < m.nrows; ++i)
    for (const auto& [c, v] : m.rows[static_cast<std::size_t>(i)])
      os << (i + 1) << ' ' << (c + 1) << ' ' << rat_to_string(v) << '\n';
}

}  // namespace operadforge
