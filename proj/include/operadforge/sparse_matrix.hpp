#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "operadforge/prime_field.hpp"
#include "operadforge/rational.hpp"

namespace operadforge {

struct RationalField {
  using Elem = Rat;
  static Elem zero() { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem inv(const Elem& a) const { return Rat(1) / a; }
};

// Row-major sparse matrix over an exact field. Entries are (column, value)
// pairs sorted by column with no stored zeros. Matrices are immutable after
// construction; the algorithms below return new objects.
template <class F>
struct SparseMatrix {
  using Field = F;
  using Elem = typename F::Elem;
  using Entry = std::pair<std::int32_t, Elem>;
  using Row = std::vector<Entry>;

  F field{};
  int nrows = 0;
  int ncols = 0;
  std::vector<Row> rows;

  SparseMatrix() = default;
  SparseMatrix(F f, int nr, int nc) : field(f), nrows(nr), ncols(nc), rows(nr) {}

  void set_row(int i, Row r) {
    for (auto& [c, v] : r) {
      if (c < 0 || c >= ncols) throw std::out_of_range("SparseMatrix: column out of range");
      (void)v;
    }
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    rows.at(static_cast<std::size_t>(i)) = std::move(r);
  }

  std::size_t nnz() const {
    std::size_t t = 0;
    for (const auto& r : rows) t += r.size();
    return t;
  }
};

using RatMatrix = SparseMatrix<RationalField>;
using FpMatrix = SparseMatrix<PrimeField>;

// Incremental row-echelon accumulator. Inserted rows are reduced against the
// pivots found so far; surviving rows are stored with unit pivot coefficient.
// make_rref() back-substitutes to the unique reduced form.
template <class F>
class Echelon {
 public:
  using Elem = typename F::Elem;
  using Entry = typename SparseMatrix<F>::Entry;
  using Row = typename SparseMatrix<F>::Row;

  Echelon(F field, int ncols)
      : field_(field), ncols_(ncols), pivot_row_of_col_(static_cast<std::size_t>(ncols), -1),
        scratch_(static_cast<std::size_t>(ncols)) {}

  // Returns true when the row was independent (rank grew).
  bool insert(const Row& row) {
    int lead = load(row);
    if (lead < 0) return false;
    return eliminate_and_store(lead);
  }

  // Reduces a row against the echelon without inserting. Empty result means
  // the row lies in the current row space.
  Row reduce(const Row& row) {
    int lead = load(row);
    Row out;
    if (lead < 0) return out;
    for (int j = lead; j < ncols_; ++j) {
      if (field_.is_zero(scratch_[static_cast<std::size_t>(j)])) continue;
      int pr = pivot_row_of_col_[static_cast<std::size_t>(j)];
      if (pr >= 0) {
        axpy_subtract(scratch_[static_cast<std::size_t>(j)], rows_[static_cast<std::size_t>(pr)]);
      } else {
        out.emplace_back(j, scratch_[static_cast<std::size_t>(j)]);
      }
    }
    clear(lead);
    return out;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return ncols_; }
  const std::vector<Row>& rows() const { return rows_; }

  std::vector<int> pivot_cols_sorted() const {
    std::vector<int> piv;
    for (int j = 0; j < ncols_; ++j)
      if (pivot_row_of_col_[static_cast<std::size_t>(j)] >= 0) piv.push_back(j);
    return piv;
  }

  // Full back-substitution; afterwards rows() are the unique RREF rows in
  // pivot-column order.
  void make_rref() {
    std::vector<int> piv = pivot_cols_sorted();
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
      int ri = pivot_row_of_col_[static_cast<std::size_t>(*it)];
      Row& r = rows_[static_cast<std::size_t>(ri)];
      int lead = load(r);
      if (lead < 0) continue;
      Row out;
      out.emplace_back(lead, field_.one());
      scratch_[static_cast<std::size_t>(lead)] = F::zero();
      for (int j = lead + 1; j < ncols_; ++j) {
        if (field_.is_zero(scratch_[static_cast<std::size_t>(j)])) continue;
        int pr = pivot_row_of_col_[static_cast<std::size_t>(j)];
        if (pr >= 0 && j != lead) {
          axpy_subtract(scratch_[static_cast<std::size_t>(j)], rows_[static_cast<std::size_t>(pr)]);
        } else {
          out.emplace_back(j, scratch_[static_cast<std::size_t>(j)]);
        }
      }
      clear(lead);
      r = std::move(out);
    }
    // reorder rows by pivot column
    std::vector<Row> ordered;
    ordered.reserve(rows_.size());
    for (int j : piv) ordered.push_back(std::move(rows_[static_cast<std::size_t>(pivot_row_of_col_[static_cast<std::size_t>(j)])]));
    rows_ = std::move(ordered);
    for (std::size_t i = 0; i < piv.size(); ++i)
      pivot_row_of_col_[static_cast<std::size_t>(piv[i])] = static_cast<int>(i);
  }

  SparseMatrix<F> to_matrix() const {
    SparseMatrix<F> m(field_, rank(), ncols_);
    m.rows = rows_;
    return m;
  }

 private:
  // Loads a sparse row into the dense scratch; returns leading column or -1.
  int load(const Row& row) {
    int lead = ncols_;
    for (const auto& [c, v] : row) {
      if (c < 0 || c >= ncols_) throw std::out_of_range("Echelon: column out of range");
      if (field_.is_zero(v)) continue;
      scratch_[static_cast<std::size_t>(c)] = field_.add(scratch_[static_cast<std::size_t>(c)], v);
      lead = std::min(lead, c);
    }
    while (lead < ncols_ && field_.is_zero(scratch_[static_cast<std::size_t>(lead)])) ++lead;
    return lead == ncols_ ? -1 : lead;
  }

  void clear(int from) {
    for (int j = from; j < ncols_; ++j) scratch_[static_cast<std::size_t>(j)] = F::zero();
  }

  void axpy_subtract(Elem c, const Row& pivot_row) {
    if constexpr (std::is_same_v<F, PrimeField>) {
      ShoupMul mc(c, field_.p);
      for (const auto& [col, v] : pivot_row) {
        std::uint64_t& s = scratch_[static_cast<std::size_t>(col)];
        s = field_.sub(s, mc(v));
      }
    } else {
      for (const auto& [col, v] : pivot_row) {
        auto& s = scratch_[static_cast<std::size_t>(col)];
        s = field_.sub(s, field_.mul(c, v));
      }
    }
  }

  bool eliminate_and_store(int lead) {
    for (int j = lead; j < ncols_; ++j) {
      if (field_.is_zero(scratch_[static_cast<std::size_t>(j)])) continue;
      int pr = pivot_row_of_col_[static_cast<std::size_t>(j)];
      if (pr >= 0) {
        axpy_subtract(scratch_[static_cast<std::size_t>(j)], rows_[static_cast<std::size_t>(pr)]);
        continue;
      }
      Elem piv_inv = field_.inv(scratch_[static_cast<std::size_t>(j)]);
      Row stored;
      for (int k = j; k < ncols_; ++k) {
        if (field_.is_zero(scratch_[static_cast<std::size_t>(k)])) continue;
        stored.emplace_back(k, field_.mul(piv_inv, scratch_[static_cast<std::size_t>(k)]));
      }
      clear(j);
      pivot_row_of_col_[static_cast<std::size_t>(j)] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(stored));
      return true;
    }
    return false;
  }

  F field_;
  int ncols_;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_of_col_;
  std::vector<Elem> scratch_;
};

template <class F>
struct RowReduceResult {
  SparseMatrix<F> rref;
  std::vector<int> pivots;
};

namespace detail {

// Rational rows are fed to the echelon cheapest-first; this is the
// bit-complexity pivoting policy (small entries become pivots early and
// coefficient growth stays tame on the ideal matrices we meet).
inline std::vector<std::size_t> insertion_order(const RatMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  keyed.reserve(m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    std::size_t w = 0;
    for (const auto& [c, v] : m.rows[i]) {
      (void)c;
      w += rat_complexity(v);
    }
    keyed.emplace_back(w, i);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::size_t> order;
  order.reserve(keyed.size());
  for (const auto& [w, i] : keyed) order.push_back(i);
  return order;
}

template <class F>
std::vector<std::size_t> insertion_order(const SparseMatrix<F>& m) {
  std::vector<std::size_t> order(m.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return order;
}

template <class F>
Echelon<F> build_echelon(const SparseMatrix<F>& m) {
  Echelon<F> e(m.field, m.ncols);
  for (std::size_t i : insertion_order(m)) e.insert(m.rows[i]);
  return e;
}

}  // namespace detail

template <class F>
int rank(const SparseMatrix<F>& m) {
  return detail::build_echelon(m).rank();
}

template <class F>
RowReduceResult<F> row_reduce(const SparseMatrix<F>& m) {
  auto e = detail::build_echelon(m);
  e.make_rref();
  return {e.to_matrix(), e.pivot_cols_sorted()};
}

template <class F>
bool in_row_space(const SparseMatrix<F>& m, const std::vector<typename F::Elem>& v) {
  if (static_cast<int>(v.size()) != m.ncols)
    throw std::invalid_argument("in_row_space: dimension mismatch");
  auto e = detail::build_echelon(m);
  typename SparseMatrix<F>::Row row;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!m.field.is_zero(v[j])) row.emplace_back(static_cast<std::int32_t>(j), v[j]);
  return e.reduce(row).empty();
}

// Basis of the right kernel {v : Mv = 0}, read off the RREF staircase.
template <class F>
std::vector<typename SparseMatrix<F>::Row> nullspace_basis(const SparseMatrix<F>& m) {
  auto rr = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.ncols), false);
  for (int j : rr.pivots) is_pivot[static_cast<std::size_t>(j)] = true;
  std::vector<typename SparseMatrix<F>::Row> basis;
  for (int f = 0; f < m.ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    typename SparseMatrix<F>::Row v;
    for (std::size_t i = 0; i < rr.rref.rows.size(); ++i) {
      for (const auto& [c, val] : rr.rref.rows[i]) {
        if (c == f) v.emplace_back(rr.pivots[i], m.field.neg(val));
      }
    }
    v.emplace_back(f, m.field.one());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
SparseMatrix<F> transpose(const SparseMatrix<F>& m) {
  SparseMatrix<F> t(m.field, m.ncols, m.nrows);
  for (int i = 0; i < m.nrows; ++i)
    for (const auto& [c, v] : m.rows[static_cast<std::size_t>(i)])
      t.rows[static_cast<std::size_t>(c)].emplace_back(i, v);
  return t;
}

std::optional<FpMatrix> reduce_mod_p(const RatMatrix& m, std::uint64_t p);

struct MultimodularRank {
  int rank = 0;
  bool stable = false;
  std::vector<std::pair<std::uint64_t, int>> per_prime;
  std::vector<std::uint64_t> skipped_primes;
};

// Max of mod-p ranks; the stability flag means the two largest usable primes
// agreed. Each mod-p rank is a lower bound for the rational rank.
MultimodularRank multimodular_rank(const RatMatrix& m, const std::vector<std::uint64_t>& primes);

// MatrixMarket-style coordinate dump (exact rational values), for external
// cross-checks.
void write_matrix_market(const RatMatrix& m, std::ostream& os);

}  // namespace operadforge
