#include "operadforge/species.hpp"

#include <stdexcept>

namespace operadforge {

void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_set_partition: n must be positive");
  if (n > kSetPartitionCap) throw std::invalid_argument("for_each_set_partition: n over cap");
  // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> sizes;
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == n) {
      sizes.assign(static_cast<std::size_t>(maxv + 1), 0);
      for (int k = 0; k < n; ++k) ++sizes[static_cast<std::size_t>(a[static_cast<std::size_t>(k)])];
      fn(sizes);
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  rec(rec, 1, 0);
}

long count_set_partitions(int n) {
  long c = 0;
  for_each_set_partition(n, [&](const std::vector<int>&) { ++c; });
  return c;
}

long species_compose_dims(const DimensionTable& dimsA, const DimensionTable& dimsB, int n) {
  if (static_cast<int>(dimsA.size()) < n || static_cast<int>(dimsB.size()) < n)
    throw std::invalid_argument("species_compose_dims: tables must cover arities 1..n");
  long total = 0;
  for_each_set_partition(n, [&](const std::vector<int>& sizes) {
    long prod = dimsA.at(sizes.size() - 1);
    for (int s : sizes) prod *= dimsB.at(static_cast<std::size_t>(s - 1));
    total += prod;
  });
  return total;
}

XiResult xi_check(const OperadPresentation& presA, const OperadPresentation& presB,
                  const OperadPresentation& presC, const ParamAssignment& params) {
  OperadEngine ea(presA, params), eb(presB, params), ec(presC, params);
  DimensionTable da, db;
  for (int k = 1; k <= 4; ++k) {
    da.push_back(ea.dim(k));
    db.push_back(eb.dim(k));
  }
  XiResult r;
  r.species_dim = species_compose_dims(da, db, 4);
  r.operad_dim = ec.dim(4);
  r.equal = r.species_dim == r.operad_dim;
  return r;
}

}  // namespace operadforge
