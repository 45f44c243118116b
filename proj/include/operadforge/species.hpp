#pragma once

#include <functional>
#include <vector>

#include "operadforge/operad_engine.hpp"

namespace operadforge {

// dims[k] is the dimension of the arity-(k+1) component.
using DimensionTable = std::vector<long>;

constexpr int kSetPartitionCap = 8;

// Enumerates set partitions of {1..n} by restricted-growth strings; the
// callback receives the block sizes of each partition.
void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& fn);

long count_set_partitions(int n);  // Bell numbers, for cross-checks

// dim (A o B)(n) = sum over set partitions pi of dimsA(#blocks) * prod over
// blocks of dimsB(|block|).
long species_compose_dims(const DimensionTable& dimsA, const DimensionTable& dimsB, int n);

struct XiResult {
  long species_dim = 0;  // dim (A o B)(4)
  long operad_dim = 0;   // dim C(4)
  bool equal = false;
};

// Distributive-law hypothesis check at arity 4: compares the species
// composition of the components of A and B against the engine dimension of C.
XiResult xi_check(const OperadPresentation& presA, const OperadPresentation& presB,
                  const OperadPresentation& presC, const ParamAssignment& params);

}  // namespace operadforge
