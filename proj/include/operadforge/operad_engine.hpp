#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "operadforge/presentation.hpp"
#include "operadforge/sparse_matrix.hpp"

namespace operadforge {

// Arity-n component of the operadic ideal: RREF rows over the canonical
// monomial basis of the free component.
struct IdealBasis {
  int arity = 0;
  RatMatrix matrix;
  std::vector<int> pivots;

  int rank() const { return matrix.nrows; }
};

struct ModularDimension {
  int arity = 0;
  long dim_free = 0;
  int rank = 0;  // max over usable primes
  long dim = 0;  // dim_free - rank
  bool stable = false;
  std::vector<std::pair<std::uint64_t, int>> per_prime;
  std::vector<std::uint64_t> skipped_primes;
};

// Computes components of a presented operad at fixed parameter values.
// Instances cache free bases, transition tables and ideal components; they
// are not thread-safe, but independent instances may run concurrently.
class OperadEngine {
 public:
  OperadEngine(OperadPresentation pres, const ParamAssignment& params,
               int exact_cap = 4, int arity_cap = kDefaultArityCap);

  const OperadPresentation& presentation() const { return pres_; }
  const Signature& signature() const { return pres_.generators; }
  int exact_cap() const { return exact_cap_; }
  int arity_cap() const { return arity_cap_; }

  const std::vector<TreeMonomial>& basis(int n);
  long dim_free(int n);
  int basis_index(int n, const TreeMonomial& m);

  // Exact rational ideal component; requires 3 <= n <= exact_cap.
  const IdealBasis& ideal(int n);

  // Quotient dimension over the rationals; n = 1, 2 are handled directly.
  long dim(int n);

  // Modular dimension with the multi-prime agreement policy.
  ModularDimension dim_modular(int n, const std::vector<std::uint64_t>& primes);

  bool in_ideal(const LinearCombination& element);
  bool in_ideal(const Element& element);

  // Trace of sigma on the quotient component (exact arities only).
  Rat character(int n, const Permutation& sigma);

  LinearCombination specialize(const Element& el) const;

 private:
  struct OpTable {
    std::vector<std::pair<std::int32_t, std::int8_t>> map;  // src index -> (dst index, sign)
  };

  const std::vector<OpTable>& transition_ops(int m);  // arity m -> m+1
  std::vector<RatMatrix::Row> seed_rows();            // S3 orbit of the relations

  OperadPresentation pres_;
  std::vector<Rat> param_values_;
  int exact_cap_;
  int arity_cap_;
  std::map<int, std::vector<TreeMonomial>> bases_;
  std::map<int, std::vector<OpTable>> ops_;
  std::map<int, IdealBasis> ideals_;
};

IdealBasis expand_ideal(const OperadPresentation& pres, const ParamAssignment& params, int n,
                        int arity_cap = kDefaultArityCap);

struct ComponentReport {
  std::string preset;
  std::string params;
  int n = 0;
  long dim_free = 0;
  int rank_ideal = 0;
  long dim = 0;
  std::string field;  // "rational" or "mod p1,p2"
  bool stable = true;
  long elapsed_ms = 0;
};

enum class FieldMode { Exact, Modular };

ComponentReport component_dimension(const OperadPresentation& pres, const ParamAssignment& params,
                                    int n, FieldMode mode,
                                    const std::vector<std::uint64_t>& primes = {});

struct MorphismResult {
  bool symmetry_ok = true;
  bool relations_ok = true;
  std::string detail;

  explicit operator bool() const { return symmetry_ok && relations_ok; }
};

// Checks that mapping each source generator to the assigned arity-2
// combination sends every source relation into the target ideal. A symmetric
// (antisymmetric) generator must map to a symmetric (antisymmetric)
// combination; violations make the result false rather than throwing.
MorphismResult check_morphism(const OperadPresentation& source, const OperadPresentation& target,
                              const std::map<std::string, Element>& assignment,
                              const ParamAssignment& params);

}  // namespace operadforge
