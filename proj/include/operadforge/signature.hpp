#pragma once

#include <string>
#include <vector>

namespace operadforge {

enum class Symmetry { Comm, Anti, NonSym };

std::string symmetry_name(Symmetry s);

// A binary operation symbol. All generators in v1 are binary.
struct GeneratorSymbol {
  std::string name;
  int arity = 2;
  Symmetry symmetry = Symmetry::NonSym;

  bool operator==(const GeneratorSymbol&) const = default;
};

using Signature = std::vector<GeneratorSymbol>;

// Symmetry-flipped copy: comm <-> anti, nonsym fixed. Used for quadratic duals.
Signature flip_signature(const Signature& sig);

std::string signature_key(const Signature& sig);

}  // namespace operadforge
