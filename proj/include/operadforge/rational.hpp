#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace operadforge {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) under every operation we use.
using Rat = mpq_class;

// Parses "n", "-n", "n/d". Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& q);

// Bit-size proxy used by the elimination pivot heuristic: total limb bits of
// numerator and denominator.
std::size_t rat_complexity(const Rat& q);

}  // namespace operadforge
