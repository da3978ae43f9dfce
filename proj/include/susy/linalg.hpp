#pragma once

#include <optional>
#include <vector>

#include "susy/rational.hpp"

namespace susy {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank via fraction-free-enough Gaussian elimination (exact rationals).
int matrix_rank(RationalMatrix a);

// Solves A c = b exactly. Returns nullopt when the system is inconsistent or
// the solution is not unique (A must have full column rank to succeed).
std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b);

}  // namespace susy
