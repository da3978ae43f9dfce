#pragma once

#include <cstdint>
#include <optional>

#include "susy/partitions.hpp"
#include "susy/polynomial.hpp"

namespace susy {

// Indexing data for the Laurent kernel basis.
struct SignaturePair {
  IntegerSignature lambda;  // length m
  IntegerSignature mu;      // length n
};

// True iff p is W-invariant and x_1 dp/dx_1 + y_1 dp/dy_1 is divisible by
// x_1 - y_1 (vacuous when mn = 0). Requires a Laurent spec.
bool is_laurent_supersymmetric(const Polynomial& p);

// prod_{i,j} (1 - y_j/x_i) * E_lambda(x) * E_mu(y).
Polynomial k_element(const SignaturePair& sig, int m, int n);

// prod_{i,j} (1 - y_j/x_i); 1 when mn = 0.
Polynomial t_element_l(int m, int n);

// Evaluation homomorphism setting x_m equal to y_n, into (m-1, n-1).
// Verifies the input; a residual dependence on the merged variable after a
// successful check is an internal error.
Polynomial phi_l(const Polynomial& p);

// The four equivalent membership conditions for the pair (x_1, y_1):
// (a) p in R + S z decided exactly via decompose_r_sz,
// (b) p(x_1 = y_1 = t) independent of t, exactly,
// (c) invariance under scaling the pair, sampled at seeded rational points,
// (d) the pair derivative divisible by x_1 - y_1, exactly.
struct CodConditions {
  bool a = false, b = false, c = false, d = false;
  bool all_equal() const { return a == b && b == c && c == d; }
};

CodConditions cod_check(const Polynomial& p, std::uint64_t seed = 0);

// p = r + s*z with z = 1 - x_1/y_1 and r free of x_1, y_1.
struct RSzDecomposition {
  Polynomial r, s;
};

// Membership in R + Sz is decided by the row-sum identity on the expansion
// of p in powers of x_1 and 1 - z; nullopt when p is not a member.
std::optional<RSzDecomposition> decompose_r_sz(const Polynomial& p);

}  // namespace susy
