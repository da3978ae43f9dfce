#pragma once

#include <map>

#include "susy/partitions.hpp"
#include "susy/polynomial.hpp"

namespace susy {

// True iff p is W-invariant and (for m,n >= 1) dp/dx_1 - dp/dy_1 is divisible
// by x_1 + y_1. Requires a non-Laurent spec. W-invariance makes checking the
// first pair sufficient.
bool is_supersymmetric(const Polynomial& p);

// sum x_i^r + (-1)^(r-1) sum y_j^r, r >= 1.
Polynomial power_sum(int r, int m, int n);

// prod_{i,j} (x_i + y_j); 1 when mn = 0.
Polynomial t_element(int m, int n);

// Basis element attached to a hook partition, by double alternation of the
// core product followed by one exact division by both Vandermonde
// determinants. Zero when lambda is outside the (m,n)-hook.
Polynomial super_schur(const Partition& lambda, int m, int n);

// t_element * S_mu(x) * S_nu(y); only defined for lambda containing the
// (m,n) corner cell, where it agrees with super_schur.
Polynomial super_schur_factored(const Partition& lambda, int m, int n);

// Evaluation homomorphism x_m = y_n = 0 into (m-1, n-1). Verifies that the
// input is supersymmetric.
Polynomial phi_s(const Polynomial& p);

// For p in the kernel of phi_s: the W-invariant b with p = t_element * b.
// Failure of the division or of W-invariance of the quotient signals a
// violated precondition.
Polynomial kernel_witness(const Polynomial& p);

// Coefficients of a supersymmetric polynomial in the super Schur basis.
struct BasisDecomposition {
  int m = 0;
  int n = 0;
  std::map<Partition, Rational> coeffs;  // keys in the (m,n)-hook, no zeros

  bool all_integral() const;
  bool operator==(const BasisDecomposition&) const = default;
};

// Solves p = sum c_lambda F_lambda exactly, one homogeneous degree at a time.
// Degrees past the cap are refused.
BasisDecomposition decompose(const Polynomial& p, int degree_cap = 12);

Polynomial reconstruct(const BasisDecomposition& dec);

}  // namespace susy
