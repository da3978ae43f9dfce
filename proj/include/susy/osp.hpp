#pragma once

#include <utility>
#include <vector>

#include "susy/polynomial.hpp"

namespace susy {

// Polynomials on the Cartan subalgebra use the x block for h_1..h_m and the
// y block for h'_1..h'_n, never Laurent.
enum class OspKind { glmn, ospodd, ospeven };

struct OspSpec {
  OspKind kind = OspKind::glmn;
  int m = 0;
  int n = 0;
};

// An element of W' = (Z_2^m x S_m) x (Z_2^n x S_n): signs composed with a
// permutation per block, acting by h_i -> xsigns[i] * h_{xperm[i]}.
struct SignVector {
  std::vector<int> xsigns, ysigns;  // entries +1 or -1
  std::vector<int> xperm, yperm;    // 0-based

  static SignVector identity(int m, int n);
};

Polynomial apply_wprime(const SignVector& g, const Polynomial& f);

// W is the index-two subgroup changing an even number of h-signs. Checked on
// generators: adjacent transpositions, single h'-flips, adjacent h-pair
// flips.
bool is_osp_w_invariant(const Polynomial& f);

// Invariance under all of W' (adds the single h-flips).
bool is_osp_wprime_invariant(const Polynomial& f);

// Splits a W-invariant f into f = f1 + fsigma with f1 fixed by W' and fsigma
// transforming by the sign character. Errors when f is not W-invariant.
std::pair<Polynomial, Polynomial> sigma_decompose(const Polynomial& f);

// prod_{i,j} (h_i^2 - h'_j^2).
Polynomial osp_t_element(int m, int n);

// (h_1 ... h_m) * osp_t_element.
Polynomial phi_cap(int m, int n);

// Membership in the squared-variable supersymmetric ring: all exponents even
// and the polynomial in u_i = h_i^2, v_j = -h'_j^2 supersymmetric.
bool j_membership(const Polynomial& f);

// Pulls an even-exponent polynomial back to u_i = h_i^2, v_j = -h'_j^2
// coordinates (the direction that matches the two T elements). Errors on odd
// exponents.
Polynomial to_squared_coordinates(const Polynomial& f);
Polynomial from_squared_coordinates(const Polynomial& g);

// Image of the Harish-Chandra map, by case: supersymmetry directly (glmn),
// squared-variable supersymmetry (ospodd), or the direct-sum test
// f1 in J and fsigma in Phi * S^{W'} (ospeven).
bool ih_membership(const Polynomial& f, const OspSpec& spec);

}  // namespace susy
