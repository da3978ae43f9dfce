#include <doctest.h>

#include "susy/supersym.hpp"
#include "test_util.hpp"

using namespace susy;
using namespace susy::test;

namespace {

Partition P(std::vector<int> parts) { return Partition::of(std::move(parts)); }

const VarSpec S11{1, 1, false};
const VarSpec S22{2, 2, false};

std::vector<Partition> hook_up_to(int m, int n, int max_size) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_size; ++d)
    for (const Partition& lambda : enumerate_hook(m, n, d)) out.push_back(lambda);
  return out;
}

}  // namespace

TEST_CASE("supersymmetry predicate") {
  CHECK(is_supersymmetric(X(S11, 1) + Y(S11, 1)));
  CHECK_FALSE(is_supersymmetric(X(S11, 1, 2) + Y(S11, 1, 2)));
  CHECK(is_supersymmetric(t_element(2, 2)));
  CHECK(is_supersymmetric(C(S22, 7)));
  // m = 0 or n = 0 reduces to plain symmetry.
  VarSpec s20{2, 0, false};
  CHECK(is_supersymmetric(X(s20, 1) * X(s20, 2)));
  CHECK_FALSE(is_supersymmetric(X(s20, 1, 2) * X(s20, 2)));
  CHECK_THROWS_AS(is_supersymmetric(Polynomial::zero(VarSpec{1, 1, true})), domain_error);

  // Cross-check T(2,2) against substitution independence: the image under
  // x_1 = t, y_1 = -t must match the t = 0 image for several scalar t.
  Polynomial t22 = t_element(2, 2);
  Polynomial at_zero = substitute(t22, {{VarRef::x(1), Polynomial::zero(S22)},
                                        {VarRef::y(1), Polynomial::zero(S22)}});
  for (long t : {-2L, -1L, 1L, 2L, 3L}) {
    Polynomial image = substitute(t22, {{VarRef::x(1), C(S22, t)}, {VarRef::y(1), C(S22, -t)}});
    CHECK(image == at_zero);
  }
}

TEST_CASE("power sums") {
  CHECK(power_sum(1, 1, 1) == X(S11, 1) + Y(S11, 1));
  CHECK(power_sum(2, 1, 1) == X(S11, 1, 2) - Y(S11, 1, 2));
  VarSpec s21{2, 1, false};
  CHECK(power_sum(3, 2, 1) == X(s21, 1, 3) + X(s21, 2, 3) + Y(s21, 1, 3));
  CHECK_THROWS_AS(power_sum(0, 1, 1), domain_error);
  for (int r = 1; r <= 5; ++r) CHECK(is_supersymmetric(power_sum(r, 2, 2)));
}

TEST_CASE("T element") {
  CHECK(t_element(1, 1) == X(S11, 1) + Y(S11, 1));
  VarSpec s21{2, 1, false};
  CHECK(t_element(2, 1) == (X(s21, 1) + Y(s21, 1)) * (X(s21, 2) + Y(s21, 1)));
  CHECK(t_element(0, 3) == Polynomial::constant(VarSpec{0, 3, false}, Rational(1)));
}

TEST_CASE("super Schur elements") {
  CHECK(super_schur(P({1}), 1, 1) == X(S11, 1) + Y(S11, 1));
  CHECK(super_schur(P({2}), 1, 1) == X(S11, 1, 2) + X(S11, 1) * Y(S11, 1));
  CHECK(super_schur(P({1, 1}), 1, 1) == X(S11, 1) * Y(S11, 1) + Y(S11, 1, 2));
  CHECK(super_schur(P({2, 2}), 1, 1).is_zero());  // outside the hook
  CHECK(super_schur(P({}), 2, 2) == C(S22, 1));

  CHECK(super_schur_factored(P({1}), 1, 1) == X(S11, 1) + Y(S11, 1));
  CHECK(super_schur_factored(P({2}), 1, 1) == (X(S11, 1) + Y(S11, 1)) * X(S11, 1));
  CHECK(super_schur_factored(P({2, 1}), 1, 1) ==
        (X(S11, 1) + Y(S11, 1)) * X(S11, 1) * Y(S11, 1));
  CHECK_THROWS_AS(super_schur_factored(P({1}), 2, 1), domain_error);

  for (const Partition& lambda : hook_up_to(2, 2, 5)) {
    Polynomial f = super_schur(lambda, 2, 2);
    CHECK(is_supersymmetric(f));
    if (in_h0(lambda, 2, 2)) CHECK(f == super_schur_factored(lambda, 2, 2));
  }
  // A larger shape as a spot check.
  CHECK(is_supersymmetric(super_schur(P({4, 2, 1}), 3, 2)));
}

TEST_CASE("evaluation map and kernel witnesses") {
  CHECK(phi_s(super_schur(P({1}), 1, 1)).is_zero());
  for (const Partition& lambda : hook_up_to(1, 1, 4)) {
    CHECK(phi_s(super_schur(lambda, 2, 2)) == super_schur(lambda, 1, 1));
  }
  CHECK(phi_s(power_sum(2, 2, 2)) == power_sum(2, 1, 1));
  CHECK_THROWS_AS(phi_s(X(S22, 1)), domain_error);
  CHECK_THROWS_AS(phi_s(power_sum(1, 1, 0)), domain_error);

  CHECK(kernel_witness(super_schur(P({2}), 1, 1)) == X(S11, 1));
  CHECK(kernel_witness(t_element(2, 2)) == C(S22, 1));
  CHECK(kernel_witness(super_schur(P({2, 1}), 1, 1)) == X(S11, 1) * Y(S11, 1));
  CHECK_THROWS_AS(kernel_witness(power_sum(1, 1, 1) + C(S11, 1)), domain_error);

  // Kernel membership matches the corner-cell condition; witnesses multiply back.
  for (const Partition& lambda : hook_up_to(2, 2, 5)) {
    Polynomial f = super_schur(lambda, 2, 2);
    bool in_kernel = phi_s(f).is_zero();
    CHECK(in_kernel == in_h0(lambda, 2, 2));
    if (in_kernel) {
      Polynomial witness = kernel_witness(f);
      CHECK(is_w_invariant(witness));
      CHECK(t_element(2, 2) * witness == f);
    }
  }

  // Stability: dropping the last y variable relates consecutive specs.
  for (const Partition& lambda : hook_up_to(2, 1, 5)) {
    Polynomial big = super_schur(lambda, 2, 2);
    Polynomial dropped =
        shrink_to(substitute(big, {{VarRef::y(2), Polynomial::zero(S22)}}), 2, 1);
    CHECK(dropped == super_schur(lambda, 2, 1));
  }
}

TEST_CASE("basis decomposition") {
  BasisDecomposition dec = decompose(power_sum(2, 1, 1));
  REQUIRE(dec.coeffs.size() == 2);
  CHECK(dec.coeffs.at(P({2})) == Rational(1));
  CHECK(dec.coeffs.at(P({1, 1})) == Rational(-1));

  BasisDecomposition single = decompose(super_schur(P({3, 1}), 2, 2));
  REQUIRE(single.coeffs.size() == 1);
  CHECK(single.coeffs.at(P({3, 1})) == Rational(1));

  Polynomial square = power_sum(1, 1, 1) * power_sum(1, 1, 1);
  BasisDecomposition sq = decompose(square);
  REQUIRE(sq.coeffs.size() == 2);
  CHECK(sq.coeffs.at(P({2})) == Rational(1));
  CHECK(sq.coeffs.at(P({1, 1})) == Rational(1));

  CHECK_THROWS_AS(decompose(X(S11, 1)), domain_error);
  CHECK_THROWS_AS(decompose(power_sum(6, 1, 1) * power_sum(8, 1, 1)), domain_error);
  CHECK(decompose(power_sum(6, 1, 1) * power_sum(8, 1, 1), 14).all_integral());

  // Round trip on random integer combinations of basis elements.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial p(S22);
    BasisDecomposition expected;
    expected.m = expected.n = 2;
    for (const Partition& lambda : hook_up_to(2, 2, 5)) {
      long c = rng_int(rng, -3, 3);
      if (c == 0) continue;
      expected.coeffs.emplace(lambda, Rational(c));
      p += Rational(c) * super_schur(lambda, 2, 2);
    }
    CHECK(decompose(p) == expected);
  }

  // Ring closure: products of supersymmetric polynomials decompose exactly.
  std::vector<Polynomial> gens{power_sum(1, 2, 2), power_sum(2, 2, 2),
                               super_schur(P({2, 1}), 2, 2)};
  for (const Polynomial& a : gens) {
    for (const Polynomial& b : gens) {
      Polynomial product = a * b;
      CHECK(is_supersymmetric(product));
      CHECK(reconstruct(decompose(product)) == product);
    }
  }
}
