#pragma once

#include <random>
#include <vector>

#include "susy/polynomial.hpp"

namespace susy::test {

inline long rng_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline long rng_nonzero(std::mt19937_64& rng, long lo, long hi) {
  long v = 0;
  while (v == 0) v = rng_int(rng, lo, hi);
  return v;
}

inline Polynomial X(const VarSpec& spec, int i, int e = 1) {
  return Polynomial::variable(spec, VarRef::x(i), e);
}

inline Polynomial Y(const VarSpec& spec, int j, int e = 1) {
  return Polynomial::variable(spec, VarRef::y(j), e);
}

inline Polynomial C(const VarSpec& spec, long v) { return Polynomial::constant(spec, Rational(v)); }

struct TermSpec {
  std::vector<int> xe, ye;
  long num = 0;
  long den = 1;
};

inline Polynomial make_poly(const VarSpec& spec, const std::vector<TermSpec>& terms) {
  Polynomial p(spec);
  for (const TermSpec& t : terms) p.add_term(Monomial{t.xe, t.ye}, Rational(t.num, t.den));
  return p;
}

inline Polynomial random_poly(std::mt19937_64& rng, const VarSpec& spec, int max_terms,
                              int max_exp, long max_coeff = 5) {
  Polynomial p(spec);
  int lo = spec.laurent ? -max_exp : 0;
  int terms = static_cast<int>(rng_int(rng, 1, max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial mono{std::vector<int>(spec.m), std::vector<int>(spec.n)};
    for (int& e : mono.xe) e = static_cast<int>(rng_int(rng, lo, max_exp));
    for (int& e : mono.ye) e = static_cast<int>(rng_int(rng, lo, max_exp));
    p.add_term(mono, Rational(rng_nonzero(rng, -max_coeff, max_coeff)));
  }
  return p;
}

// Plain orbit sum over both symmetric groups; a cheap W-invariant generator.
inline Polynomial symmetrize(const Polynomial& p) {
  const VarSpec& spec = p.spec();
  Polynomial acc(spec);
  for_each_permutation(spec.m, [&](const std::vector<int>& xp, int) {
    for_each_permutation(spec.n, [&](const std::vector<int>& yp, int) {
      acc += apply_group(GroupElement{xp, yp}, p);
    });
  });
  return acc;
}

}  // namespace susy::test
