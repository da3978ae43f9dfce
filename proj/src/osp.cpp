#include "susy/osp.hpp"

#include <numeric>

#include "susy/supersym.hpp"

namespace susy {

SignVector SignVector::identity(int m, int n) {
  SignVector g;
  g.xsigns.assign(m, 1);
  g.ysigns.assign(n, 1);
  g.xperm.resize(m);
  g.yperm.resize(n);
  std::iota(g.xperm.begin(), g.xperm.end(), 0);
  std::iota(g.yperm.begin(), g.yperm.end(), 0);
  return g;
}

Polynomial apply_wprime(const SignVector& g, const Polynomial& f) {
  const VarSpec& spec = f.spec();
  if (static_cast<int>(g.xsigns.size()) != spec.m ||
      static_cast<int>(g.ysigns.size()) != spec.n ||
      static_cast<int>(g.xperm.size()) != spec.m ||
      static_cast<int>(g.yperm.size()) != spec.n)
    throw domain_error("group element size mismatch");
  for (int s : g.xsigns)
    if (s != 1 && s != -1) throw domain_error("signs must be +1 or -1");
  for (int s : g.ysigns)
    if (s != 1 && s != -1) throw domain_error("signs must be +1 or -1");

  GroupElement perm{g.xperm, g.yperm};
  Polynomial out(spec);
  for (const auto& [mono, c] : f.terms()) {
    int flips = 0;
    for (int i = 0; i < spec.m; ++i)
      if (g.xsigns[i] < 0 && mono.xe[i] % 2 != 0) ++flips;
    for (int j = 0; j < spec.n; ++j)
      if (g.ysigns[j] < 0 && mono.ye[j] % 2 != 0) ++flips;
    out.add_term(mono, flips % 2 == 0 ? c : -c);
  }
  return apply_group(perm, out);
}

namespace {

std::vector<SignVector> w_generators(int m, int n, bool include_single_h_flips) {
  std::vector<SignVector> gens;
  for (int i = 0; i + 1 < m; ++i) {
    SignVector g = SignVector::identity(m, n);
    std::swap(g.xperm[i], g.xperm[i + 1]);
    gens.push_back(g);
  }
  for (int j = 0; j + 1 < n; ++j) {
    SignVector g = SignVector::identity(m, n);
    std::swap(g.yperm[j], g.yperm[j + 1]);
    gens.push_back(g);
  }
  for (int j = 0; j < n; ++j) {
    SignVector g = SignVector::identity(m, n);
    g.ysigns[j] = -1;
    gens.push_back(g);
  }
  if (include_single_h_flips) {
    for (int i = 0; i < m; ++i) {
      SignVector g = SignVector::identity(m, n);
      g.xsigns[i] = -1;
      gens.push_back(g);
    }
  } else {
    for (int i = 0; i + 1 < m; ++i) {
      SignVector g = SignVector::identity(m, n);
      g.xsigns[i] = -1;
      g.xsigns[i + 1] = -1;
      gens.push_back(g);
    }
  }
  return gens;
}

bool invariant_under(const Polynomial& f, const std::vector<SignVector>& gens) {
  for (const SignVector& g : gens)
    if (!(apply_wprime(g, f) == f)) return false;
  return true;
}

}  // namespace

bool is_osp_w_invariant(const Polynomial& f) {
  return invariant_under(f, w_generators(f.spec().m, f.spec().n, false));
}

bool is_osp_wprime_invariant(const Polynomial& f) {
  return invariant_under(f, w_generators(f.spec().m, f.spec().n, true));
}

std::pair<Polynomial, Polynomial> sigma_decompose(const Polynomial& f) {
  const VarSpec& spec = f.spec();
  if (!is_osp_w_invariant(f)) throw domain_error("input is not W-invariant");
  if (spec.m == 0) return {f, Polynomial::zero(spec)};  // W = W', sign part trivial
  SignVector s = SignVector::identity(spec.m, spec.n);
  s.xsigns[0] = -1;  // coset representative of W'/W
  Polynomial sf = apply_wprime(s, f);
  Rational half(1, 2);
  return {half * (f + sf), half * (f - sf)};
}

Polynomial osp_t_element(int m, int n) {
  VarSpec spec{m, n, false};
  Polynomial out = Polynomial::constant(spec, Rational(1));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      out = out * (Polynomial::variable(spec, VarRef::x(i), 2) -
                   Polynomial::variable(spec, VarRef::y(j), 2));
  return out;
}

Polynomial phi_cap(int m, int n) {
  VarSpec spec{m, n, false};
  Polynomial out = osp_t_element(m, n);
  for (int i = 1; i <= m; ++i) out = out * Polynomial::variable(spec, VarRef::x(i));
  return out;
}

Polynomial to_squared_coordinates(const Polynomial& f) {
  const VarSpec& spec = f.spec();
  if (spec.laurent) throw domain_error("squared coordinates need a polynomial spec");
  Polynomial g(spec);
  for (const auto& [mono, c] : f.terms()) {
    Monomial half = mono;
    int vpow = 0;
    for (int& e : half.xe) {
      if (e % 2 != 0) throw domain_error("odd exponent in a squared-variable polynomial");
      e /= 2;
    }
    for (int& e : half.ye) {
      if (e % 2 != 0) throw domain_error("odd exponent in a squared-variable polynomial");
      e /= 2;
      vpow += e;
    }
    // v_j = -(h'_j)^2, so each v-power contributes a sign.
    g.add_term(half, vpow % 2 == 0 ? c : -c);
  }
  return g;
}

Polynomial from_squared_coordinates(const Polynomial& g) {
  const VarSpec& spec = g.spec();
  if (spec.laurent) throw domain_error("squared coordinates need a polynomial spec");
  Polynomial f(spec);
  for (const auto& [mono, c] : g.terms()) {
    Monomial doubled = mono;
    int vpow = 0;
    for (int& e : doubled.xe) e *= 2;
    for (int& e : doubled.ye) {
      vpow += e;
      e *= 2;
    }
    f.add_term(doubled, vpow % 2 == 0 ? c : -c);
  }
  return f;
}

bool j_membership(const Polynomial& f) {
  for (const auto& [mono, c] : f.terms()) {
    for (int e : mono.xe)
      if (e % 2 != 0) return false;
    for (int e : mono.ye)
      if (e % 2 != 0) return false;
  }
  return is_supersymmetric(to_squared_coordinates(f));
}

bool ih_membership(const Polynomial& f, const OspSpec& spec) {
  if (f.spec().m != spec.m || f.spec().n != spec.n || f.spec().laurent)
    throw domain_error("polynomial spec does not match the algebra");
  switch (spec.kind) {
    case OspKind::glmn:
      return is_supersymmetric(f);
    case OspKind::ospodd:
      return j_membership(f);
    case OspKind::ospeven: {
      auto [f1, fsigma] = sigma_decompose(f);
      if (!j_membership(f1)) return false;
      auto q = divide_exact(fsigma, phi_cap(spec.m, spec.n));
      return q.has_value() && is_osp_wprime_invariant(*q);
    }
  }
  throw std::logic_error("unknown osp kind");
}

}  // namespace susy
