#include "susy/supersym.hpp"

#include "susy/linalg.hpp"

namespace susy {

bool is_supersymmetric(const Polynomial& p) {
  const VarSpec& spec = p.spec();
  if (spec.laurent) throw domain_error("supersymmetry is defined on the polynomial ring");
  if (!is_w_invariant(p)) return false;
  if (spec.m == 0 || spec.n == 0) return true;
  Polynomial diff = partial_derivative(p, VarRef::x(1)) - partial_derivative(p, VarRef::y(1));
  Polynomial x1y1 = Polynomial::variable(spec, VarRef::x(1)) + Polynomial::variable(spec, VarRef::y(1));
  return divide_exact(diff, x1y1).has_value();
}

Polynomial power_sum(int r, int m, int n) {
  if (r < 1) throw domain_error("power sum requires r >= 1");
  VarSpec spec{m, n, false};
  Polynomial out(spec);
  for (int i = 1; i <= m; ++i) out = out + Polynomial::variable(spec, VarRef::x(i), r);
  Rational ysign(r % 2 == 1 ? 1 : -1);
  for (int j = 1; j <= n; ++j)
    out = out + ysign * Polynomial::variable(spec, VarRef::y(j), r);
  return out;
}

Polynomial t_element(int m, int n) {
  VarSpec spec{m, n, false};
  Polynomial out = Polynomial::constant(spec, Rational(1));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      out = out * (Polynomial::variable(spec, VarRef::x(i)) +
                   Polynomial::variable(spec, VarRef::y(j)));
  return out;
}

namespace {

// The product whose double alternation, divided by both Vandermonde
// determinants, gives the basis element.
Polynomial core_product(const Partition& lambda, int m, int n) {
  VarSpec spec{m, n, false};
  auto [mu, nu] = hook_mu_nu(lambda, m, n);
  Monomial mono{std::vector<int>(m, 0), std::vector<int>(n, 0)};
  for (int i = 1; i <= m; ++i) mono.xe[i - 1] = mu.part(i) + m - i;
  for (int j = 1; j <= n; ++j) mono.ye[j - 1] = nu.part(j) + n - j;
  Polynomial g(spec);
  g.add_term(mono, Rational(1));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > lambda.part(i)) continue;
      g = g * (Polynomial::variable(spec, VarRef::x(i)) +
               Polynomial::variable(spec, VarRef::y(j)));
    }
  }
  return g;
}

}  // namespace

Polynomial super_schur(const Partition& lambda, int m, int n) {
  VarSpec spec{m, n, false};
  if (!in_hook(lambda, m, n)) return Polynomial::zero(spec);
  Polynomial alt = alternate(alternate(core_product(lambda, m, n), Block::x), Block::y);
  Polynomial delta = extend(vandermonde(m, Block::x), spec) * extend(vandermonde(n, Block::y), spec);
  auto q = divide_exact(alt, delta);
  if (!q) throw std::logic_error("double alternant not divisible by the Vandermonde product");
  return *q;
}

Polynomial super_schur_factored(const Partition& lambda, int m, int n) {
  if (!in_h0(lambda, m, n))
    throw domain_error("factored form requires the corner cell (m,n) in the diagram");
  VarSpec spec{m, n, false};
  auto [mu, nu] = hook_mu_nu(lambda, m, n);
  Polynomial sx = extend(schur(mu, m), spec);
  Polynomial sy = extend(swap_blocks(schur(nu, n)), spec);
  return t_element(m, n) * sx * sy;
}

Polynomial phi_s(const Polynomial& p) {
  const VarSpec& spec = p.spec();
  if (spec.m < 1 || spec.n < 1) throw domain_error("phi needs at least one variable per block");
  if (!is_supersymmetric(p)) throw domain_error("input is not supersymmetric");
  Polynomial q = substitute(p, {{VarRef::x(spec.m), Polynomial::zero(spec)},
                                {VarRef::y(spec.n), Polynomial::zero(spec)}});
  return shrink_to(q, spec.m - 1, spec.n - 1);
}

Polynomial kernel_witness(const Polynomial& p) {
  const VarSpec& spec = p.spec();
  auto q = divide_exact(p, t_element(spec.m, spec.n));
  if (!q) throw domain_error("not a multiple of the T element (precondition violated)");
  if (!is_w_invariant(*q))
    throw domain_error("quotient by the T element is not W-invariant (precondition violated)");
  return *q;
}

bool BasisDecomposition::all_integral() const {
  for (const auto& [lambda, c] : coeffs)
    if (!c.is_integral()) return false;
  return true;
}

BasisDecomposition decompose(const Polynomial& p, int degree_cap) {
  const VarSpec& spec = p.spec();
  if (!is_supersymmetric(p)) throw domain_error("input is not supersymmetric");
  BasisDecomposition dec;
  dec.m = spec.m;
  dec.n = spec.n;
  for (int d : p.homogeneous_degrees()) {
    if (d > degree_cap) throw domain_error("degree exceeds the decomposition cap");
    Polynomial part = p.homogeneous_part(d);
    std::vector<Partition> basis = enumerate_hook(spec.m, spec.n, d);
    std::vector<Polynomial> fs;
    fs.reserve(basis.size());
    for (const Partition& lambda : basis) fs.push_back(super_schur(lambda, spec.m, spec.n));

    // Row per monomial seen anywhere, column per basis element.
    std::map<Monomial, size_t, MonomialOrder> rows;
    auto note = [&rows](const Polynomial& q) {
      for (const auto& [mono, c] : q.terms()) rows.emplace(mono, rows.size());
    };
    note(part);
    for (const Polynomial& f : fs) note(f);

    RationalMatrix a(rows.size(), std::vector<Rational>(fs.size(), Rational(0)));
    std::vector<Rational> b(rows.size(), Rational(0));
    for (size_t col = 0; col < fs.size(); ++col)
      for (const auto& [mono, c] : fs[col].terms()) a[rows.at(mono)][col] = c;
    for (const auto& [mono, c] : part.terms()) b[rows.at(mono)] = c;

    auto solution = solve_unique(std::move(a), std::move(b));
    if (!solution)
      throw std::logic_error("supersymmetric polynomial outside the basis span");
    for (size_t k = 0; k < basis.size(); ++k)
      if (!(*solution)[k].is_zero()) dec.coeffs.emplace(basis[k], (*solution)[k]);
  }
  // The solver already succeeded per degree; cross-check the assembly.
  if (!(reconstruct(dec) == p)) throw std::logic_error("basis reconstruction mismatch");
  return dec;
}

Polynomial reconstruct(const BasisDecomposition& dec) {
  VarSpec spec{dec.m, dec.n, false};
  Polynomial out(spec);
  for (const auto& [lambda, c] : dec.coeffs)
    out = out + c * super_schur(lambda, dec.m, dec.n);
  return out;
}

}  // namespace susy
