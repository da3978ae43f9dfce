#include "susy/laurent.hpp"

#include <map>
#include <random>

namespace susy {

namespace {

void require_laurent_pair(const Polynomial& p) {
  if (!p.spec().laurent) throw domain_error("operation requires a Laurent spec");
  if (p.spec().m < 1 || p.spec().n < 1)
    throw domain_error("operation requires at least one variable per block");
}

Polynomial pair_difference(const VarSpec& spec) {
  return Polynomial::variable(spec, VarRef::x(1)) - Polynomial::variable(spec, VarRef::y(1));
}

}  // namespace

bool is_laurent_supersymmetric(const Polynomial& p) {
  const VarSpec& spec = p.spec();
  if (!spec.laurent) throw domain_error("operation requires a Laurent spec");
  if (!is_w_invariant(p)) return false;
  if (spec.m == 0 || spec.n == 0) return true;
  return divide_exact(laurent_derivative(p, 1, 1), pair_difference(spec)).has_value();
}

Polynomial t_element_l(int m, int n) {
  VarSpec spec{m, n, true};
  Polynomial out = Polynomial::constant(spec, Rational(1));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      Polynomial factor = Polynomial::constant(spec, Rational(1));
      Monomial mono{std::vector<int>(m, 0), std::vector<int>(n, 0)};
      mono.xe[i - 1] = -1;
      mono.ye[j - 1] = 1;
      factor.add_term(mono, Rational(-1));
      out = out * factor;
    }
  }
  return out;
}

Polynomial k_element(const SignaturePair& sig, int m, int n) {
  if (sig.lambda.length() != m || sig.mu.length() != n)
    throw domain_error("signature lengths must match the variable counts");
  VarSpec spec{m, n, true};
  Polynomial ex = extend(euler_character(sig.lambda, m), spec);
  Polynomial ey = extend(swap_blocks(euler_character(sig.mu, n)), spec);
  return t_element_l(m, n) * ex * ey;
}

Polynomial phi_l(const Polynomial& p) {
  const VarSpec& spec = p.spec();
  require_laurent_pair(p);
  if (!is_laurent_supersymmetric(p)) throw domain_error("input is not Laurent supersymmetric");
  // Merge the last pair: y_n -> x_m, with x_m standing for the common value.
  Polynomial q = substitute(p, {{VarRef::y(spec.n), Polynomial::variable(spec, VarRef::x(spec.m))}});
  if (q.depends_on(VarRef::x(spec.m)))
    throw std::logic_error("merged variable survived the evaluation map");
  return shrink_to(q, spec.m - 1, spec.n - 1);
}

std::optional<RSzDecomposition> decompose_r_sz(const Polynomial& p) {
  const VarSpec& spec = p.spec();
  require_laurent_pair(p);
  // Writing p = sum r_{i,j} x_1^i (1-z)^j with 1-z = x_1/y_1, a term with
  // exponents (a, b) on (x_1, y_1) has i = a + b, j = -b. Membership holds
  // iff the row sums over j vanish for every i != 0.
  std::map<int, Polynomial> row_sums;
  for (const auto& [mono, c] : p.terms()) {
    int i = mono.xe[0] + mono.ye[0];
    Monomial rest = mono;
    rest.xe[0] = 0;
    rest.ye[0] = 0;
    auto it = row_sums.find(i);
    if (it == row_sums.end()) it = row_sums.emplace(i, Polynomial(spec)).first;
    it->second.add_term(rest, c);
  }
  for (const auto& [i, sum] : row_sums)
    if (i != 0 && !sum.is_zero()) return std::nullopt;

  Polynomial r(spec);
  if (auto it = row_sums.find(0); it != row_sums.end()) r = it->second;
  Polynomial z = Polynomial::constant(spec, Rational(1));
  {
    Monomial mono{std::vector<int>(spec.m, 0), std::vector<int>(spec.n, 0)};
    mono.xe[0] = 1;
    mono.ye[0] = -1;
    z.add_term(mono, Rational(-1));  // z = 1 - x_1/y_1
  }
  auto s = divide_exact(p - r, z);
  if (!s) throw std::logic_error("member of R + Sz not divisible by z after removing r");
  return RSzDecomposition{std::move(r), std::move(*s)};
}

namespace {

// Small deterministic rationals for the sampled condition.
Rational sample_nonzero(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 9) + 1;
  long den = static_cast<long>(rng() % 4) + 1;
  long sign = (rng() % 2 == 0) ? 1 : -1;
  return Rational(sign * num, den);
}

}  // namespace

CodConditions cod_check(const Polynomial& p, std::uint64_t seed) {
  const VarSpec& spec = p.spec();
  require_laurent_pair(p);
  CodConditions out;
  out.a = decompose_r_sz(p).has_value();

  Polynomial merged = substitute(p, {{VarRef::y(1), Polynomial::variable(spec, VarRef::x(1))}});
  out.b = !merged.depends_on(VarRef::x(1));

  out.d = divide_exact(laurent_derivative(p, 1, 1), pair_difference(spec)).has_value();

  // Condition (c): f(q) = f(tq) for points q with q_x1 = q_y1 and scalings t
  // of that pair; 5 points x 5 scalars, all nonzero, t != 1.
  std::mt19937_64 rng(seed);
  out.c = true;
  for (int a = 0; a < 5 && out.c; ++a) {
    std::vector<Rational> xs(spec.m), ys(spec.n);
    for (auto& v : xs) v = sample_nonzero(rng);
    for (auto& v : ys) v = sample_nonzero(rng);
    ys[0] = xs[0];
    Rational base = evaluate(p, xs, ys);
    for (int b = 0; b < 5 && out.c; ++b) {
      Rational t = sample_nonzero(rng);
      if (t == Rational(1)) t = Rational(2);
      std::vector<Rational> xs2 = xs, ys2 = ys;
      xs2[0] *= t;
      ys2[0] *= t;
      if (!(evaluate(p, xs2, ys2) == base)) out.c = false;
    }
  }
  return out;
}

}  // namespace susy
