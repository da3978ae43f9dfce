#include "susy/selftest.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "susy/geometry.hpp"
#include "susy/laurent.hpp"
#include "susy/linalg.hpp"
#include "susy/osp.hpp"
#include "susy/supersym.hpp"

namespace susy {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

long rng_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

long rng_nonzero(std::mt19937_64& rng, long lo, long hi) {
  long v = 0;
  while (v == 0) v = rng_int(rng, lo, hi);
  return v;
}

struct Failure {
  std::string message;
};

void expect(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

std::vector<Partition> hook_up_to(int m, int n, int max_size) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_size; ++d)
    for (const Partition& lambda : enumerate_hook(m, n, d)) out.push_back(lambda);
  return out;
}

std::string show(const Partition& lambda) {
  std::string s = "(";
  for (int i = 0; i < lambda.length(); ++i)
    s += (i ? "," : "") + std::to_string(lambda.parts()[i]);
  return s + ")";
}

// --- criterion 1 -----------------------------------------------------------

CriterionResult criterion_1() {
  auto start = Clock::now();
  int checked = 0;
  for (auto [m, n, cap] : {std::tuple{2, 2, 6}, std::tuple{1, 1, 8}}) {
    for (const Partition& lambda : hook_up_to(m, n, cap)) {
      Polynomial f = super_schur(lambda, m, n);
      expect(!f.is_zero(), "basis element vanished at " + show(lambda));
      expect(is_supersymmetric(f), "not supersymmetric at " + show(lambda));
      auto degrees = f.homogeneous_degrees();
      expect(degrees.size() == 1 && degrees[0] == lambda.size(),
             "not homogeneous of the right degree at " + show(lambda));
      for (const auto& [mono, c] : f.terms())
        expect(c.is_integral(), "non-integer coefficient at " + show(lambda));
      ++checked;
    }
  }
  double elapsed = seconds_since(start);
  expect(elapsed < 10.0, "runtime exceeded 10 s");
  std::ostringstream os;
  os << checked << " basis elements, " << elapsed << " s";
  return {1, "super-schur-basics", true, os.str()};
}

// --- criterion 2 -----------------------------------------------------------

CriterionResult criterion_2() {
  int checked = 0;
  for (const Partition& lambda : hook_up_to(2, 2, 8)) {
    if (!in_h0(lambda, 2, 2)) continue;
    expect(super_schur(lambda, 2, 2) == super_schur_factored(lambda, 2, 2),
           "factored form differs at " + show(lambda));
    ++checked;
  }
  return {2, "factored-identity", true, std::to_string(checked) + " corner partitions"};
}

// --- criterion 3 -----------------------------------------------------------

CriterionResult criterion_3() {
  int stability = 0, kernel = 0;
  VarSpec spec22{2, 2, false};
  for (const Partition& lambda : hook_up_to(2, 1, 6)) {
    Polynomial big = super_schur(lambda, 2, 2);
    Polynomial dropped = shrink_to(
        substitute(big, {{VarRef::y(2), Polynomial::zero(spec22)}}), 2, 1);
    expect(dropped == super_schur(lambda, 2, 1), "stability failed at " + show(lambda));
    ++stability;
  }
  for (const Partition& lambda : hook_up_to(2, 2, 6)) {
    Polynomial f = super_schur(lambda, 2, 2);
    bool in_kernel = phi_s(f).is_zero();
    expect(in_kernel == in_h0(lambda, 2, 2), "kernel membership wrong at " + show(lambda));
    if (in_kernel) {
      Polynomial witness = kernel_witness(f);
      expect(is_w_invariant(witness), "witness not W-invariant at " + show(lambda));
      expect(t_element(2, 2) * witness == f, "witness product mismatch at " + show(lambda));
      ++kernel;
    }
  }
  std::ostringstream os;
  os << stability << " stability cases, " << kernel << " kernel witnesses";
  return {3, "stability-and-kernel", true, os.str()};
}

// --- criterion 4 -----------------------------------------------------------

Polynomial random_power_sum_combo(std::mt19937_64& rng, int m, int n, int max_degree,
                                  int max_r) {
  VarSpec spec{m, n, false};
  Polynomial out(spec);
  int summands = static_cast<int>(rng_int(rng, 1, 4));
  for (int s = 0; s < summands; ++s) {
    Polynomial product = Polynomial::constant(spec, Rational(rng_nonzero(rng, -9, 9)));
    int degree = 0;
    int factors = static_cast<int>(rng_int(rng, 1, 3));
    for (int k = 0; k < factors; ++k) {
      int r = static_cast<int>(rng_int(rng, 1, max_r));
      if (degree + r > max_degree) break;
      degree += r;
      product = product * power_sum(r, m, n);
    }
    out = out + product;
  }
  return out;
}

CriterionResult criterion_4() {
  std::mt19937_64 rng(0xC4);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_power_sum_combo(rng, 2, 2, 8, 4);
    BasisDecomposition dec = decompose(p);
    expect(dec.all_integral(), "non-integer coefficient in trial " + std::to_string(trial));
    expect(reconstruct(dec) == p, "reconstruction mismatch in trial " + std::to_string(trial));
  }
  BasisDecomposition dec = decompose(power_sum(2, 1, 1));
  BasisDecomposition expected;
  expected.m = expected.n = 1;
  expected.coeffs.emplace(Partition::of({2}), Rational(1));
  expected.coeffs.emplace(Partition::of({1, 1}), Rational(-1));
  expect(dec == expected, "power-sum identity decomposition mismatch");
  return {4, "basis-decomposition", true, "50 seeded combinations plus the pinned identity"};
}

// --- criterion 5 -----------------------------------------------------------

Polynomial random_laurent_11(std::mt19937_64& rng) {
  VarSpec spec{1, 1, true};
  Polynomial p(spec);
  int terms = static_cast<int>(rng_int(rng, 1, 6));
  for (int t = 0; t < terms; ++t) {
    Monomial mono{{static_cast<int>(rng_int(rng, -3, 3))},
                  {static_cast<int>(rng_int(rng, -3, 3))}};
    p.add_term(mono, Rational(rng_nonzero(rng, -5, 5)));
  }
  return p;
}

CriterionResult criterion_5() {
  std::mt19937_64 rng(0xC5);
  VarSpec spec{1, 1, true};
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = random_laurent_11(rng);
    CodConditions cod = cod_check(p, 1000 + trial);
    expect(cod.a == cod.b && cod.b == cod.d,
           "exact conditions disagree in trial " + std::to_string(trial));
    expect(cod.c == cod.a, "sampled condition disagrees in trial " + std::to_string(trial));
  }
  Polynomial z(spec);
  z.add_term(Monomial{{0}, {0}}, Rational(1));
  z.add_term(Monomial{{1}, {-1}}, Rational(-1));
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial r = Polynomial::constant(spec, Rational(rng_int(rng, -9, 9)));
    Polynomial f = r + random_laurent_11(rng) * z;
    CodConditions cod = cod_check(f, 2000 + trial);
    expect(cod.a && cod.b && cod.c && cod.d,
           "constructed member failed in trial " + std::to_string(trial));
  }
  return {5, "appendix-equivalence", true, "200 random + 50 constructed instances"};
}

// --- criterion 6 -----------------------------------------------------------

CriterionResult criterion_6() {
  std::map<int, std::vector<Polynomial>> by_degree;
  for (int l = -2; l <= 2; ++l) {
    for (int u = -2; u <= 2; ++u) {
      SignaturePair sig{IntegerSignature::of({l}), IntegerSignature::of({u})};
      Polynomial k = k_element(sig, 1, 1);
      expect(phi_l(k).is_zero(),
             "kernel element survives phi at (" + std::to_string(l) + "," + std::to_string(u) + ")");
      by_degree[l + u].push_back(k);
    }
  }
  for (const auto& [degree, elements] : by_degree) {
    std::map<Monomial, size_t, MonomialOrder> rows;
    for (const Polynomial& k : elements)
      for (const auto& [mono, c] : k.terms()) rows.emplace(mono, rows.size());
    RationalMatrix a(rows.size(), std::vector<Rational>(elements.size(), Rational(0)));
    for (size_t col = 0; col < elements.size(); ++col)
      for (const auto& [mono, c] : elements[col].terms()) a[rows.at(mono)][col] = c;
    expect(matrix_rank(std::move(a)) == static_cast<int>(elements.size()),
           "kernel elements dependent in degree " + std::to_string(degree));
  }
  return {6, "laurent-kernel", true, "25 signature pairs over 9 graded degrees"};
}

// --- criterion 7 -----------------------------------------------------------

// Exhaustive maximum pairing; the independent oracle for the matching kernel.
int brute_force_atypicality(const Point& p) {
  std::function<int(int, unsigned)> go = [&](int i, unsigned used) -> int {
    if (i == p.m()) return 0;
    int best = go(i + 1, used);
    for (int j = 0; j < p.n(); ++j) {
      if (used & (1u << j)) continue;
      bool edge = p.multiplicative ? p.x[i] == p.y[j] : (p.x[i] + p.y[j]).is_zero();
      if (!edge) continue;
      best = std::max(best, 1 + go(i + 1, used | (1u << j)));
    }
    return best;
  };
  return go(0, 0);
}

CriterionResult criterion_7() {
  auto start = Clock::now();
  std::mt19937_64 rng(0xC7);
  for (int trial = 0; trial < 1000; ++trial) {
    int m = static_cast<int>(rng_int(rng, 1, 4));
    int n = static_cast<int>(rng_int(rng, 1, 4));
    bool multiplicative = rng() % 2 == 0;
    std::vector<Rational> xs, ys;
    for (int i = 0; i < m; ++i)
      xs.push_back(Rational(multiplicative ? rng_int(rng, 1, 5) : rng_int(rng, -3, 3)));
    for (int j = 0; j < n; ++j)
      ys.push_back(Rational(multiplicative ? rng_int(rng, 1, 5) : rng_int(rng, -3, 3)));
    Point p = Point::make(std::move(xs), std::move(ys), multiplicative);
    expect(atypicality(p) == brute_force_atypicality(p),
           "matching disagrees with the oracle in trial " + std::to_string(trial));
  }
  double elapsed = seconds_since(start);
  expect(elapsed < 5.0, "runtime exceeded 5 s");
  std::ostringstream os;
  os << "1000 points, " << elapsed << " s";
  return {7, "atypicality-oracle", true, os.str()};
}

// --- criterion 8 -----------------------------------------------------------

CriterionResult criterion_8() {
  std::mt19937_64 rng(0xC8);
  std::vector<Polynomial> fs;
  for (const Partition& lambda : hook_up_to(2, 2, 4))
    fs.push_back(super_schur(lambda, 2, 2));
  Polynomial control(VarSpec{2, 2, false});
  control.add_term(Monomial{{2, 0}, {0, 0}}, Rational(1));
  control.add_term(Monomial{{0, 0}, {2, 0}}, Rational(1));

  bool control_failed = false;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int sample = 0; sample < 20; ++sample) {
        std::vector<Rational> xs(2), ys(2);
        for (auto& v : xs) v = Rational(rng_int(rng, -6, 6), rng_int(rng, 1, 3));
        for (auto& v : ys) v = Rational(rng_int(rng, -6, 6), rng_int(rng, 1, 3));
        ys[j - 1] = -xs[i - 1];  // on the hyperplane
        auto shifted = [&](int k) {
          std::vector<Rational> xs2 = xs, ys2 = ys;
          xs2[i - 1] += Rational(k);
          ys2[j - 1] -= Rational(k);
          return Point::make(xs2, ys2, false);
        };
        for (const Polynomial& f : fs) {
          Rational base = evaluate(f, shifted(0));
          for (int k = -3; k <= 3; ++k)
            expect(evaluate(f, shifted(k)) == base, "line constancy failed");
        }
        Rational base = evaluate(control, shifted(0));
        for (int k = -3; k <= 3; ++k)
          if (!(evaluate(control, shifted(k)) == base)) control_failed = true;
      }
    }
  }
  expect(control_failed, "control polynomial never failed");
  std::ostringstream os;
  os << fs.size() << " basis elements over 4 hyperplanes, control fails";
  return {8, "groupoid-line-constancy", true, os.str()};
}

// --- criterion 9 -----------------------------------------------------------

Point random_typical_point(std::mt19937_64& rng, int m, int n) {
  while (true) {
    std::vector<Rational> xs, ys;
    for (int i = 0; i < m; ++i) xs.push_back(Rational(rng_int(rng, -5, 5)));
    for (int j = 0; j < n; ++j) ys.push_back(Rational(rng_int(rng, -5, 5)));
    Point p = Point::make(std::move(xs), std::move(ys), false);
    if (atypicality(p) == 0) return p;
  }
}

void check_separator(const PointSet& v, const Point& p, const Polynomial& f) {
  expect(is_supersymmetric(f), "separator not supersymmetric");
  expect(!evaluate(f, p).is_zero(), "separator vanishes at the outside point");
  for (const Point& q : v)
    expect(evaluate(f, q).is_zero(), "separator does not vanish on the set");
}

CriterionResult criterion_9() {
  std::mt19937_64 rng(0xC9);
  for (int trial = 0; trial < 25; ++trial) {
    PointSet v = weyl_orbit(random_typical_point(rng, 2, 2));
    Point p = random_typical_point(rng, 2, 2);
    while (v.contains(p)) p = random_typical_point(rng, 2, 2);
    check_separator(v, p, separating_polynomial(v, p, trial));
  }
  PointSet v = weyl_orbit(Point::make({Rational(1), Rational(2)}, {Rational(3), Rational(4)}, false));
  Point atypical = Point::make({Rational(1), Rational(3)}, {Rational(-1), Rational(5)}, false);
  expect(atypicality(atypical) == 1, "hand-built point is not atypical");
  check_separator(v, atypical, separating_polynomial(v, atypical, 7));
  return {9, "separating-witness", true, "25 typical trials plus one atypical point"};
}

// --- criterion 10 ----------------------------------------------------------

Polynomial random_wprime_invariant_11(std::mt19937_64& rng, int max_degree) {
  // m = n = 1: invariance under W' means even exponents in both variables.
  VarSpec spec{1, 1, false};
  Polynomial s(spec);
  for (int a = 0; 2 * a <= max_degree; ++a)
    for (int b = 0; 2 * (a + b) <= max_degree; ++b)
      s.add_term(Monomial{{2 * a}, {2 * b}}, Rational(rng_int(rng, -4, 4)));
  return s;
}

CriterionResult criterion_10() {
  std::mt19937_64 rng(0xCA);
  OspSpec even{OspKind::ospeven, 1, 1};
  VarSpec spec{1, 1, false};
  Polynomial cap = phi_cap(1, 1);
  Polynomial h1 = Polynomial::variable(spec, VarRef::x(1));
  for (int trial = 0; trial < 50; ++trial) {
    // j: supersymmetric combination moved into squared variables (degree <= 8).
    Polynomial g(spec);
    for (const Partition& lambda : hook_up_to(1, 1, 4))
      g = g + Rational(rng_int(rng, -4, 4)) * super_schur(lambda, 1, 1);
    Polynomial j = from_squared_coordinates(g);
    Polynomial s = random_wprime_invariant_11(rng, 4);
    Polynomial f = j + cap * s;

    expect(ih_membership(f, even), "member rejected in trial " + std::to_string(trial));
    expect(!ih_membership(f + h1, even), "perturbed member accepted in trial " + std::to_string(trial));

    auto [f1, fsigma] = sigma_decompose(f);
    expect(f1 + fsigma == f, "projection sum mismatch");
    auto [a1, asigma] = sigma_decompose(f1);
    expect(a1 == f1 && asigma.is_zero(), "plus part is not a projection fixed point");
    auto [b1, bsigma] = sigma_decompose(fsigma);
    expect(b1.is_zero() && bsigma == fsigma, "sign part is not a projection fixed point");
  }
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      VarSpec sp{m, n, false};
      Polynomial t = osp_t_element(m, n);
      Polynomial squares = Polynomial::constant(sp, Rational(1));
      for (int i = 1; i <= m; ++i) squares = squares * Polynomial::variable(sp, VarRef::x(i), 2);
      expect(phi_cap(m, n) * phi_cap(m, n) == t * (t * squares),
             "squared product identity failed at m=" + std::to_string(m) + ", n=" + std::to_string(n));
    }
  }
  return {10, "osp-even-membership", true, "50 seeded members, perturbations, projections"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int only) {
  struct Entry {
    CriterionResult (*run)();
    const char* name;
  };
  static const Entry entries[] = {
      {criterion_1, "super-schur-basics"},   {criterion_2, "factored-identity"},
      {criterion_3, "stability-and-kernel"}, {criterion_4, "basis-decomposition"},
      {criterion_5, "appendix-equivalence"}, {criterion_6, "laurent-kernel"},
      {criterion_7, "atypicality-oracle"},   {criterion_8, "groupoid-line-constancy"},
      {criterion_9, "separating-witness"},   {criterion_10, "osp-even-membership"}};
  std::vector<CriterionResult> results;
  for (int id = 1; id <= 10; ++id) {
    if (only != 0 && only != id) continue;
    try {
      results.push_back(entries[id - 1].run());
    } catch (const Failure& failure) {
      results.push_back({id, entries[id - 1].name, false, failure.message});
    }
  }
  return results;
}

}  // namespace susy
