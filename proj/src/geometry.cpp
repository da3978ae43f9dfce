#include "susy/geometry.hpp"

#include <deque>
#include <random>

#include "susy/laurent.hpp"
#include "susy/supersym.hpp"

namespace susy {

Point Point::make(std::vector<Rational> x, std::vector<Rational> y, bool multiplicative) {
  Point p{std::move(x), std::move(y), multiplicative};
  if (multiplicative) {
    for (const Rational& v : p.x)
      if (v.is_zero()) throw domain_error("multiplicative point with a zero coordinate");
    for (const Rational& v : p.y)
      if (v.is_zero()) throw domain_error("multiplicative point with a zero coordinate");
  }
  return p;
}

bool Point::operator<(const Point& o) const {
  if (multiplicative != o.multiplicative) return multiplicative < o.multiplicative;
  if (x.size() != o.x.size()) return x.size() < o.x.size();
  if (y.size() != o.y.size()) return y.size() < o.y.size();
  for (size_t i = 0; i < x.size(); ++i)
    if (!(x[i] == o.x[i])) return x[i] < o.x[i];
  for (size_t j = 0; j < y.size(); ++j)
    if (!(y[j] == o.y[j])) return y[j] < o.y[j];
  return false;
}

std::vector<Root> isotropic_roots(int m, int n) {
  std::vector<Root> roots;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      for (int sign : {1, -1}) roots.push_back(Root{i, j, sign});
  return roots;
}

void PointSet::insert(Point p) {
  if (!points_.empty()) {
    const Point& ref = *points_.begin();
    if (p.m() != ref.m() || p.n() != ref.n() || p.multiplicative != ref.multiplicative)
      throw domain_error("point shape differs from the rest of the set");
  }
  points_.insert(std::move(p));
}

namespace {

void check_root(const Root& alpha, const Point& p) {
  if (alpha.i < 1 || alpha.i > p.m() || alpha.j < 1 || alpha.j > p.n())
    throw domain_error("root index out of range");
  if (alpha.sign != 1 && alpha.sign != -1) throw domain_error("root sign must be +1 or -1");
}

// Edge criterion of the vanishing-pair graph.
bool pair_vanishes(const Point& p, int i, int j) {
  if (p.multiplicative) return p.x[i - 1] == p.y[j - 1];
  return (p.x[i - 1] + p.y[j - 1]).is_zero();
}

}  // namespace

Rational pairing(const Root& alpha, const Point& p) {
  check_root(alpha, p);
  if (p.multiplicative) throw domain_error("pairing is defined for additive points");
  return Rational(alpha.sign) * (p.x[alpha.i - 1] + p.y[alpha.j - 1]);
}

Point tau_shift(const Root& alpha, const Point& p) {
  check_root(alpha, p);
  Point q = p;
  if (p.multiplicative) {
    if (!pair_vanishes(p, alpha.i, alpha.j))
      throw domain_error("matched pair required for the multiplicative shift");
    Rational t = alpha.sign > 0 ? Rational(2) : Rational(1, 2);
    q.x[alpha.i - 1] *= t;
    q.y[alpha.j - 1] *= t;
    return q;
  }
  if (!pairing(alpha, p).is_zero()) throw domain_error("point not on the hyperplane");
  q.x[alpha.i - 1] += Rational(alpha.sign);
  q.y[alpha.j - 1] -= Rational(alpha.sign);
  return q;
}

PointSet weyl_orbit(const Point& p) {
  if (p.m() > 8 || p.n() > 8) throw domain_error("permutation block larger than 8");
  PointSet orbit;
  for_each_permutation(p.m(), [&](const std::vector<int>& xp, int) {
    for_each_permutation(p.n(), [&](const std::vector<int>& yp, int) {
      Point q = p;
      for (int i = 0; i < p.m(); ++i) q.x[xp[i]] = p.x[i];
      for (int j = 0; j < p.n(); ++j) q.y[yp[j]] = p.y[j];
      orbit.insert(std::move(q));
    });
  });
  return orbit;
}

OrbitResult groupoid_orbit(const Point& p, int depth_cap) {
  if (depth_cap < 0) throw domain_error("depth cap must be nonnegative");
  OrbitResult result;
  std::vector<Root> roots = isotropic_roots(p.m(), p.n());
  std::deque<std::pair<Point, int>> queue;  // point, shifts used on its chain
  std::vector<Point> skipped;

  auto admit = [&](const Point& q, int depth) {
    for (const Point& r : weyl_orbit(q)) {
      if (result.points.contains(r)) continue;
      result.points.insert(r);
      queue.emplace_back(r, depth);
    }
  };
  admit(p, 0);

  while (!queue.empty()) {
    auto [q, depth] = queue.front();
    queue.pop_front();
    for (const Root& alpha : roots) {
      if (!pair_vanishes(q, alpha.i, alpha.j)) continue;
      Point target = tau_shift(alpha, q);
      if (depth >= depth_cap) {
        skipped.push_back(std::move(target));
      } else if (!result.points.contains(target)) {
        admit(target, depth + 1);
      }
    }
  }
  for (const Point& t : skipped) {
    if (!result.points.contains(t)) {
      result.truncated = true;
      break;
    }
  }
  return result;
}

bool is_invariant(const PointSet& v) {
  for (const Point& p : v) {
    for (const Point& q : weyl_orbit(p))
      if (!v.contains(q)) return false;
    for (const Root& alpha : isotropic_roots(p.m(), p.n())) {
      if (!pair_vanishes(p, alpha.i, alpha.j)) continue;
      if (!v.contains(tau_shift(alpha, p))) return false;
    }
  }
  return true;
}

int atypicality(const Point& p) {
  int m = p.m(), n = p.n();
  // Augmenting-path maximum matching on the vanishing-pair graph.
  std::vector<int> match_y(n, -1);
  std::vector<bool> visited;
  std::function<bool(int)> try_match = [&](int i) {
    for (int j = 0; j < n; ++j) {
      if (visited[j] || !pair_vanishes(p, i + 1, j + 1)) continue;
      visited[j] = true;
      if (match_y[j] == -1 || try_match(match_y[j])) {
        match_y[j] = i;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int i = 0; i < m; ++i) {
    visited.assign(n, false);
    if (try_match(i)) ++size;
  }
  return size;
}

Rational evaluate(const Polynomial& f, const Point& p) {
  return evaluate(f, std::span<const Rational>(p.x), std::span<const Rational>(p.y));
}

bool vanishing_ideal_check(const PointSet& v, const Polynomial& f) {
  bool member = f.spec().laurent ? is_laurent_supersymmetric(f) : is_supersymmetric(f);
  if (!member) throw domain_error("f is not in the supersymmetric ring");
  for (const Point& p : v) {
    if (p.multiplicative != f.spec().laurent)
      throw domain_error("point case does not match the polynomial ring");
    if (!evaluate(f, p).is_zero()) return false;
  }
  return true;
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 19) - 9;
  return Rational(num);
}

// W-invariant h with h = 0 on v and h(p) != 0. First candidate multiplies the
// per-coordinate affine factors of every point of v; later candidates
// symmetrize products of a random affine form over the group.
Polynomial invariant_vanishing(const PointSet& v, const Point& p, const VarSpec& spec,
                               std::uint64_t seed) {
  if (v.empty()) return Polynomial::constant(spec, Rational(1));

  auto vanishes_on_v_not_p = [&](const Polynomial& h) {
    if (evaluate(h, p).is_zero() || !is_w_invariant(h)) return false;
    for (const Point& q : v)
      if (!evaluate(h, q).is_zero()) return false;
    return true;
  };

  Polynomial direct = Polynomial::constant(spec, Rational(1));
  for (const Point& q : v) {
    for (int i = 1; i <= spec.m; ++i)
      direct = direct * (Polynomial::variable(spec, VarRef::x(i)) -
                         Polynomial::constant(spec, q.x[i - 1]));
    for (int j = 1; j <= spec.n; ++j)
      direct = direct * (Polynomial::variable(spec, VarRef::y(j)) -
                         Polynomial::constant(spec, q.y[j - 1]));
  }
  if (vanishes_on_v_not_p(direct)) return direct;

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Random affine form and its values on v.
    std::vector<Rational> cx(spec.m), cy(spec.n);
    for (auto& c : cx) c = small_rational(rng);
    for (auto& c : cy) c = small_rational(rng);
    Polynomial form(spec);
    for (int i = 1; i <= spec.m; ++i)
      form = form + cx[i - 1] * Polynomial::variable(spec, VarRef::x(i));
    for (int j = 1; j <= spec.n; ++j)
      form = form + cy[j - 1] * Polynomial::variable(spec, VarRef::y(j));

    Polynomial base = Polynomial::constant(spec, Rational(1));
    for (const Point& q : v)
      base = base * (form - Polynomial::constant(spec, evaluate(form, q)));

    Polynomial h = Polynomial::constant(spec, Rational(1));
    for_each_permutation(spec.m, [&](const std::vector<int>& xp, int) {
      for_each_permutation(spec.n, [&](const std::vector<int>& yp, int) {
        GroupElement w{xp, yp};
        h = h * apply_group(w, base);
      });
    });
    if (vanishes_on_v_not_p(h)) return h;
  }
  throw domain_error("retry budget exhausted while separating");
}

// Supersymmetric generators whose values distinguish orbits; additive points
// use the signed power sums, multiplicative points their Laurent analogs
// sum x_i^r - sum y_j^r with r of both signs.
std::vector<Polynomial> orbit_separators(const VarSpec& spec) {
  std::vector<Polynomial> gens;
  if (!spec.laurent) {
    int top = spec.m + spec.n + spec.m * spec.n;
    for (int r = 1; r <= std::max(2, top); ++r) gens.push_back(power_sum(r, spec.m, spec.n));
    return gens;
  }
  for (int r : {1, -1, 2, -2, 3, -3}) {
    Polynomial g(spec);
    for (int i = 1; i <= spec.m; ++i) g = g + Polynomial::variable(spec, VarRef::x(i), r);
    for (int j = 1; j <= spec.n; ++j) g = g - Polynomial::variable(spec, VarRef::y(j), r);
    gens.push_back(g);
  }
  return gens;
}

// Separator for a point with vanishing pairs: every multiple of T dies at p,
// so cut v out with level sets of supersymmetric orbit invariants instead.
Polynomial separate_atypical(const PointSet& v, const Point& p, const VarSpec& spec,
                             std::uint64_t seed) {
  if (v.empty()) return Polynomial::constant(spec, Rational(1));
  std::vector<Polynomial> gens = orbit_separators(spec);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Polynomial g(spec);
    for (const Polynomial& gen : gens) g = g + small_rational(rng) * gen;
    std::set<Rational> values;
    for (const Point& q : v) values.insert(evaluate(g, q));
    Rational at_p = evaluate(g, p);
    if (values.count(at_p)) continue;
    Polynomial f = Polynomial::constant(spec, Rational(1));
    for (const Rational& value : values)
      f = f * (g - Polynomial::constant(spec, value));
    return f;
  }
  throw domain_error("retry budget exhausted while separating");
}

}  // namespace

Polynomial separating_polynomial(const PointSet& v, const Point& p, std::uint64_t seed) {
  if (!is_invariant(v)) throw domain_error("set is not groupoid invariant");
  if (v.contains(p)) throw domain_error("point belongs to the set");
  if (!v.empty()) {
    const Point& ref = *v.begin();
    if (p.m() != ref.m() || p.n() != ref.n() || p.multiplicative != ref.multiplicative)
      throw domain_error("point shape differs from the set");
  }
  VarSpec spec{p.m(), p.n(), p.multiplicative};

  Polynomial f(spec);
  if (atypicality(p) == 0) {
    Polynomial h = invariant_vanishing(v, p, spec, seed);
    Polynomial t = p.multiplicative ? t_element_l(spec.m, spec.n) : t_element(spec.m, spec.n);
    f = t * h;
  } else {
    f = separate_atypical(v, p, spec, seed);
  }

  bool member = spec.laurent ? is_laurent_supersymmetric(f) : is_supersymmetric(f);
  if (!member || evaluate(f, p).is_zero())
    throw std::logic_error("separator construction violated its postcondition");
  for (const Point& q : v)
    if (!evaluate(f, q).is_zero())
      throw std::logic_error("separator construction violated its postcondition");
  return f;
}

}  // namespace susy
