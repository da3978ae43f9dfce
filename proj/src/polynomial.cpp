#include "susy/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace susy {

namespace {

void check_same_spec(const Polynomial& a, const Polynomial& b) {
  if (a.spec() != b.spec()) throw domain_error("spec mismatch");
}

int slot_count(const VarSpec& spec, Block b) { return b == Block::x ? spec.m : spec.n; }

void check_var(const VarSpec& spec, VarRef v) {
  if (v.index < 1 || v.index > slot_count(spec, v.block))
    throw domain_error("variable index out of range");
}

int& exponent_slot(Monomial& m, VarRef v) {
  return v.block == Block::x ? m.xe[v.index - 1] : m.ye[v.index - 1];
}

int exponent_of(const Monomial& m, VarRef v) {
  return v.block == Block::x ? m.xe[v.index - 1] : m.ye[v.index - 1];
}

Monomial unit_monomial(const VarSpec& spec) {
  return Monomial{std::vector<int>(spec.m, 0), std::vector<int>(spec.n, 0)};
}

}  // namespace

int Monomial::degree() const {
  int d = 0;
  for (int e : xe) d += e;
  for (int e : ye) d += e;
  return d;
}

bool Monomial::is_unit() const {
  auto zero = [](int e) { return e == 0; };
  return std::all_of(xe.begin(), xe.end(), zero) && std::all_of(ye.begin(), ye.end(), zero);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.xe != b.xe) return a.xe < b.xe;
  return a.ye < b.ye;
}

Polynomial Polynomial::constant(VarSpec spec, const Rational& c) {
  Polynomial p(spec);
  p.add_term(unit_monomial(spec), c);
  return p;
}

Polynomial Polynomial::variable(VarSpec spec, VarRef v, int exponent) {
  check_var(spec, v);
  Monomial mono = unit_monomial(spec);
  exponent_slot(mono, v) = exponent;
  Polynomial p(spec);
  p.add_term(mono, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw domain_error("polynomial is not constant");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (static_cast<int>(mono.xe.size()) != spec_.m ||
      static_cast<int>(mono.ye.size()) != spec_.n)
    throw std::logic_error("monomial does not fit the spec");
  if (!spec_.laurent) {
    auto neg = [](int e) { return e < 0; };
    if (std::any_of(mono.xe.begin(), mono.xe.end(), neg) ||
        std::any_of(mono.ye.begin(), mono.ye.end(), neg))
      throw std::logic_error("negative exponent outside a Laurent spec");
  }
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::degree_in(VarRef v) const {
  check_var(spec_, v);
  int d = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    int e = exponent_of(mono, v);
    d = first ? e : std::max(d, e);
    first = false;
  }
  return first ? 0 : d;
}

bool Polynomial::depends_on(VarRef v) const {
  check_var(spec_, v);
  for (const auto& [mono, c] : terms_)
    if (exponent_of(mono, v) != 0) return true;
  return false;
}

int Polynomial::total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    d = first ? mono.degree() : std::max(d, mono.degree());
    first = false;
  }
  return d;
}

bool Polynomial::is_homogeneous() const { return homogeneous_degrees().size() <= 1; }

std::vector<int> Polynomial::homogeneous_degrees() const {
  std::vector<int> ds;
  for (const auto& [mono, c] : terms_) ds.push_back(mono.degree());
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return ds;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial out(spec_);
  for (const auto& [mono, c] : terms_)
    if (mono.degree() == d) out.add_term(mono, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(spec_);
  for (const auto& [mono, c] : terms_) out.add_term(mono, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_spec(*this, o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_spec(*this, o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  return out += b;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  return out -= b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_spec(a, b);
  Polynomial out(a.spec());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial mono = ma;
      for (size_t i = 0; i < mono.xe.size(); ++i) mono.xe[i] += mb.xe[i];
      for (size_t j = 0; j < mono.ye.size(); ++j) mono.ye[j] += mb.ye[j];
      out.add_term(mono, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out(p.spec());
  for (const auto& [mono, pc] : p.terms()) out.add_term(mono, c * pc);
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e == 0) return constant(spec_, Rational(1));
  if (e < 0) {
    if (terms_.size() != 1)
      throw domain_error("negative power of a non-invertible polynomial");
    const auto& [mono, c] = *terms_.begin();
    if (!spec_.laurent && !mono.is_unit())
      throw domain_error("negative power requires a Laurent spec");
    Monomial inv = mono;
    for (int& v : inv.xe) v *= e;
    for (int& v : inv.ye) v *= e;
    Polynomial out(spec_);
    out.add_term(inv, c.pow(e));
    return out;
  }
  Polynomial acc = constant(spec_, Rational(1));
  for (int k = 0; k < e; ++k) acc = acc * (*this);
  return acc;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial substitute(const Polynomial& p, const std::vector<Binding>& bindings) {
  const VarSpec& spec = p.spec();
  // bound[slot]: index into bindings, -1 for free variables. x slots first.
  std::vector<int> bound(spec.m + spec.n, -1);
  auto slot_of = [&](VarRef v) {
    return v.block == Block::x ? v.index - 1 : spec.m + v.index - 1;
  };
  for (size_t k = 0; k < bindings.size(); ++k) {
    check_var(spec, bindings[k].var);
    if (bindings[k].image.spec() != spec)
      throw domain_error("binding image has a different spec");
    int slot = slot_of(bindings[k].var);
    if (bound[slot] != -1) throw domain_error("variable bound twice");
    bound[slot] = static_cast<int>(k);
  }

  // A variable occurring with a negative exponent needs an invertible image.
  for (const auto& [mono, c] : p.terms()) {
    for (int s = 0; s < spec.m + spec.n; ++s) {
      if (bound[s] == -1) continue;
      int e = s < spec.m ? mono.xe[s] : mono.ye[s - spec.m];
      if (e >= 0) continue;
      const Polynomial& image = bindings[bound[s]].image;
      if (image.is_zero())
        throw domain_error("zero bound to a variable with negative exponents");
      if (image.terms().size() != 1)
        throw domain_error("non-invertible image bound to a variable with negative exponents");
    }
  }

  std::map<std::pair<int, int>, Polynomial> power_cache;  // (slot, exponent)
  auto image_power = [&](int slot, int e) -> const Polynomial& {
    auto key = std::make_pair(slot, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end())
      it = power_cache.emplace(key, bindings[bound[slot]].image.pow(e)).first;
    return it->second;
  };

  Polynomial out(spec);
  for (const auto& [mono, c] : p.terms()) {
    Monomial base{std::vector<int>(spec.m, 0), std::vector<int>(spec.n, 0)};
    Polynomial factor = Polynomial::constant(spec, c);
    bool dead = false;
    for (int s = 0; s < spec.m + spec.n && !dead; ++s) {
      int e = s < spec.m ? mono.xe[s] : mono.ye[s - spec.m];
      if (e == 0) continue;
      if (bound[s] == -1) {
        (s < spec.m ? base.xe[s] : base.ye[s - spec.m]) = e;
      } else if (bindings[bound[s]].image.is_zero()) {
        dead = true;  // zero image, positive exponent
      } else {
        factor = factor * image_power(s, e);
      }
    }
    if (dead) continue;
    Polynomial shifted(spec);
    shifted.add_term(base, Rational(1));
    out += factor * shifted;
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& p, VarRef v) {
  check_var(p.spec(), v);
  Polynomial out(p.spec());
  for (const auto& [mono, c] : p.terms()) {
    int e = exponent_of(mono, v);
    if (e == 0) continue;
    Monomial m2 = mono;
    exponent_slot(m2, v) = e - 1;
    out.add_term(m2, c * Rational(e));
  }
  return out;
}

Polynomial laurent_derivative(const Polynomial& p, int i, int j) {
  check_var(p.spec(), VarRef::x(i));
  check_var(p.spec(), VarRef::y(j));
  Polynomial out(p.spec());
  for (const auto& [mono, c] : p.terms()) {
    int w = mono.xe[i - 1] + mono.ye[j - 1];
    if (w == 0) continue;
    out.add_term(mono, c * Rational(w));
  }
  return out;
}

namespace {

// Componentwise minimum exponent over all terms; the monomial unit that
// clears a Laurent polynomial down to an honest polynomial.
Monomial min_exponents(const Polynomial& p) {
  Monomial mins = unit_monomial(p.spec());
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    if (first) {
      mins = mono;
      first = false;
      continue;
    }
    for (size_t i = 0; i < mins.xe.size(); ++i) mins.xe[i] = std::min(mins.xe[i], mono.xe[i]);
    for (size_t j = 0; j < mins.ye.size(); ++j) mins.ye[j] = std::min(mins.ye[j], mono.ye[j]);
  }
  return mins;
}

Polynomial shift_monomial(const Polynomial& p, const Monomial& shift, int direction) {
  Polynomial out(p.spec());
  for (const auto& [mono, c] : p.terms()) {
    Monomial m2 = mono;
    for (size_t i = 0; i < m2.xe.size(); ++i) m2.xe[i] += direction * shift.xe[i];
    for (size_t j = 0; j < m2.ye.size(); ++j) m2.ye[j] += direction * shift.ye[j];
    out.add_term(m2, c);
  }
  return out;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
  for (size_t i = 0; i < d.xe.size(); ++i)
    if (m.xe[i] < d.xe[i]) return false;
  for (size_t j = 0; j < d.ye.size(); ++j)
    if (m.ye[j] < d.ye[j]) return false;
  return true;
}

// Long division by a single divisor with nonnegative exponents throughout.
// The remainder is updated in place; the leading term strictly decreases.
std::optional<Polynomial> divide_plain(const Polynomial& p, const Polynomial& d) {
  Polynomial q(p.spec());
  Polynomial r = p;
  const auto& dlead = *d.terms().rbegin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    if (!monomial_divides(dlead.first, rlead.first)) return std::nullopt;
    Monomial t = rlead.first;
    for (size_t i = 0; i < t.xe.size(); ++i) t.xe[i] -= dlead.first.xe[i];
    for (size_t j = 0; j < t.ye.size(); ++j) t.ye[j] -= dlead.first.ye[j];
    Rational tc = rlead.second / dlead.second;
    q.add_term(t, tc);
    for (const auto& [dm, dc] : d.terms()) {
      Monomial shifted = dm;
      for (size_t i = 0; i < shifted.xe.size(); ++i) shifted.xe[i] += t.xe[i];
      for (size_t j = 0; j < shifted.ye.size(); ++j) shifted.ye[j] += t.ye[j];
      r.add_term(shifted, -(tc * dc));
    }
  }
  return q;
}

}  // namespace

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
  check_same_spec(p, d);
  if (d.is_zero()) throw domain_error("division by the zero polynomial");
  if (p.is_zero()) return Polynomial::zero(p.spec());
  if (!p.spec().laurent) return divide_plain(p, d);

  // Units of the Laurent ring are monomials: clear them from both sides,
  // divide honest polynomials, then restore the exponent shift.
  Monomial pmin = min_exponents(p);
  Monomial dmin = min_exponents(d);
  Polynomial pc = shift_monomial(p, pmin, -1);
  Polynomial dc = shift_monomial(d, dmin, -1);
  auto q = divide_plain(pc, dc);
  if (!q) return std::nullopt;
  Monomial shift = pmin;
  for (size_t i = 0; i < shift.xe.size(); ++i) shift.xe[i] -= dmin.xe[i];
  for (size_t j = 0; j < shift.ye.size(); ++j) shift.ye[j] -= dmin.ye[j];
  return shift_monomial(*q, shift, +1);
}

Rational evaluate(const Polynomial& p, std::span<const Rational> xs,
                  std::span<const Rational> ys) {
  const VarSpec& spec = p.spec();
  if (static_cast<int>(xs.size()) != spec.m || static_cast<int>(ys.size()) != spec.n)
    throw domain_error("point shape does not match the spec");
  if (spec.laurent) {
    for (const Rational& v : xs)
      if (v.is_zero()) throw domain_error("zero coordinate under a Laurent spec");
    for (const Rational& v : ys)
      if (v.is_zero()) throw domain_error("zero coordinate under a Laurent spec");
  }
  Rational total(0);
  for (const auto& [mono, c] : p.terms()) {
    Rational term = c;
    for (int i = 0; i < spec.m; ++i)
      if (mono.xe[i] != 0) term *= xs[i].pow(mono.xe[i]);
    for (int j = 0; j < spec.n; ++j)
      if (mono.ye[j] != 0) term *= ys[j].pow(mono.ye[j]);
    total += term;
  }
  return total;
}

namespace {

void check_perm(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v])
      throw domain_error("not a permutation");
    seen[v] = true;
  }
}

}  // namespace

GroupElement GroupElement::identity(int m, int n) {
  GroupElement g;
  g.xperm.resize(m);
  g.yperm.resize(n);
  std::iota(g.xperm.begin(), g.xperm.end(), 0);
  std::iota(g.yperm.begin(), g.yperm.end(), 0);
  return g;
}

GroupElement GroupElement::after(const GroupElement& first) const {
  if (xperm.size() != first.xperm.size() || yperm.size() != first.yperm.size())
    throw domain_error("group element size mismatch");
  GroupElement g;
  g.xperm.resize(xperm.size());
  g.yperm.resize(yperm.size());
  for (size_t i = 0; i < xperm.size(); ++i) g.xperm[i] = xperm[first.xperm[i]];
  for (size_t j = 0; j < yperm.size(); ++j) g.yperm[j] = yperm[first.yperm[j]];
  return g;
}

Polynomial apply_group(const GroupElement& w, const Polynomial& p) {
  const VarSpec& spec = p.spec();
  if (static_cast<int>(w.xperm.size()) != spec.m ||
      static_cast<int>(w.yperm.size()) != spec.n)
    throw domain_error("permutation size mismatch");
  check_perm(w.xperm);
  check_perm(w.yperm);
  Polynomial out(spec);
  for (const auto& [mono, c] : p.terms()) {
    Monomial m2 = unit_monomial(spec);
    for (int i = 0; i < spec.m; ++i) m2.xe[w.xperm[i]] = mono.xe[i];
    for (int j = 0; j < spec.n; ++j) m2.ye[w.yperm[j]] = mono.ye[j];
    out.add_term(m2, c);
  }
  return out;
}

bool is_w_invariant(const Polynomial& p) {
  const VarSpec& spec = p.spec();
  for (int i = 0; i + 1 < spec.m; ++i) {
    GroupElement w = GroupElement::identity(spec.m, spec.n);
    std::swap(w.xperm[i], w.xperm[i + 1]);
    if (!(apply_group(w, p) == p)) return false;
  }
  for (int j = 0; j + 1 < spec.n; ++j) {
    GroupElement w = GroupElement::identity(spec.m, spec.n);
    std::swap(w.yperm[j], w.yperm[j + 1]);
    if (!(apply_group(w, p) == p)) return false;
  }
  return true;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void for_each_permutation(int k, const std::function<void(const std::vector<int>&, int)>& fn) {
  if (k < 0 || k > 8) throw domain_error("permutation block larger than 8");
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(perm, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

Polynomial alternate(const Polynomial& p, Block block) {
  const VarSpec& spec = p.spec();
  int k = slot_count(spec, block);
  if (k > 8) throw domain_error("alternation block larger than 8");
  Polynomial acc(spec);
  for_each_permutation(k, [&](const std::vector<int>& perm, int sign) {
    GroupElement w = GroupElement::identity(spec.m, spec.n);
    (block == Block::x ? w.xperm : w.yperm) = perm;
    acc += Rational(sign) * apply_group(w, p);
  });
  return acc;
}

Polynomial extend(const Polynomial& p, VarSpec target) {
  const VarSpec& src = p.spec();
  if (target.m < src.m || target.n < src.n || (src.laurent && !target.laurent))
    throw domain_error("target spec does not contain the source spec");
  Polynomial out(target);
  for (const auto& [mono, c] : p.terms()) {
    Monomial m2{std::vector<int>(target.m, 0), std::vector<int>(target.n, 0)};
    std::copy(mono.xe.begin(), mono.xe.end(), m2.xe.begin());
    std::copy(mono.ye.begin(), mono.ye.end(), m2.ye.begin());
    out.add_term(m2, c);
  }
  return out;
}

Polynomial shrink_to(const Polynomial& p, int new_m, int new_n) {
  const VarSpec& src = p.spec();
  if (new_m < 0 || new_m > src.m || new_n < 0 || new_n > src.n)
    throw domain_error("shrink target out of range");
  for (int i = new_m + 1; i <= src.m; ++i)
    if (p.depends_on(VarRef::x(i))) throw domain_error("polynomial depends on a dropped variable");
  for (int j = new_n + 1; j <= src.n; ++j)
    if (p.depends_on(VarRef::y(j))) throw domain_error("polynomial depends on a dropped variable");
  VarSpec target{new_m, new_n, src.laurent};
  Polynomial out(target);
  for (const auto& [mono, c] : p.terms()) {
    Monomial m2{std::vector<int>(mono.xe.begin(), mono.xe.begin() + new_m),
                std::vector<int>(mono.ye.begin(), mono.ye.begin() + new_n)};
    out.add_term(m2, c);
  }
  return out;
}

Polynomial swap_blocks(const Polynomial& p) {
  VarSpec target{p.spec().n, p.spec().m, p.spec().laurent};
  Polynomial out(target);
  for (const auto& [mono, c] : p.terms()) out.add_term(Monomial{mono.ye, mono.xe}, c);
  return out;
}

std::string to_string(const Polynomial& p, std::string_view xname, std::string_view yname) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    Rational abs = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_vars = !mono.is_unit();
    if (!(abs == Rational(1)) || !has_vars) {
      os << abs.str();
      if (has_vars) os << "*";
    }
    bool need_star = false;
    auto emit = [&](std::string_view name, const std::vector<int>& exps) {
      for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (need_star) os << "*";
        os << name << (i + 1);
        if (exps[i] != 1) os << "^" << exps[i];
        need_star = true;
      }
    };
    emit(xname, mono.xe);
    emit(yname, mono.ye);
  }
  return os.str();
}

}  // namespace susy
