#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "susy/rational.hpp"

namespace susy {

// Shape of a polynomial ring: m x-variables and n y-variables; when laurent
// is set, negative exponents are permitted.
struct VarSpec {
  int m = 0;
  int n = 0;
  bool laurent = false;

  bool operator==(const VarSpec&) const = default;
};

enum class Block { x, y };

// A variable slot, 1-based within its block.
struct VarRef {
  Block block;
  int index;

  static VarRef x(int i) { return {Block::x, i}; }
  static VarRef y(int j) { return {Block::y, j}; }
  bool operator==(const VarRef&) const = default;
};

// Exponent vectors, fixed lengths m and n. Canonical: never truncated.
struct Monomial {
  std::vector<int> xe, ye;

  int degree() const;
  bool is_unit() const;  // all exponents zero
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic, x-block before y-block. Total degree first (Laurent
// degrees may be negative), then lex on the concatenated exponent vector.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse exact polynomial. Invariants: no zero coefficients are stored, all
// monomials conform to the spec. Values are immutable in spirit: every
// operation returns a fresh polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(VarSpec spec) : spec_(spec) {}
  static Polynomial zero(VarSpec spec) { return Polynomial(spec); }
  static Polynomial constant(VarSpec spec, const Rational& c);
  static Polynomial variable(VarSpec spec, VarRef v, int exponent = 1);

  const VarSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // value of a constant polynomial (0 if zero)

  // Accumulates c into the monomial's coefficient; drops the term when the
  // sum is zero. Validates exponent lengths and the Laurent constraint.
  void add_term(const Monomial& mono, const Rational& c);

  int degree_in(VarRef v) const;        // max exponent of v over all terms (0 for zero poly)
  bool depends_on(VarRef v) const;      // some term has a nonzero exponent of v
  int total_degree() const;             // max term degree; 0 for the zero polynomial
  bool is_homogeneous() const;
  std::vector<int> homogeneous_degrees() const;  // sorted distinct term degrees
  Polynomial homogeneous_part(int d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial pow(int e) const;  // e < 0 only for single-term Laurent polynomials

  bool operator==(const Polynomial&) const = default;

 private:
  VarSpec spec_;
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

// One generator image for substitution. Images live in the same spec as the
// input; unbound variables are left untouched.
struct Binding {
  VarRef var;
  Polynomial image;
};

// Exact substitution. A variable occurring with a negative exponent may only
// be bound to an invertible image: a nonzero scalar or a single-term
// polynomial (in particular a fresh variable). Binding zero to such a
// variable is a domain_error.
Polynomial substitute(const Polynomial& p, const std::vector<Binding>& bindings);

Polynomial partial_derivative(const Polynomial& p, VarRef v);

// x_i*dp/dx_i + y_j*dp/dy_j (1-based i, j). Terms of degree zero in the pair
// map to zero.
Polynomial laurent_derivative(const Polynomial& p, int i, int j);

// Returns q with p = q*d exactly, or nullopt. In Laurent mode divisibility is
// decided after clearing monomial units from both sides, and the returned q
// still satisfies p = q*d on the nose. d = 0 is a domain_error.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

// Exact evaluation. Under a Laurent spec every coordinate must be nonzero.
Rational evaluate(const Polynomial& p, std::span<const Rational> xs,
                  std::span<const Rational> ys);

// An element of S_m x S_n acting by w(x_i) = x_{w(i)}, w(y_j) = y_{w(j)}.
// Stored 0-based: index i maps to xperm[i].
struct GroupElement {
  std::vector<int> xperm, yperm;

  static GroupElement identity(int m, int n);
  GroupElement after(const GroupElement& first) const;  // this ∘ first
  bool operator==(const GroupElement&) const = default;
};

Polynomial apply_group(const GroupElement& w, const Polynomial& p);

// True iff p is fixed by the adjacent transpositions of both blocks.
bool is_w_invariant(const Polynomial& p);

// Signed orbit sum over the symmetric group of one block. Blocks larger than
// 8 are refused (the group is iterated in full).
Polynomial alternate(const Polynomial& p, Block block);

// Plumbing between specs. extend pads with fresh trailing variables (target
// must dominate the source spec); shrink_to drops trailing variables the
// polynomial does not depend on; swap_blocks exchanges the x and y roles.
Polynomial extend(const Polynomial& p, VarSpec target);
Polynomial shrink_to(const Polynomial& p, int new_m, int new_n);
Polynomial swap_blocks(const Polynomial& p);

std::string to_string(const Polynomial& p, std::string_view xname = "x",
                      std::string_view yname = "y");

// Deterministic enumeration of all permutations of {0..k-1} with signs,
// in lexicographic order. k must be at most 8.
void for_each_permutation(int k, const std::function<void(const std::vector<int>&, int)>& fn);

int permutation_sign(const std::vector<int>& perm);

}  // namespace susy
