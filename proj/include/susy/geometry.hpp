#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "susy/polynomial.hpp"

namespace susy {

// A point of k^{m|n} (additive) or k^{*m|n} (multiplicative; every coordinate
// nonzero).
struct Point {
  std::vector<Rational> x, y;
  bool multiplicative = false;

  static Point make(std::vector<Rational> x, std::vector<Rational> y, bool multiplicative);
  int m() const { return static_cast<int>(x.size()); }
  int n() const { return static_cast<int>(y.size()); }

  bool operator==(const Point&) const = default;
  bool operator<(const Point& o) const;
};

// An isotropic root sign*(eps_i - delta_j), 1-based indices.
struct Root {
  int i = 1;
  int j = 1;
  int sign = 1;
};

std::vector<Root> isotropic_roots(int m, int n);  // both signs

// Finite set of points of one common shape.
class PointSet {
 public:
  PointSet() = default;
  void insert(Point p);  // enforces shape coherence
  bool contains(const Point& p) const { return points_.count(p) > 0; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  bool operator==(const PointSet&) const = default;

 private:
  std::set<Point> points_;
};

// (root, p) under the form (eps_i, eps_k) = delta_ik, (delta_j, delta_l) =
// -delta_jl; that is, sign*(x_i + y_j). Additive points only.
Rational pairing(const Root& alpha, const Point& p);

// Additive points: p + alpha, defined on the hyperplane (alpha, p) = 0.
// Multiplicative points: scale a matched pair x_i = y_j by 2 (or 1/2 for the
// negative root).
Point tau_shift(const Root& alpha, const Point& p);

PointSet weyl_orbit(const Point& p);

struct OrbitResult {
  PointSet points;
  bool truncated = false;  // a shift move out of the set was cut off by the cap
};

// Breadth-first closure under permutations and applicable shifts, counting
// shift applications per chain and stopping each chain at depth_cap.
OrbitResult groupoid_orbit(const Point& p, int depth_cap);

// Closed under permutations and under every applicable shift. Finite
// invariant sets therefore meet no shift hyperplane at all.
bool is_invariant(const PointSet& v);

// Maximum number of disjoint vanishing pairs: maximum matching of the
// bipartite graph with an edge (i,j) iff x_i + y_j = 0 (additive) or
// x_i = y_j (multiplicative).
int atypicality(const Point& p);

// True iff f vanishes at every point of v. f must belong to the
// (Laurent) supersymmetric ring matching the point shape.
bool vanishing_ideal_check(const PointSet& v, const Polynomial& f);

// A supersymmetric f with f = 0 on v and f(p) != 0. Requires is_invariant(v)
// and p outside v. Deterministic for a fixed seed.
Polynomial separating_polynomial(const PointSet& v, const Point& p, std::uint64_t seed);

Rational evaluate(const Polynomial& f, const Point& p);

}  // namespace susy
