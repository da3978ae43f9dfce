#pragma once

#include <utility>
#include <vector>

#include "susy/polynomial.hpp"

namespace susy {

// Weakly decreasing nonnegative parts, trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  static Partition of(std::vector<int> parts);  // validates and trims

  const std::vector<int>& parts() const { return parts_; }
  int size() const;              // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;         // 1-based, 0 past the end

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Weakly decreasing integers of a fixed length; entries may be negative.
class IntegerSignature {
 public:
  IntegerSignature() = default;
  static IntegerSignature of(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }
  int sum() const;

  bool operator==(const IntegerSignature&) const = default;
  auto operator<=>(const IntegerSignature&) const = default;

 private:
  std::vector<int> entries_;
};

Partition transpose(const Partition& lambda);

// lambda fits the (m,n)-hook iff lambda_{m+1} <= n.
bool in_hook(const Partition& lambda, int m, int n);

// lambda in H0(m,n) iff the cell (m,n) lies in the diagram, i.e. lambda_m >= n.
// Requires in_hook; otherwise a domain_error.
bool in_h0(const Partition& lambda, int m, int n);

// mu_i = max(0, lambda_i - n), nu_j = max(0, lambda'_j - m).
// Requires in_hook.
std::pair<Partition, Partition> hook_mu_nu(const Partition& lambda, int m, int n);

// All partitions of d inside the (m,n)-hook, in decreasing lexicographic order.
std::vector<Partition> enumerate_hook(int m, int n, int d);

// prod_{i<j} (v_i - v_j) over the chosen block; 1 for count <= 1. Lives in
// (count,0) for the x block and (0,count) for the y block.
Polynomial vandermonde(int count, Block block);

// Schur polynomial in m x-variables via the bialternant quotient.
Polynomial schur(const Partition& mu, int m);

// Laurent analog of a Schur polynomial for a weakly decreasing integer
// signature of length m; computed by alternation and exact division.
Polynomial euler_character(const IntegerSignature& lambda, int m);

}  // namespace susy
