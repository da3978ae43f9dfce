#include "susy/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace susy {

Partition Partition::of(std::vector<int> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw domain_error("negative partition part");
    if (i > 0 && parts[i] > parts[i - 1]) throw domain_error("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1) throw domain_error("partition parts are 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

IntegerSignature IntegerSignature::of(std::vector<int> entries) {
  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i] > entries[i - 1])
      throw domain_error("signature entries must be weakly decreasing");
  IntegerSignature s;
  s.entries_ = std::move(entries);
  return s;
}

int IntegerSignature::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

Partition transpose(const Partition& lambda) {
  std::vector<int> cols;
  int width = lambda.part(1);
  cols.reserve(width);
  for (int j = 1; j <= width; ++j) {
    int count = 0;
    for (int p : lambda.parts())
      if (p >= j) ++count;
    cols.push_back(count);
  }
  return Partition::of(std::move(cols));
}

bool in_hook(const Partition& lambda, int m, int n) {
  if (m < 0 || n < 0) throw domain_error("hook parameters must be nonnegative");
  return lambda.part(m + 1) <= n;
}

bool in_h0(const Partition& lambda, int m, int n) {
  if (!in_hook(lambda, m, n)) throw domain_error("partition not in the (m,n)-hook");
  return lambda.part(m) >= n;
}

std::pair<Partition, Partition> hook_mu_nu(const Partition& lambda, int m, int n) {
  if (!in_hook(lambda, m, n)) throw domain_error("partition not in the (m,n)-hook");
  std::vector<int> mu;
  for (int i = 1; i <= lambda.length(); ++i) mu.push_back(std::max(0, lambda.part(i) - n));
  Partition lt = transpose(lambda);
  std::vector<int> nu;
  for (int j = 1; j <= lt.length(); ++j) nu.push_back(std::max(0, lt.part(j) - m));
  return {Partition::of(std::move(mu)), Partition::of(std::move(nu))};
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::of(prefix));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_hook(int m, int n, int d) {
  if (d < 0) throw domain_error("degree must be nonnegative");
  std::vector<Partition> all;
  std::vector<int> prefix;
  partitions_rec(d, d == 0 ? 1 : d, prefix, all);
  std::vector<Partition> out;
  for (auto& p : all)
    if (in_hook(p, m, n)) out.push_back(std::move(p));
  return out;
}

Polynomial vandermonde(int count, Block block) {
  VarSpec spec = block == Block::x ? VarSpec{count, 0, false} : VarSpec{0, count, false};
  Polynomial out = Polynomial::constant(spec, Rational(1));
  for (int i = 1; i <= count; ++i) {
    for (int j = i + 1; j <= count; ++j) {
      VarRef vi = block == Block::x ? VarRef::x(i) : VarRef::y(i);
      VarRef vj = block == Block::x ? VarRef::x(j) : VarRef::y(j);
      out = out * (Polynomial::variable(spec, vi) - Polynomial::variable(spec, vj));
    }
  }
  return out;
}

namespace {

// {x^(entries + delta)} / Delta in the given spec (x block, m variables).
Polynomial bialternant(const std::vector<int>& entries, int m, bool laurent) {
  VarSpec spec{m, 0, laurent};
  Monomial mono{std::vector<int>(m, 0), {}};
  for (int i = 0; i < m; ++i) mono.xe[i] = entries[i] + (m - 1 - i);
  Polynomial top(spec);
  top.add_term(mono, Rational(1));
  Polynomial alt = alternate(top, Block::x);
  Polynomial delta = extend(vandermonde(m, Block::x), spec);
  auto q = divide_exact(alt, delta);
  if (!q) throw std::logic_error("alternant not divisible by the Vandermonde determinant");
  return *q;
}

}  // namespace

Polynomial schur(const Partition& mu, int m) {
  if (mu.length() > m) throw domain_error("partition longer than the variable count");
  std::vector<int> entries(m, 0);
  for (int i = 1; i <= m; ++i) entries[i - 1] = mu.part(i);
  return bialternant(entries, m, false);
}

Polynomial euler_character(const IntegerSignature& lambda, int m) {
  if (lambda.length() != m) throw domain_error("signature length must equal the variable count");
  return bialternant(lambda.entries(), m, true);
}

}  // namespace susy
