#pragma once

// Independent oracles and random generators shared by the unit tests. The
// oracles deliberately avoid the library's own algorithms: determinants by
// cofactor expansion, invariant factors from gcds of minors, torsion
// orders from rational arithmetic.

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "posdiag/exactalg.hpp"
#include "posdiag/seifert.hpp"

namespace oracle {

using posdiag::Integer;
using Grid = std::vector<std::vector<Integer>>;

inline Integer cofactor_det(const Grid& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Grid minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    const Integer term = a[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors d_k / d_{k-1}, d_k the gcd of all k x k minors; stops
/// at the rank. Suitable for matrices up to about 5 x 5.
inline std::vector<Integer> invariant_factors_by_minors(const Grid& a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Grid m;
        for (auto i : r) {
          std::vector<Integer> row;
          for (auto j : c) row.push_back(a[i][j]);
          m.push_back(row);
        }
        g = gcd(g, cofactor_det(m));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline Grid to_grid(const posdiag::IntMatrix& m) {
  Grid g(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return g;
}

/// |H_1| of a normalized space over S^2 as prod(alpha) * |e - sum beta/alpha|,
/// computed in exact rationals; 0 means H_1 is infinite.
inline Integer homology_order_s2(const posdiag::SeifertData& s) {
  mpq_class sum = 0;
  Integer prod = 1;
  for (const auto& f : s.fibers) {
    sum += mpq_class(f.beta, f.alpha);
    prod *= f.alpha;
  }
  mpq_class v = (mpq_class(*s.euler) - sum) * prod;
  v.canonicalize();
  return abs(v.get_num());
}

/// Rational Euler number -sum beta'/alpha of non-normalized data (equals
/// -(e + sum beta/alpha) after normalization).
inline mpq_class rational_euler(const posdiag::SeifertData& s) {
  mpq_class total = 0;
  for (const auto& f : s.fibers) total -= mpq_class(f.beta, f.alpha);
  if (s.euler) total += *s.euler;  // e = -sum floor(beta/alpha), so e - sum beta'/alpha is invariant
  total.canonicalize();
  return total;
}

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline posdiag::FiberInvariant random_normalized_fiber(Rng& rng, long max_alpha) {
  for (;;) {
    const long a = uniform(rng, 2, max_alpha);
    const long b = uniform(rng, 1, a - 1);
    if (std::gcd(a, b) == 1) return {a, b};
  }
}

inline posdiag::SeifertData random_normalized(Rng& rng, long genus, std::size_t m, long max_alpha,
                                              long max_e) {
  std::vector<posdiag::FiberInvariant> fibers;
  for (std::size_t i = 0; i < m; ++i) fibers.push_back(random_normalized_fiber(rng, max_alpha));
  return posdiag::make_normalized(genus, fibers, uniform(rng, -max_e, max_e));
}

}  // namespace oracle
