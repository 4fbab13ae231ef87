#pragma once

// Independent reference computations used only by tests. Nothing here calls into the library's
// reduction code, so agreement is evidence rather than tautology.

#include "torusdual/int_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using torusdual::Integer;
using torusdual::IntMatrix;
using torusdual::IntVector;

/// Fraction-free Gaussian elimination (Bareiss).
inline Integer determinant(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// gcd of all k x k minors; enumerates subsets, so only for small matrices.
inline Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  if (k == 0) return 1;
  Integer g = 0;
  std::vector<std::size_t> rs, cs;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
    if (rs.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t i = start; i < m.rows(); ++i) {
      rs.push_back(i);
      pick_rows(i + 1);
      rs.pop_back();
    }
  };
  pick_cols = [&](std::size_t start) {
    if (cs.size() == k) {
      IntMatrix sub = m.select_rows(rs).select_columns(cs);
      Integer d = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t j = start; j < m.cols(); ++j) {
      cs.push_back(j);
      pick_cols(j + 1);
      cs.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

/// Random unimodular matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> f(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    u.add_row_multiple(a, b, f(rng));
  }
  return u;
}

}  // namespace oracle
