#pragma once

// Test-only oracle kept independent of the library's Smith reduction.

#include <cstdint>
#include <functional>
#include <vector>

#include "polyfold/complexes.hpp"

namespace oracle {

// Independent oracle: invariant factors via determinant divisors.
// d_k = gcd of all k x k minors; factor_k = d_k / d_{k-1}.
inline std::int64_t gcdll(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t det(const std::vector<std::vector<std::int64_t>>& m,
                 const std::vector<int>& rows, const std::vector<int>& cols) {
  const size_t n = rows.size();
  if (n == 1) return m[(size_t)rows[0]][(size_t)cols[0]];
  std::int64_t acc = 0;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < n; ++j) {
    std::vector<int> sub_cols;
    for (size_t jj = 0; jj < n; ++jj) {
      if (jj != j) sub_cols.push_back(cols[jj]);
    }
    std::int64_t minor = det(m, sub_rows, sub_cols);
    std::int64_t term = m[(size_t)rows[0]][(size_t)cols[j]] * minor;
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

inline polyfold::SmithResult snf_oracle(const std::vector<std::vector<std::int64_t>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  polyfold::SmithResult out;
  std::int64_t prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    // gcd over all k x k minors
    std::int64_t g = 0;
    std::vector<int> rsel(static_cast<size_t>(k));
    std::vector<int> csel(static_cast<size_t>(k));
    std::function<void(int, int)> walk_rows = [&](int start, int depth) {
      if (depth == k) {
        std::function<void(int, int)> walk_cols = [&](int cstart, int cdepth) {
          if (cdepth == k) {
            g = gcdll(g, det(m, rsel, csel));
            return;
          }
          for (int c = cstart; c < cols; ++c) {
            csel[(size_t)cdepth] = c;
            walk_cols(c + 1, cdepth + 1);
          }
        };
        walk_cols(0, 0);
        return;
      }
      for (int r = start; r < rows; ++r) {
        rsel[(size_t)depth] = r;
        walk_rows(r + 1, depth + 1);
      }
    };
    walk_rows(0, 0);
    if (g == 0) break;
    out.factors.push_back(g / prev);
    prev = g;
    ++out.rank;
  }
  return out;
}


}  // namespace oracle
