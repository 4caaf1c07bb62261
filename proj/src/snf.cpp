#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "polyfold/complexes.hpp"

namespace polyfold {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in Smith reduction");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in Smith reduction");
  }
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Classic dense Smith reduction.  The minimal entry is re-selected as pivot
// after every elimination pass, which keeps intermediate entries small.
SmithResult dense_snf(std::vector<std::vector<std::int64_t>> m) {
  SmithResult out;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  while (r < rows && r < cols) {
    bool settled = false;
    while (!settled) {
      // minimal nonzero entry of the remaining block becomes the pivot
      size_t pi = r, pj = r;
      std::int64_t best = 0;
      for (size_t i = r; i < rows; ++i) {
        for (size_t j = r; j < cols; ++j) {
          if (m[i][j] != 0 &&
              (best == 0 || std::llabs(m[i][j]) < std::llabs(best))) {
            best = m[i][j];
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) {
        out.rank = static_cast<int>(out.factors.size());
        goto done;
      }
      std::swap(m[pi], m[r]);
      for (size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][r]);
      const std::int64_t p = m[r][r];

      bool dirty = false;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][r] == 0) continue;
        std::int64_t q = m[i][r] / p;
        if (q != 0) {
          for (size_t j = r; j < cols; ++j) {
            m[i][j] = checked_add(m[i][j], -checked_mul(q, m[r][j]));
          }
        }
        if (m[i][r] != 0) dirty = true;
      }
      for (size_t j = r + 1; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        std::int64_t q = m[r][j] / p;
        if (q != 0) {
          for (size_t i = r; i < rows; ++i) {
            m[i][j] = checked_add(m[i][j], -checked_mul(q, m[i][r]));
          }
        }
        if (m[r][j] != 0) dirty = true;
      }
      if (dirty) continue;

      // pivot must divide the remaining block
      settled = true;
      for (size_t i = r + 1; i < rows && settled; ++i) {
        for (size_t j = r + 1; j < cols && settled; ++j) {
          if (m[i][j] % p != 0) {
            for (size_t jj = r; jj < cols; ++jj) {
              m[r][jj] = checked_add(m[r][jj], m[i][jj]);
            }
            settled = false;
          }
        }
      }
    }
    out.factors.push_back(std::llabs(m[r][r]));
    ++r;
  }
  out.rank = static_cast<int>(out.factors.size());
done:
  // enforce the divisibility chain
  for (size_t i = 0; i + 1 < out.factors.size(); ++i) {
    for (size_t j = i + 1; j < out.factors.size(); ++j) {
      if (out.factors[j] % out.factors[i] != 0) {
        std::int64_t g = gcd64(out.factors[i], out.factors[j]);
        std::int64_t l = checked_mul(out.factors[i] / g, out.factors[j]);
        out.factors[i] = g;
        out.factors[j] = l;
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

}  // namespace

SmithResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& m) {
  return dense_snf(m);
}

SmithResult smith_normal_form(const SparseMatrix& m) {
  // Phase 1: eliminate on +-1 pivots without leaving the sparse world.
  std::vector<std::map<int, std::int64_t>> cols = m.cols;
  std::vector<std::set<int>> row_cols(static_cast<size_t>(m.rows));
  for (size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, v] : cols[j]) {
      (void)v;
      row_cols[static_cast<size_t>(i)].insert(static_cast<int>(j));
    }
  }
  auto set_entry = [&](int i, int j, std::int64_t v) {
    auto& col = cols[static_cast<size_t>(j)];
    if (v == 0) {
      col.erase(i);
      row_cols[static_cast<size_t>(i)].erase(j);
    } else {
      if (!col.count(i)) row_cols[static_cast<size_t>(i)].insert(j);
      col[i] = v;
    }
  };

  int unit_rank = 0;
  std::vector<bool> row_done(static_cast<size_t>(m.rows), false);
  std::vector<bool> col_done(cols.size(), false);
  while (true) {
    // greedy Markowitz choice among +-1 entries
    int bi = -1, bj = -1;
    long best_cost = -1;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (col_done[j]) continue;
      for (const auto& [i, v] : cols[j]) {
        if (v != 1 && v != -1) continue;
        long cost =
            (long)(row_cols[static_cast<size_t>(i)].size() - 1) *
            (long)(cols[j].size() - 1);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          bi = i;
          bj = static_cast<int>(j);
          if (cost == 0) break;
        }
      }
      if (best_cost == 0) break;
    }
    if (bi < 0) break;
    std::int64_t pivot = cols[static_cast<size_t>(bj)].at(bi);
    // clear the pivot row: for every other column with entry at row bi,
    // subtract (entry/pivot) * pivot column.
    std::vector<int> touched(row_cols[static_cast<size_t>(bi)].begin(),
                             row_cols[static_cast<size_t>(bi)].end());
    std::map<int, std::int64_t> pivot_col = cols[static_cast<size_t>(bj)];
    for (int j2 : touched) {
      if (j2 == bj) continue;
      std::int64_t factor = cols[static_cast<size_t>(j2)].at(bi);
      std::int64_t q = factor / pivot;  // pivot is +-1
      for (const auto& [i2, v2] : pivot_col) {
        std::int64_t cur = 0;
        auto it = cols[static_cast<size_t>(j2)].find(i2);
        if (it != cols[static_cast<size_t>(j2)].end()) cur = it->second;
        set_entry(i2, j2, checked_add(cur, -checked_mul(q, v2)));
      }
    }
    // retire pivot row and column
    for (const auto& [i2, v2] : pivot_col) {
      (void)v2;
      row_cols[static_cast<size_t>(i2)].erase(bj);
    }
    cols[static_cast<size_t>(bj)].clear();
    row_done[static_cast<size_t>(bi)] = true;
    col_done[static_cast<size_t>(bj)] = true;
    ++unit_rank;
  }

  // Phase 2: densify what is left.
  std::map<int, int> row_map;
  std::set<int> live_rows;
  for (size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, v] : cols[j]) {
      (void)v;
      live_rows.insert(i);
    }
  }
  for (int i : live_rows) {
    int idx = static_cast<int>(row_map.size());
    row_map[i] = idx;
  }
  std::vector<std::vector<std::int64_t>> dense(
      row_map.size(), std::vector<std::int64_t>(cols.size(), 0));
  size_t live_cols = 0;
  std::vector<int> col_map(cols.size(), -1);
  for (size_t j = 0; j < cols.size(); ++j) {
    if (!cols[j].empty()) col_map[j] = static_cast<int>(live_cols++);
  }
  for (auto& row : dense) row.resize(live_cols);
  for (size_t j = 0; j < cols.size(); ++j) {
    if (col_map[j] < 0) continue;
    for (const auto& [i, v] : cols[j]) {
      dense[static_cast<size_t>(row_map.at(i))][static_cast<size_t>(col_map[j])] = v;
    }
  }
  SmithResult rest = dense_snf(dense);

  SmithResult out;
  out.rank = unit_rank + rest.rank;
  out.factors.assign(static_cast<size_t>(unit_rank), 1);
  out.factors.insert(out.factors.end(), rest.factors.begin(), rest.factors.end());
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

std::string GroupSummary::str() const {
  std::string s;
  if (rank == 0 && torsion.empty()) return "0";
  if (rank == 1) s = "Z";
  if (rank > 1) s = "Z^" + std::to_string(rank);
  for (auto t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(t);
  }
  return s;
}

HomologyResult homology(const ChainComplex& c) {
  const size_t top = c.dims.size() - 1;
  // check d∘d = 0
  for (size_t k = 2; k <= top; ++k) {
    const SparseMatrix& a = c.boundary[k - 1];
    const SparseMatrix& b = c.boundary[k];
    for (const auto& col : b.cols) {
      std::map<int, std::int64_t> image;
      for (const auto& [mid, v] : col) {
        for (const auto& [row, w] : a.cols[static_cast<size_t>(mid)]) {
          image[row] = checked_add(image[row], checked_mul(v, w));
        }
      }
      for (const auto& [row, v] : image) {
        (void)row;
        if (v != 0) {
          throw Error(ErrorCode::kNotAComplex, "boundary composite is nonzero");
        }
      }
    }
  }

  std::vector<SmithResult> snfs(top + 2);
  for (size_t k = 1; k <= top; ++k) snfs[k] = smith_normal_form(c.boundary[k]);
  snfs[0] = SmithResult{};       // d_0 = 0
  snfs[top + 1] = SmithResult{};  // nothing above

  HomologyResult h;
  for (size_t k = 0; k <= top; ++k) {
    GroupSummary g;
    g.rank = c.dims[k] - snfs[k].rank - snfs[k + 1].rank;
    for (auto f : snfs[k + 1].factors) {
      if (f > 1) g.torsion.push_back(f);
    }
    std::sort(g.torsion.begin(), g.torsion.end());
    h.groups.push_back(std::move(g));
  }
  return h;
}

}  // namespace polyfold
