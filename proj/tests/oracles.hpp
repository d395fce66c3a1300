// Independent naive oracles used only by tests. Nothing here calls the
// library's counting code; generation is generate-all-and-filter on purpose,
// bounded to small n by the callers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// Euler's pentagonal-number recurrence for the partition counts.
inline std::vector<long long> partition_counts(int n_max) {
  std::vector<long long> p(n_max + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    long long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      const long long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) total += sign * p[n - g1];
      if (g2 <= n) total += sign * p[n - g2];
    }
    p[n] = total;
  }
  return p;
}

// All weakly decreasing positive sequences summing to n, in no special order.
inline void gen_partitions(int n, int cap, std::vector<int>& acc,
                           std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(acc);
    return;
  }
  for (int f = std::min(n, cap); f >= 1; --f) {
    acc.push_back(f);
    gen_partitions(n - f, f, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  gen_partitions(n, n, acc, out);
  return out;
}

inline void gen_compositions(int n, std::vector<int>& acc,
                             std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(acc);
    return;
  }
  for (int f = 1; f <= n; ++f) {
    acc.push_back(f);
    gen_compositions(n - f, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<int>> all_compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  gen_compositions(n, acc, out);
  return out;
}

// Grid = rows of values, row i has shape[i] entries.
using Grid = std::vector<std::vector<int>>;

inline std::vector<int> content_of(const Grid& g) {
  int mx = 0;
  for (const auto& row : g)
    for (int v : row) mx = std::max(mx, v);
  std::vector<int> c(mx, 0);
  for (const auto& row : g)
    for (int v : row) ++c[v - 1];
  return c;
}

// SSYT rules: rows weakly increase left to right, columns strictly increase
// top to bottom.
inline bool is_ssyt(const Grid& g) {
  for (size_t r = 0; r < g.size(); ++r)
    for (size_t c = 0; c < g[r].size(); ++c) {
      if (c > 0 && g[r][c] < g[r][c - 1]) return false;
      if (r > 0) {
        if (c >= g[r - 1].size()) return false;  // not a Young diagram stack
        if (g[r][c] <= g[r - 1][c]) return false;
      }
    }
  return true;
}

// SSCT rules: rows weakly decrease left to right, the first column strictly
// increases top to bottom, and the triple rule: for rows i < j and a box at
// (j,m) with m >= 2, if the box (i,m-1) exists and g[j][m] <= g[i][m-1], then
// the box (i,m) must exist with g[j][m] < g[i][m].
inline bool is_ssct(const Grid& g) {
  for (size_t r = 0; r < g.size(); ++r)
    for (size_t c = 1; c < g[r].size(); ++c)
      if (g[r][c] > g[r][c - 1]) return false;
  for (size_t r = 1; r < g.size(); ++r)
    if (g[r][0] <= g[r - 1][0]) return false;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      for (size_t m = 1; m < g[j].size(); ++m) {
        if (m - 1 >= g[i].size()) continue;
        if (g[j][m] <= g[i][m - 1]) {
          if (m >= g[i].size()) return false;
          if (!(g[j][m] < g[i][m])) return false;
        }
      }
  return true;
}

// Every filling of `shape` with entries in 1..max_entry.
template <typename Fn>
inline void for_each_grid(const std::vector<int>& shape, int max_entry, Fn&& fn) {
  const int boxes = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> flat(boxes, 1);
  while (true) {
    Grid g;
    int at = 0;
    for (int len : shape) {
      g.emplace_back(flat.begin() + at, flat.begin() + at + len);
      at += len;
    }
    fn(g);
    int i = boxes - 1;
    while (i >= 0 && flat[i] == max_entry) flat[i--] = 1;
    if (i < 0) break;
    ++flat[i];
  }
}

inline long long count_ssyt(const std::vector<int>& shape,
                            const std::vector<int>& content) {
  long long count = 0;
  for_each_grid(shape, static_cast<int>(content.size()), [&](const Grid& g) {
    if (is_ssyt(g) && content_of(g) == content) ++count;
  });
  return count;
}

inline long long count_ssct(const std::vector<int>& shape,
                            const std::vector<int>& content) {
  long long count = 0;
  for_each_grid(shape, static_cast<int>(content.size()), [&](const Grid& g) {
    if (is_ssct(g) && content_of(g) == content) ++count;
  });
  return count;
}

// Descent composition of a standard filling under the convention
// des = { i : column(i+1) >= column(i) }, columns numbered from 1.
inline std::vector<int> descent_composition(const Grid& g, int n) {
  std::vector<int> col(n + 1, 0);
  for (const auto& row : g)
    for (size_t c = 0; c < row.size(); ++c) col[row[c]] = static_cast<int>(c) + 1;
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i < n; ++i)
    if (col[i + 1] >= col[i]) {
      parts.push_back(i - prev);
      prev = i;
    }
  parts.push_back(n - prev);
  return parts;
}

// All SCTs of the shape: SSCTs whose entries are exactly 1..n once each.
inline std::vector<Grid> all_sct(const std::vector<int>& shape) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<Grid> out;
  for_each_grid(shape, n, [&](const Grid& g) {
    std::vector<bool> seen(n + 1, false);
    for (const auto& row : g)
      for (int v : row) {
        if (seen[v]) return;
        seen[v] = true;
      }
    if (is_ssct(g)) out.push_back(g);
  });
  return out;
}

// (0,1)-matrices with the given row and column sums, by full bitmask sweep.
inline long long count_zero_one(const std::vector<int>& rows,
                                const std::vector<int>& cols) {
  const int r = static_cast<int>(rows.size()), c = static_cast<int>(cols.size());
  const int cells = r * c;
  long long count = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << cells); ++mask) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      int s = 0;
      for (int j = 0; j < c; ++j) s += (mask >> (i * c + j)) & 1;
      if (s != rows[i]) ok = false;
    }
    for (int j = 0; j < c && ok; ++j) {
      int s = 0;
      for (int i = 0; i < r; ++i) s += (mask >> (i * c + j)) & 1;
      if (s != cols[j]) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
