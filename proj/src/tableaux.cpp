#include "posprob/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace posprob {

namespace {

void require_same_size(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": size mismatch");
}

// Row-major SSYT filling counter. At each box the value range is forced by
// the left neighbor (weak increase) and the upper neighbor (strict increase);
// the content multiset bounds multiplicities.
struct SsytCounter {
  const std::vector<int>& sh;
  int maxv;
  std::vector<int> rem;
  std::vector<std::vector<int>> g;
  BigInt count = 0;

  explicit SsytCounter(const std::vector<int>& shape, const std::vector<int>& content)
      : sh(shape), maxv(static_cast<int>(content.size())), rem(content) {
    g.resize(sh.size());
    for (size_t r = 0; r < sh.size(); ++r) g[r].assign(sh[r], 0);
  }

  void fill(size_t r, size_t c) {
    if (r == sh.size()) {
      ++count;
      return;
    }
    const size_t nr = (static_cast<int>(c) + 1 < sh[r]) ? r : r + 1;
    const size_t nc = (nr == r) ? c + 1 : 0;
    int lo = 1;
    if (c > 0) lo = std::max(lo, g[r][c - 1]);
    if (r > 0) lo = std::max(lo, g[r - 1][c] + 1);
    for (int v = lo; v <= maxv; ++v) {
      if (rem[v - 1] == 0) continue;
      --rem[v - 1];
      g[r][c] = v;
      fill(nr, nc);
      ++rem[v - 1];
    }
  }

  BigInt run() {
    if (sh.empty()) return 1;
    fill(0, 0);
    return count;
  }
};

// Row-major SSCT filling enumerator. Constraints checked at placement time:
// weak decrease along the row, strict increase down the first column, and the
// triple rule against the fully placed earlier rows. `done` sees the complete
// grid.
struct SsctEnumerator {
  const std::vector<int>& sh;
  int maxv;
  std::vector<int> rem;
  std::vector<std::vector<int>> g;
  std::function<void(const std::vector<std::vector<int>>&)> done;

  SsctEnumerator(const std::vector<int>& shape, std::vector<int> content,
                 std::function<void(const std::vector<std::vector<int>>&)> fn)
      : sh(shape), maxv(static_cast<int>(content.size())), rem(std::move(content)),
        done(std::move(fn)) {
    g.resize(sh.size());
    for (size_t r = 0; r < sh.size(); ++r) g[r].assign(sh[r], 0);
  }

  bool admissible(size_t r, size_t c, int v) const {
    if (c > 0 && v > g[r][c - 1]) return false;   // rows weakly decrease
    if (c == 0 && r > 0 && v <= g[r - 1][0]) return false;  // first column strict
    if (c > 0) {
      // triple rule with this box in the lower-row role: for i < r, if the box
      // (i, c-1) exists and v <= g[i][c-1], then (i, c) must exist with
      // v < g[i][c].
      for (size_t i = 0; i < r; ++i) {
        if (static_cast<int>(c) - 1 >= sh[i]) continue;
        if (v <= g[i][c - 1]) {
          if (static_cast<int>(c) >= sh[i]) return false;
          if (!(v < g[i][c])) return false;
        }
      }
    }
    return true;
  }

  void fill(size_t r, size_t c) {
    if (r == sh.size()) {
      done(g);
      return;
    }
    const size_t nr = (static_cast<int>(c) + 1 < sh[r]) ? r : r + 1;
    const size_t nc = (nr == r) ? c + 1 : 0;
    for (int v = 1; v <= maxv; ++v) {
      if (rem[v - 1] == 0 || !admissible(r, c, v)) continue;
      --rem[v - 1];
      g[r][c] = v;
      fill(nr, nc);
      ++rem[v - 1];
    }
  }

  void run() {
    if (sh.empty()) {
      done(g);
      return;
    }
    fill(0, 0);
  }
};

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// Column-by-column count of (0,1)-matrices: the state is the multiset of
// remaining row sums, so symmetric rows collapse and the number of states
// stays small.
struct ZeroOneCounter {
  const std::vector<int>& cols;
  std::map<std::pair<std::vector<int>, size_t>, BigInt> memo;

  explicit ZeroOneCounter(const std::vector<int>& col_sums) : cols(col_sums) {}

  BigInt place(std::vector<int> remaining, size_t j) {
    std::sort(remaining.begin(), remaining.end(), std::greater<int>());
    if (j == cols.size()) {
      for (int r : remaining)
        if (r != 0) return 0;
      return 1;
    }
    const auto key = std::make_pair(remaining, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // distinct positive remaining values with multiplicities
    std::vector<std::pair<int, int>> groups;
    for (int r : remaining) {
      if (r == 0) continue;
      if (!groups.empty() && groups.back().first == r)
        ++groups.back().second;
      else
        groups.emplace_back(r, 1);
    }

    BigInt total = 0;
    std::vector<int> take(groups.size(), 0);
    const int need = cols[j];
    std::function<void(size_t, int, BigInt)> choose = [&](size_t gi, int left,
                                                          BigInt ways) {
      if (left == 0) {
        std::vector<int> next;
        next.reserve(remaining.size());
        for (size_t k = 0; k < groups.size(); ++k) {
          for (int t = 0; t < take[k]; ++t) next.push_back(groups[k].first - 1);
          for (int t = take[k]; t < groups[k].second; ++t)
            next.push_back(groups[k].first);
        }
        for (int r : remaining)
          if (r == 0) next.push_back(0);
        total += ways * place(std::move(next), j + 1);
        return;
      }
      if (gi == groups.size()) return;
      const int cap = std::min(groups[gi].second, left);
      for (int t = 0; t <= cap; ++t) {
        take[gi] = t;
        choose(gi + 1, left - t, ways * binomial(groups[gi].second, t));
      }
      take[gi] = 0;
    };
    choose(0, need, 1);

    memo[key] = total;
    return total;
  }
};

std::vector<int> descent_composition(const std::vector<std::vector<int>>& g, int n) {
  if (n == 0) return {};
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

}  // namespace

BigInt kostka(const Partition& shape, const Partition& content) {
  require_same_size(shape.size(), content.size(), "kostka");
  SsytCounter counter(shape.parts, content.parts);
  return counter.run();
}

BigInt kostka_row_sum(const Partition& shape) {
  BigInt total = 0;
  for (const auto& mu : partitions_of(shape.size())) total += kostka(shape, mu);
  return total;
}

BigInt kostka_col_sum(const Partition& content) {
  BigInt total = 0;
  for (const auto& mu : partitions_of(content.size())) total += kostka(mu, content);
  return total;
}

BigInt zero_one_count(const Partition& rows, const Partition& cols) {
  require_same_size(rows.size(), cols.size(), "zero_one_count");
  ZeroOneCounter counter(cols.parts);
  return counter.place(rows.parts, 0);
}

BigInt zero_one_row_sum(const Partition& rows) {
  BigInt total = 0;
  for (const auto& mu : partitions_of(rows.size())) total += zero_one_count(rows, mu);
  return total;
}

BigInt ssct_count(const Composition& shape, const Composition& content) {
  require_same_size(shape.size(), content.size(), "ssct_count");
  BigInt count = 0;
  // content is fixed exactly by the multiplicity bounds plus the box total
  SsctEnumerator e(shape.parts, content.parts,
                   [&](const std::vector<std::vector<int>>&) { ++count; });
  e.run();
  return count;
}

BigInt ssct_row_sum(const Composition& shape) {
  BigInt total = 0;
  for (const auto& beta : compositions_of(shape.size()))
    total += ssct_count(shape, beta);
  return total;
}

BigInt sct_count(const Composition& shape, const Composition& descent) {
  require_same_size(shape.size(), descent.size(), "sct_count");
  const int n = shape.size();
  BigInt count = 0;
  SsctEnumerator e(shape.parts, std::vector<int>(n, 1),
                   [&](const std::vector<std::vector<int>>& g) {
                     if (descent_composition(g, n) == descent.parts) ++count;
                   });
  e.run();
  return count;
}

BigInt sct_total(const Composition& shape) {
  BigInt count = 0;
  SsctEnumerator e(shape.parts, std::vector<int>(shape.size(), 1),
                   [&](const std::vector<std::vector<int>>&) { ++count; });
  e.run();
  return count;
}

bool is_single_sct_shape(const Composition& alpha) {
  // tail = 1^{e_1} 2 1^{e_2} ... 2 1^{e_k}: ones and twos, starting with a 1,
  // never two 2s adjacent (a trailing 2 is e_k = 0)
  const auto tail_ok = [](auto begin, auto end) {
    if (begin == end) return true;
    if (*begin != 1) return false;
    int prev = 1;
    for (auto it = begin; it != end; ++it) {
      if (*it != 1 && *it != 2) return false;
      if (*it == 2 && prev == 2) return false;
      prev = *it;
    }
    return true;
  };
  const auto& p = alpha.parts;
  if (tail_ok(p.begin(), p.end())) return true;  // leading part absent
  return !p.empty() && tail_ok(p.begin() + 1, p.end());
}

}  // namespace posprob
