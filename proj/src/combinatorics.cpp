#include "posprob/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace posprob {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.parts.begin(), a.parts.end(),
                                      b.parts.begin(), b.parts.end());
}

bool triangle_less(const Composition& a, const Composition& b) {
  const Partition pa = sort_to_partition(a), pb = sort_to_partition(b);
  if (pa.parts != pb.parts) return lex_less(pa, pb);
  return std::lexicographical_compare(a.parts.begin(), a.parts.end(),
                                      b.parts.begin(), b.parts.end());
}

namespace {

// Ascending-lex generation: shortest first part recursion with a cap keeps
// each prefix weakly decreasing after reversal; sorting afterwards is simpler
// and n stays small, so generate all and sort.
void gen_partitions(int n, int cap, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back({acc});
    return;
  }
  for (int first = std::min(n, cap); first >= 1; --first) {
    acc.push_back(first);
    gen_partitions(n - first, first, acc, out);
    acc.pop_back();
  }
}

void gen_compositions(int n, std::vector<int>& acc, std::vector<Composition>& out) {
  if (n == 0) {
    out.push_back({acc});
    return;
  }
  for (int first = 1; first <= n; ++first) {
    acc.push_back(first);
    gen_compositions(n - first, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n, acc, out);
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return lex_less(a, b); });
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> acc;
  gen_compositions(n, acc, out);
  std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
    return triangle_less(a, b);
  });
  return out;
}

Partition transpose(const Partition& lambda) {
  Partition out;
  if (lambda.parts.empty()) return out;
  for (int i = 1; i <= lambda.parts[0]; ++i) {
    int count = 0;
    for (int p : lambda.parts)
      if (p >= i) ++count;
    out.parts.push_back(count);
  }
  return out;
}

Partition sort_to_partition(const Composition& alpha) {
  Partition out{alpha.parts};
  std::sort(out.parts.begin(), out.parts.end(), std::greater<int>());
  return out;
}

std::set<int> set_of(const Composition& alpha) {
  std::set<int> s;
  int acc = 0;
  for (size_t i = 0; i + 1 < alpha.parts.size(); ++i) {
    acc += alpha.parts[i];
    s.insert(acc);
  }
  return s;
}

Composition comp_of(const std::set<int>& s, int n) {
  Composition out;
  int prev = 0;
  for (int x : s) {
    out.parts.push_back(x - prev);
    prev = x;
  }
  if (n > 0) out.parts.push_back(n - prev);  // s excludes n, so n - prev >= 1
  return out;
}

bool properly_refines(const Composition& beta, const Composition& alpha) {
  const std::set<int> sa = set_of(alpha), sb = set_of(beta);
  if (sa.size() >= sb.size()) return false;
  return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

namespace {
std::string parts_string(const std::vector<int>& parts) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}
}  // namespace

std::string to_string(const Partition& p) { return parts_string(p.parts); }
std::string to_string(const Composition& c) { return parts_string(c.parts); }

}  // namespace posprob
