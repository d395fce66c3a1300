// Partitions, compositions, their total orders, and the bijections between
// compositions and subsets. These index every basis in the library.
#pragma once

#include <set>
#include <string>
#include <vector>

namespace posprob {

// Weakly decreasing positive parts; empty only for n = 0.
struct Partition {
  std::vector<int> parts;
  int size() const;  // n, the sum of the parts
  bool operator==(const Partition&) const = default;
};

// Positive parts in a fixed order; empty only for n = 0.
struct Composition {
  std::vector<int> parts;
  int size() const;
  bool operator==(const Composition&) const = default;
};

// Total lexicographic order; a missing part compares below any positive part.
bool lex_less(const Partition& a, const Partition& b);

// Triangle order on compositions: compare the sorted partitions
// lexicographically, break ties lexicographically on the compositions.
bool triangle_less(const Composition& a, const Composition& b);

// All partitions of n in ascending lex order, length p(n).
std::vector<Partition> partitions_of(int n);

// All 2^{n-1} compositions of n in ascending triangle order.
std::vector<Composition> compositions_of(int n);

// Conjugate partition: transpose(l)[i] = #{j : l[j] >= i+1}. Involution.
Partition transpose(const Partition& lambda);

// Sort the parts weakly decreasing.
Partition sort_to_partition(const Composition& alpha);

// Partial sums {a1, a1+a2, ...} excluding n; subset of {1..n-1}.
std::set<int> set_of(const Composition& alpha);

// Inverse of set_of for subsets of {1..n-1}.
Composition comp_of(const std::set<int>& s, int n);

// True iff beta is a proper refinement of alpha:
// set_of(alpha) is a strict subset of set_of(beta).
bool properly_refines(const Composition& beta, const Composition& alpha);

std::string to_string(const Partition&);    // "(2,1,1)"
std::string to_string(const Composition&);  // "(1,2,1)"

}  // namespace posprob
