// Ordered unitriangular expansions A_j = sum_{i<=j} a_i^(j) B_i for the seven
// supported basis pairs. The stored order exists to witness unitriangularity;
// the probability product itself is order independent.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "posprob/combinatorics.hpp"
#include "posprob/numeric.hpp"

namespace posprob {

enum class BasisPair {
  S_IN_M,   // Schur in monomial, Kostka coefficients
  H_IN_S,   // complete homogeneous in Schur
  E_IN_S,   // elementary in Schur (same numbers as H_IN_S, columns conjugated)
  E_IN_M,   // elementary in monomial, (0,1)-matrix counts
  QS_IN_M,  // quasisymmetric Schur in monomial quasisymmetric
  QS_IN_F,  // quasisymmetric Schur in fundamental
  F_IN_M,   // fundamental in monomial quasisymmetric, refinement indicator
};

constexpr BasisPair kAllPairs[] = {BasisPair::S_IN_M,  BasisPair::H_IN_S,
                                   BasisPair::E_IN_S,  BasisPair::E_IN_M,
                                   BasisPair::QS_IN_M, BasisPair::QS_IN_F,
                                   BasisPair::F_IN_M};

// Partition-indexed pairs enumerate p(n) labels; the rest enumerate 2^{n-1}.
bool partition_indexed(BasisPair pair);

// Command-line token: "s/m", "h/s", "e/s", "e/m", "qs/M", "qs/F", "F/M".
std::string pair_token(BasisPair pair);
std::optional<BasisPair> parse_pair(const std::string& token);

// Raised when an assembled matrix fails the unit-diagonal or triangularity
// check; names the first offending entry.
struct TriangularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TransitionMatrix {
  BasisPair pair;
  int n = 0;
  // Row labels (the A side), index 0 = A_0 = B_0. Entries are the parts of a
  // partition or a composition depending on the pair.
  std::vector<std::vector<int>> labels;
  // When set, column i carries the conjugate of labels[i] (the B side of the
  // elementary-basis pairs); otherwise columns share the row labels.
  bool cols_transposed = false;
  // coeff[j][i] = a_i^(j), square with zeros above the diagonal.
  std::vector<std::vector<BigInt>> coeff;

  int dim() const { return static_cast<int>(labels.size()); }
  std::vector<int> col_label(int i) const;
  std::string row_label_string(int j) const;
  std::string col_label_string(int i) const;

  // Checks unit diagonal, triangularity, and nonnegativity; throws
  // TriangularityError naming the first violation.
  void verify() const;

  // Human-readable note on the ordering convention used for this pair.
  std::string ordering_note() const;
};

// Assembles the matrix for the pair at degree n and verifies it.
TransitionMatrix build(BasisPair pair, int n);

// Per-row coefficient sums sum_{i<=j} a_i^(j); every entry >= 1.
std::vector<BigInt> coefficient_sums(const TransitionMatrix& T);

std::string to_json(const TransitionMatrix& T);

}  // namespace posprob
