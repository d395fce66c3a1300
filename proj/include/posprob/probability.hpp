// The product formula: for a nonnegative unitriangular basis change the
// positivity probability is the product over rows of the inverse coefficient
// sums. Exact rationals throughout.
#pragma once

#include <optional>
#include <vector>

#include "posprob/numeric.hpp"
#include "posprob/transition.hpp"

namespace posprob {

struct ProbabilityResult {
  BasisPair pair;
  int n = 0;
  Rational value;               // product of the inverse factors, in (0,1]
  std::vector<BigInt> factors;  // per-row coefficient sums, factors[0] = 1
};

// Evaluates the product over the matrix rows. The matrix invariants guarantee
// every factor is a positive integer.
ProbabilityResult probability(const TransitionMatrix& T);

// The stated closed form for the fundamental-in-monomial pair:
// 1/((n-1)*2^(n-2)) for n >= 2, and 1 for n = 1 (dimension 0).
Rational fm_closed_form(int n);

// 1/2^(p(n)-1), an upper bound for the Schur-in-monomial probability.
Rational schur_monomial_upper_bound(int n);

// Default per-pair enumeration cap: partition-indexed pairs count p(n) labels,
// composition-indexed pairs count 2^(n-1).
int default_budget(BasisPair pair);

struct DecayRow {
  int n = 0;
  ProbabilityResult result;
};

struct DecayTable {
  BasisPair pair;
  std::vector<DecayRow> rows;          // n = 1 .. min(n_max, budget)
  std::optional<int> truncated_at;     // first n skipped over budget, if any
};

// Probabilities for n = 1..n_max, truncated at the budget; the computed rows
// are always returned.
DecayTable decay_table(BasisPair pair, int n_max, int budget);
DecayTable decay_table(BasisPair pair, int n_max);

std::string to_json(const ProbabilityResult& r);

}  // namespace posprob
