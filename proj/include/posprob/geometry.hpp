// Independent verification of the product formula: the slice-volume ratio by
// exact determinants, exact cone membership, and Monte Carlo sampling of the
// B-simplex.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posprob/numeric.hpp"
#include "posprob/probability.hpp"
#include "posprob/transition.hpp"

namespace posprob {

// Ratio vol(A slice)/vol(B slice), computed in the chart spanned by the
// B-simplex edge vectors v_1..v_d: each normalized A vertex minus A_0 is
// expressed in v coordinates and the two d x d determinants are evaluated by
// exact rational elimination. Equals the product formula value.
Rational volume_ratio_by_determinant(const TransitionMatrix& T);

// True iff sum_i b[i] B_i is A-positive: solves the unitriangular system by
// back-substitution and tests every coordinate for nonnegativity.
// Throws std::invalid_argument unless b has exactly dim() entries.
bool membership(const TransitionMatrix& T, const std::vector<Rational>& b);

struct MonteCarloReport {
  BasisPair pair;
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::uint64_t hits = 0;
  double estimate = 0.0;        // hits / samples
  double standard_error = 0.0;  // sqrt(estimate*(1-estimate)/samples)
  Rational exact;               // product formula value for reference
};

// Samples uniform points of the standard d-simplex in B coordinates via
// normalized unit exponentials, drawn as dyadic rationals with 64 fractional
// bits so the membership test stays exact. Deterministic for a fixed
// (seed, workers) pair: worker w draws its share from a sub-seeded generator.
MonteCarloReport monte_carlo(const TransitionMatrix& T, std::uint64_t samples,
                             std::uint64_t seed, int workers = 1);

std::string to_json(const MonteCarloReport& r);

}  // namespace posprob
