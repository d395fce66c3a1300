#include "posprob/probability.hpp"

#include <stdexcept>

#include <json.hpp>

namespace posprob {

ProbabilityResult probability(const TransitionMatrix& T) {
  ProbabilityResult r;
  r.pair = T.pair;
  r.n = T.n;
  r.factors = coefficient_sums(T);
  BigInt denom = 1;
  for (const BigInt& f : r.factors) denom *= f;
  r.value = Rational(1, denom);
  return r;
}

Rational fm_closed_form(int n) {
  if (n <= 0) throw std::invalid_argument("fm_closed_form: n must be >= 1");
  if (n == 1) return 1;
  BigInt denom = BigInt(n - 1) << (n - 2);
  return Rational(1, denom);
}

Rational schur_monomial_upper_bound(int n) {
  const auto count = partitions_of(n).size();
  return Rational(1, BigInt(1) << (count - 1));
}

int default_budget(BasisPair pair) { return partition_indexed(pair) ? 12 : 8; }

DecayTable decay_table(BasisPair pair, int n_max, int budget) {
  DecayTable table;
  table.pair = pair;
  for (int n = 1; n <= n_max; ++n) {
    if (n > budget) {
      table.truncated_at = n;
      break;
    }
    table.rows.push_back({n, probability(build(pair, n))});
  }
  return table;
}

DecayTable decay_table(BasisPair pair, int n_max) {
  return decay_table(pair, n_max, default_budget(pair));
}

std::string to_json(const ProbabilityResult& r) {
  nlohmann::json j;
  j["pair"] = pair_token(r.pair);
  j["n"] = r.n;
  j["numerator"] = numerator(r.value).str();
  j["denominator"] = denominator(r.value).str();
  auto factors = nlohmann::json::array();
  for (const BigInt& f : r.factors) factors.push_back(f.str());
  j["factors"] = factors;
  return j.dump();
}

}  // namespace posprob
