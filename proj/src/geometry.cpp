#include "posprob/geometry.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace posprob {

namespace {

// |det| by fraction-free-ish rational Gaussian elimination with pivoting.
Rational abs_determinant(std::vector<std::vector<Rational>> m) {
  const size_t d = m.size();
  Rational det = 1;
  for (size_t col = 0; col < d; ++col) {
    size_t pivot = col;
    while (pivot < d && m[pivot][col] == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != col) std::swap(m[pivot], m[col]);  // sign irrelevant for |det|
    det *= m[col][col];
    const Rational inv = 1 / m[col][col];
    for (size_t row = col + 1; row < d; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] * inv;
      for (size_t k = col; k < d; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return abs(det);
}

}  // namespace

Rational volume_ratio_by_determinant(const TransitionMatrix& T) {
  const int d = T.dim() - 1;
  if (d == 0) return 1;
  const auto sums = coefficient_sums(T);
  // w_j in v coordinates: component i is a_i^(j) / S_j, for i, j = 1..d
  std::vector<std::vector<Rational>> w(d, std::vector<Rational>(d, 0));
  std::vector<std::vector<Rational>> v(d, std::vector<Rational>(d, 0));
  for (int j = 1; j <= d; ++j) {
    const Rational inv_sum = Rational(1, sums[j]);
    for (int i = 1; i <= d; ++i) {
      w[i - 1][j - 1] = Rational(T.coeff[j][i]) * inv_sum;
      v[i - 1][j - 1] = (i == j) ? 1 : 0;
    }
  }
  return abs_determinant(std::move(w)) / abs_determinant(std::move(v));
}

bool membership(const TransitionMatrix& T, const std::vector<Rational>& b) {
  const int d1 = T.dim();
  if (static_cast<int>(b.size()) != d1)
    throw std::invalid_argument("membership: expected " + std::to_string(d1) +
                                " coordinates");
  // b = T^t a with unit diagonal: a_j = b_j - sum_{k>j} a_k * coeff[k][j]
  std::vector<Rational> a(d1);
  for (int j = d1 - 1; j >= 0; --j) {
    Rational acc = b[j];
    for (int k = j + 1; k < d1; ++k)
      if (T.coeff[k][j] != 0) acc -= a[k] * Rational(T.coeff[k][j]);
    if (acc < 0) return false;
    a[j] = acc;
  }
  return true;
}

namespace {

// One unit-exponential variate as a dyadic rational with 64 fractional bits,
// returned as the integer numerator (denominator 2^64 implied). The implied
// scale is shared by every coordinate, and membership is scale invariant.
BigInt dyadic_exponential(std::mt19937_64& rng) {
  const std::uint64_t u = rng();
  // U in (0, 1]: avoids log(0); e = -ln U is in [0, 64 ln 2)
  const long double U =
      (static_cast<long double>(u) + 1.0L) * 0x1p-64L;
  const long double e = -std::log(U);
  const long double hi = std::floor(e);
  long double frac = e - hi;
  if (frac < 0.0L) frac = 0.0L;
  std::uint64_t lo;
  if (frac >= 1.0L) {
    lo = ~0ULL;
  } else {
    const long double scaled = std::ldexp(frac, 64);
    lo = (scaled >= 0x1p64L) ? ~0ULL : static_cast<std::uint64_t>(scaled);
  }
  BigInt out = static_cast<std::uint64_t>(hi);
  out <<= 64;
  out += lo;
  return out;
}

// Exact membership on the integer numerators: back-substitution never divides
// (unit diagonal), so it stays in integers.
bool integer_membership(const TransitionMatrix& T, const std::vector<BigInt>& b) {
  const int d1 = T.dim();
  std::vector<BigInt> a(d1);
  for (int j = d1 - 1; j >= 0; --j) {
    BigInt acc = b[j];
    for (int k = j + 1; k < d1; ++k)
      if (T.coeff[k][j] != 0) acc -= a[k] * T.coeff[k][j];
    if (acc < 0) return false;
    a[j] = std::move(acc);
  }
  return true;
}

std::uint64_t run_worker(const TransitionMatrix& T, std::uint64_t count,
                         std::uint64_t seed, int worker) {
  // seed_seq keeps 32 bits per value, so the 64-bit seed is split
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker)};
  std::mt19937_64 rng(seq);
  const int d1 = T.dim();
  std::vector<BigInt> b(d1);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (int i = 0; i < d1; ++i) b[i] = dyadic_exponential(rng);
    if (integer_membership(T, b)) ++hits;
  }
  return hits;
}

}  // namespace

MonteCarloReport monte_carlo(const TransitionMatrix& T, std::uint64_t samples,
                             std::uint64_t seed, int workers) {
  if (samples < 1) throw std::invalid_argument("monte_carlo: samples must be >= 1");
  if (workers < 1) throw std::invalid_argument("monte_carlo: workers must be >= 1");

  MonteCarloReport report;
  report.pair = T.pair;
  report.n = T.n;
  report.samples = samples;
  report.seed = seed;
  report.workers = workers;
  report.exact = probability(T).value;

  std::vector<std::uint64_t> hits(workers, 0);
  std::vector<std::thread> pool;
  const std::uint64_t base = samples / workers, extra = samples % workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t count = base + (static_cast<std::uint64_t>(w) < extra);
    pool.emplace_back([&, w, count] { hits[w] = run_worker(T, count, seed, w); });
  }
  for (auto& t : pool) t.join();
  for (std::uint64_t h : hits) report.hits += h;

  report.estimate = static_cast<double>(report.hits) / static_cast<double>(samples);
  report.standard_error = std::sqrt(report.estimate * (1.0 - report.estimate) /
                                    static_cast<double>(samples));
  return report;
}

std::string to_json(const MonteCarloReport& r) {
  nlohmann::json j;
  j["pair"] = pair_token(r.pair);
  j["n"] = r.n;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["workers"] = r.workers;
  j["hits"] = r.hits;
  j["estimate"] = r.estimate;
  j["stderr"] = r.standard_error;
  j["exact"] = fraction_string(r.exact);
  return j.dump();
}

}  // namespace posprob
