#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "posprob/geometry.hpp"
#include "posprob/probability.hpp"

using namespace posprob;

namespace {

std::vector<Rational> unit(int dim, int at) {
  std::vector<Rational> b(dim, 0);
  b[at] = 1;
  return b;
}

std::vector<Rational> as_rationals(const std::vector<BigInt>& row) {
  std::vector<Rational> b;
  b.reserve(row.size());
  for (const BigInt& a : row) b.emplace_back(a);
  return b;
}

}  // namespace

TEST_CASE("determinant ratio equals the product formula") {
  for (BasisPair p : kAllPairs)
    for (int n = 1; n <= 5; ++n) {
      const auto T = build(p, n);
      CHECK(volume_ratio_by_determinant(T) == probability(T).value);
    }
  const auto T6 = build(BasisPair::S_IN_M, 6);
  CHECK(volume_ratio_by_determinant(T6) == probability(T6).value);
}

TEST_CASE("membership by back-substitution") {
  SUBCASE("the shared first basis vector lies in every cone") {
    for (BasisPair p : kAllPairs)
      for (int n = 1; n <= 5; ++n) {
        const auto T = build(p, n);
        CHECK(membership(T, unit(T.dim(), 0)));
      }
  }

  SUBCASE("expansion rows and their positive combinations lie inside") {
    for (BasisPair p : kAllPairs)
      for (int n = 1; n <= 5; ++n) {
        const auto T = build(p, n);
        for (int j = 0; j < T.dim(); ++j) {
          auto b = as_rationals(T.coeff[j]);
          CHECK(membership(T, b));
          for (auto& x : b) x *= Rational(3, 7);
          CHECK(membership(T, b));
        }
        if (T.dim() >= 2) {
          auto b = as_rationals(T.coeff[0]);
          const auto c = as_rationals(T.coeff[T.dim() - 1]);
          for (int i = 0; i < T.dim(); ++i) b[i] += c[i] * Rational(5, 2);
          CHECK(membership(T, b));
        }
      }
  }

  SUBCASE("a later basis vector can fall outside") {
    // for the schur pair at degree 3 the middle unit vector needs
    // coordinates (-2, 1, 0)
    const auto T = build(BasisPair::S_IN_M, 3);
    CHECK_FALSE(membership(T, unit(3, 1)));
    CHECK_FALSE(membership(T, unit(3, 2)));
  }

  SUBCASE("identity matrix accepts every unit vector") {
    const auto T = build(BasisPair::QS_IN_F, 3);
    for (int i = 0; i < T.dim(); ++i) CHECK(membership(T, unit(T.dim(), i)));
  }

  SUBCASE("dimension mismatch throws") {
    const auto T = build(BasisPair::S_IN_M, 3);
    CHECK_THROWS_AS(membership(T, unit(2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(membership(T, unit(4, 0)), std::invalid_argument);
  }
}

TEST_CASE("monte carlo sampling") {
  SUBCASE("identity cone hits every sample") {
    const auto T = build(BasisPair::QS_IN_F, 3);
    const auto r = monte_carlo(T, 1000, 42, 1);
    CHECK(r.hits == 1000);
    CHECK(r.estimate == 1.0);
    CHECK(r.standard_error == 0.0);
    CHECK(r.exact == Rational(1));
  }

  SUBCASE("fixed seed reproduces exactly, including with threads") {
    const auto T = build(BasisPair::S_IN_M, 4);
    const auto a = monte_carlo(T, 5000, 977, 1);
    const auto b = monte_carlo(T, 5000, 977, 1);
    CHECK(a.hits == b.hits);
    const auto c = monte_carlo(T, 5000, 977, 4);
    const auto d = monte_carlo(T, 5000, 977, 4);
    CHECK(c.hits == d.hits);
    CHECK(c.samples == 5000);
    CHECK(c.workers == 4);
  }

  SUBCASE("report fields are consistent") {
    const auto T = build(BasisPair::H_IN_S, 3);
    const auto r = monte_carlo(T, 4096, 11, 3);
    CHECK(r.pair == BasisPair::H_IN_S);
    CHECK(r.n == 3);
    CHECK(r.samples == 4096);
    CHECK(r.seed == 11);
    CHECK(r.hits <= r.samples);
    CHECK(r.estimate ==
          doctest::Approx(static_cast<double>(r.hits) / 4096.0));
    CHECK(r.standard_error ==
          doctest::Approx(std::sqrt(r.estimate * (1.0 - r.estimate) / 4096.0)));
    CHECK(r.exact == Rational(1, 8));
  }

  SUBCASE("estimates land within three sigma of the exact value") {
    for (BasisPair p : kAllPairs) {
      const auto T = build(p, 3);
      const auto r = monte_carlo(T, 20000, 12345, 2);
      const double exact =
          numerator(r.exact).convert_to<double>() /
          denominator(r.exact).convert_to<double>();
      const double sigma = std::sqrt(exact * (1.0 - exact) / 20000.0);
      CHECK(std::fabs(r.estimate - exact) <= 3.0 * sigma + 1e-12);
    }
  }

  SUBCASE("invalid sample or worker counts throw") {
    const auto T = build(BasisPair::S_IN_M, 3);
    CHECK_THROWS_AS(monte_carlo(T, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo(T, 100, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo(T, 100, 1, -2), std::invalid_argument);
  }
}

TEST_CASE("json serialization of a sampling report") {
  const auto T = build(BasisPair::S_IN_M, 3);
  const auto r = monte_carlo(T, 2000, 7, 2);
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["pair"] == "s/m");
  CHECK(j["n"] == 3);
  CHECK(j["samples"] == 2000);
  CHECK(j["seed"] == 7);
  CHECK(j["workers"] == 2);
  CHECK(j["hits"] == r.hits);
  CHECK(j["estimate"].get<double>() == doctest::Approx(r.estimate));
  CHECK(j["stderr"].get<double>() == doctest::Approx(r.standard_error));
  CHECK(j["exact"] == "1/9");
}
