#include <doctest.h>

#include <cmath>
#include <random>

#include "nmetrics/dominance.hpp"
#include "nmetrics/utility.hpp"
#include "nmetrics/weights.hpp"

#include "test_support.hpp"

using namespace nmetrics;

TEST_CASE("weight vector invariants") {
  CHECK_NOTHROW(WeightVector({0.5, 0.5}));
  CHECK_NOTHROW(WeightVector({1.0, 0.0}));         // boundary of the simplex
  CHECK_NOTHROW(WeightVector({0.5, 0.5 + 5e-10}));  // inside tolerance
  CHECK_THROWS_AS(WeightVector({0.6, 0.6}), invariant_error);
  CHECK_THROWS_AS(WeightVector({-0.1, 1.1}), invariant_error);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{}), invariant_error);
}

TEST_CASE("linear utility") {
  const UtilityModel linear{};
  CHECK(utility(linear, ObjectiveVector{1.0, 2.0}, WeightVector{0.5, 0.5}) == 1.5);
  CHECK(utility(linear, ObjectiveVector{3.0, 7.0}, WeightVector{1.0, 0.0}) == 3.0);
  CHECK_THROWS_AS(utility(linear, ObjectiveVector{1.0}, WeightVector{0.5, 0.5}),
                  dimension_error);
}

TEST_CASE("chebycheff utility") {
  const UtilityModel cheb{UtilityKind::Chebycheff, ObjectiveVector{0.0, 0.0}};
  // max(0.5 * 2, 0.5 * 5)
  CHECK(utility(cheb, ObjectiveVector{2.0, 5.0}, WeightVector{0.5, 0.5}) == 2.5);
  // Deviations below the ideal clamp to zero.
  CHECK(utility(cheb, ObjectiveVector{-3.0, -1.0}, WeightVector{0.5, 0.5}) == 0.0);
  CHECK_THROWS_AS(utility(UtilityModel{UtilityKind::Chebycheff, {}}, ObjectiveVector{1.0, 1.0},
                          WeightVector{0.5, 0.5}),
                  invariant_error);
  CHECK_THROWS_AS(utility(UtilityModel{UtilityKind::Chebycheff, ObjectiveVector{0.0}},
                          ObjectiveVector{1.0, 1.0}, WeightVector{0.5, 0.5}),
                  dimension_error);
}

TEST_CASE("linear utility is homogeneous") {
  std::mt19937_64 gen(23);
  const UtilityModel linear{};
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = testsupport::random_points(1, 3, gen)[0];
    const double c = 3.0 * testsupport::uniform01(gen);
    std::vector<double> scaled = f;
    for (auto& v : scaled) v *= c;
    const WeightVector w = sample_weights(3, 1, gen())[0];
    CHECK(utility(linear, ObjectiveVector(scaled), w) ==
          doctest::Approx(c * utility(linear, ObjectiveVector(f), w)).epsilon(1e-12));
  }
}

TEST_CASE("utility is weakly monotone with respect to dominance") {
  std::mt19937_64 gen(29);
  const UtilityModel linear{};
  const UtilityModel cheb{UtilityKind::Chebycheff, ObjectiveVector{-0.5, -0.5, -0.5}};
  for (int trial = 0; trial < 500; ++trial) {
    const auto base = testsupport::random_points(1, 3, gen)[0];
    auto worse = base;
    for (auto& v : worse) v += testsupport::uniform01(gen);  // u <= v componentwise
    const ObjectiveVector u{base};
    const ObjectiveVector v{worse};
    const WeightVector w = sample_weights(3, 1, gen())[0];
    CHECK(utility(linear, u, w) <= utility(linear, v, w));
    CHECK(utility(cheb, u, w) <= utility(cheb, v, w));
  }
}

TEST_CASE("sampled weights live on the simplex and are reproducible") {
  const WeightSampleSet first = sample_weights(2, 100, 42);
  const WeightSampleSet second = sample_weights(2, 100, 42);
  CHECK(first.samples() == second.samples());
  CHECK(first.seed() == 42);
  for (const WeightVector& w : first.samples()) {
    CHECK(w[0] >= 0.0);
    CHECK(w[0] <= 1.0);
    CHECK(w[1] == doctest::Approx(1.0 - w[0]).epsilon(1e-12));
  }
  CHECK(sample_weights(2, 100, 43).samples() != first.samples());
  CHECK_THROWS_AS(sample_weights(1, 10, 0), invariant_error);
}

TEST_CASE("sampled weights are uniform on the simplex") {
  const std::size_t m = 100000;
  const WeightSampleSet weights = sample_weights(3, m, 7);
  double sums[3] = {0.0, 0.0, 0.0};
  for (const WeightVector& w : weights.samples()) {
    for (std::size_t k = 0; k < 3; ++k) {
      sums[k] += w[k];
    }
  }
  for (double s : sums) {
    CHECK(s / static_cast<double>(m) == doctest::Approx(1.0 / 3.0).epsilon(0.03));
  }
}

TEST_CASE("weight grid enumerates the simplex lattice in lexicographic order") {
  const WeightSampleSet grid = weight_grid(2, 2);
  REQUIRE(grid.size() == 3);
  CHECK(grid[0] == WeightVector{0.0, 1.0});
  CHECK(grid[1] == WeightVector{0.5, 0.5});
  CHECK(grid[2] == WeightVector{1.0, 0.0});

  CHECK(weight_grid(2, 4).size() == 5);
  CHECK(weight_grid(3, 3).size() == 10);
  CHECK(weight_grid(3, 3).size() == oracles::lattice_count(3, 3));
  CHECK(weight_grid(4, 5).size() == oracles::lattice_count(4, 5));
  CHECK_THROWS_AS(weight_grid(1, 3), invariant_error);
  CHECK_THROWS_AS(weight_grid(2, 0), invariant_error);
}

TEST_CASE("default ideal point sits just below the componentwise minimum") {
  const std::vector<ObjectiveVector> points{{1.0, 5.0}, {2.0, -1.0}};
  const ObjectiveVector mins = componentwise_min(points);
  CHECK(mins == ObjectiveVector{1.0, -1.0});
  const UtilityModel resolved =
      with_default_ideal_point(UtilityModel{UtilityKind::Chebycheff, {}}, points);
  REQUIRE(resolved.ideal_point.has_value());
  CHECK((*resolved.ideal_point)[0] == doctest::Approx(1.0 - kIdealPointMargin));
  CHECK((*resolved.ideal_point)[1] == doctest::Approx(-1.0 - kIdealPointMargin));
  // Linear models are left untouched.
  CHECK_FALSE(with_default_ideal_point(UtilityModel{}, points).ideal_point.has_value());
}
