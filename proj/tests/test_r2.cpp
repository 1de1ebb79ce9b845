#include <doctest.h>

#include <cmath>
#include <random>

#include "nmetrics/r2.hpp"

#include "test_support.hpp"

using namespace nmetrics;

TEST_CASE("r2 with corner weights picks corner points") {
  const std::vector<ObjectiveVector> values{{0.0, 1.0}, {1.0, 0.0}};
  const WeightSampleSet corners({WeightVector{1.0, 0.0}, WeightVector{0.0, 1.0}});
  const R2Result result = r2(values, corners);
  CHECK(result.value == 0.0);
  // All weight on f1 favours the point with the smallest f1, and vice versa.
  CHECK(result.per_sample[0].solution_index == 0);
  CHECK(result.per_sample[1].solution_index == 1);
}

TEST_CASE("r2 of a single solution is its utility") {
  const std::vector<ObjectiveVector> values{{2.0, 2.0}};
  CHECK(r2(values, WeightSampleSet({WeightVector{0.5, 0.5}})).value == 2.0);
  // Any weights summing to one give the same value.
  CHECK(r2(values, sample_weights(2, 50, 3)).value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("r2 input validation") {
  const WeightSampleSet weights = sample_weights(2, 4, 1);
  CHECK_THROWS_AS(r2(std::vector<ObjectiveVector>{}, weights), invariant_error);
  CHECK_THROWS_AS(r2(std::vector<ObjectiveVector>{{1.0, 2.0, 3.0}}, weights), dimension_error);
}

TEST_CASE("r2 matches the exhaustive per-weight oracle") {
  std::mt19937_64 gen(31);
  const auto raw = testsupport::random_points(10, 2, gen);
  const WeightSampleSet weights = sample_weights(2, 1000, 5);
  const R2Result result = r2(testsupport::to_vectors(raw), weights);
  const double expected = oracles::r2_linear(raw, testsupport::weights_to_raw(weights));
  CHECK(result.value == doctest::Approx(expected).epsilon(1e-14));
  // Per-sample: each recorded utility is the brute-force minimum for its
  // weight vector.
  const auto raw_weights = testsupport::weights_to_raw(weights);
  for (const auto& record : result.per_sample) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& point : raw) {
      best = std::min(best, oracles::linear_utility(point, raw_weights[record.weight_index]));
    }
    CHECK(record.utility == best);
  }
  // The result invariant: value is the mean of the recorded utilities.
  double sum = 0.0;
  for (const auto& record : result.per_sample) {
    sum += record.utility;
  }
  CHECK(result.value == doctest::Approx(sum / weights.size()).epsilon(1e-12));
}

TEST_CASE("r2 is permutation invariant") {
  std::mt19937_64 gen(37);
  auto raw = testsupport::random_points(8, 2, gen);
  const WeightSampleSet weights = sample_weights(2, 200, 9);
  const double before = r2(testsupport::to_vectors(raw), weights).value;
  std::shuffle(raw.begin(), raw.end(), gen);
  CHECK(r2(testsupport::to_vectors(raw), weights).value == before);
}

TEST_CASE("noise-free n_r2 collapses to r2") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto raw = testsupport::random_points(12, 2, gen);
    const SolutionSet set = testsupport::noise_free_set(raw);
    const WeightSampleSet weights = sample_weights(2, 100, 100 + trial);
    CHECK(n_r2(set, weights).value == r2(set.true_values(), weights).value);
    const UtilityModel cheb{UtilityKind::Chebycheff, {}};
    CHECK(n_r2(set, weights, cheb).value == r2(set.true_values(), weights, cheb).value);
  }
}

TEST_CASE("n_r2 selects on estimates and scores on true values") {
  // Two solutions whose estimated values are swapped relative to the truth:
  // the decision maker is lured to the wrong one.
  const SolutionSet set = SolutionSet::from_columns(
      {"s1", "s2"},
      {ObjectiveVector{1.0, 9.0}, ObjectiveVector{3.0, 9.0}},
      {ObjectiveVector{3.0, 9.0}, ObjectiveVector{1.0, 9.0}});
  const WeightSampleSet weights({WeightVector{1.0, 0.0}});
  const R2Result noisy = n_r2(set, weights);
  CHECK(noisy.per_sample[0].solution_index == 1);  // perceived utility 1
  CHECK(noisy.value == 3.0);                       // realised true utility
  CHECK(r2(set.true_values(), weights).value == 1.0);
}

TEST_CASE("selecting on estimates never beats the true optimum") {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 50; ++trial) {
    const auto raw = testsupport::random_points(10, 2, gen);
    const SolutionSet set = testsupport::noisy_set(raw, 0.2, gen);
    const WeightSampleSet weights = sample_weights(2, 500, 200 + trial);
    const R2Result noisy = n_r2(set, weights);
    const R2Result ideal = r2(set.true_values(), weights);
    CHECK(noisy.value >= ideal.value);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      CHECK(noisy.per_sample[i].utility >= ideal.per_sample[i].utility);
    }
  }
}

TEST_CASE("estimated-dominated additions never change linear selections") {
  std::mt19937_64 gen(47);
  for (int trial = 0; trial < 50; ++trial) {
    const auto raw = testsupport::random_points(8, 2, gen);
    SolutionSet set = testsupport::noisy_set(raw, 0.1, gen);
    const WeightSampleSet weights = sample_weights(2, 100, 300 + trial);
    const R2Result before = n_r2(set, weights);

    // Append a solution whose estimates are dominated by an existing member.
    auto solutions = set.solutions();
    const std::size_t donor = gen() % solutions.size();
    std::vector<double> estimated = solutions[donor].estimated_values.values();
    estimated[gen() % 2] += 0.5 + testsupport::uniform01(gen);
    solutions.push_back(EvaluatedSolution{"extra", ObjectiveVector{-10.0, -10.0},
                                          ObjectiveVector(estimated)});
    const R2Result after = n_r2(SolutionSet(solutions), weights);

    CHECK(after.value == before.value);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      CHECK(after.per_sample[i].solution_index == before.per_sample[i].solution_index);
    }
  }
}

TEST_CASE("analytic r2: hand-integrable cases") {
  // integral of min(lambda, 1 - lambda) over [0, 1]
  CHECK(analytic_r2_linear_2d(std::vector<ObjectiveVector>{{0.0, 1.0}, {1.0, 0.0}}) ==
        doctest::Approx(0.25).epsilon(1e-15));
  for (double c : {0.3, 2.5, -1.0}) {
    CHECK(analytic_r2_linear_2d(std::vector<ObjectiveVector>{{c, c}}) ==
          doctest::Approx(c).epsilon(1e-15));
  }
  CHECK_THROWS_AS(analytic_r2_linear_2d(std::vector<ObjectiveVector>{{1.0, 2.0, 3.0}}),
                  dimension_error);
  CHECK_THROWS_AS(analytic_r2_linear_2d(std::vector<ObjectiveVector>{}), invariant_error);
}

TEST_CASE("analytic r2 agrees with deterministic quadrature") {
  std::mt19937_64 gen(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto raw = testsupport::random_points(8, 2, gen, -1.0, 1.0);
    const double analytic = analytic_r2_linear_2d(testsupport::to_vectors(raw));
    const double quadrature = oracles::quadrature_r2_linear_2d(raw, 100000);
    CHECK(analytic == doctest::Approx(quadrature).epsilon(1e-7).scale(1.0));
  }
}

TEST_CASE("envelope handles concurrent lines and duplicate points") {
  // All three utility lines meet at lambda = 0.5; the middle one touches the
  // envelope in a single point and contributes no segment.
  const std::vector<ObjectiveVector> concurrent{{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}};
  CHECK(analytic_r2_linear_2d(concurrent) == doctest::Approx(0.25).epsilon(1e-15));
  const auto segments = linear_utility_envelope_2d(concurrent);
  REQUIRE(segments.size() == 2);
  CHECK(segments[0].point_index == 2);
  CHECK(segments[1].point_index == 0);
  CHECK(segments[0].lambda_end == doctest::Approx(0.5));

  // Coincident utility lines keep the first encountered input index.
  const std::vector<ObjectiveVector> twins{{0.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}};
  for (const auto& seg : linear_utility_envelope_2d(twins)) {
    CHECK(seg.point_index != 1);
  }

  const std::vector<ObjectiveVector> identical{{0.3, 0.3}, {0.3, 0.3}, {0.3, 0.3}};
  CHECK(analytic_r2_linear_2d(identical) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(linear_utility_envelope_2d(identical).size() == 1);
}

TEST_CASE("envelope segments tile [0, 1] and are pointwise optimal") {
  std::mt19937_64 gen(59);
  for (int trial = 0; trial < 30; ++trial) {
    const auto raw = testsupport::random_points(2 + gen() % 10, 2, gen);
    const auto segments = linear_utility_envelope_2d(testsupport::to_vectors(raw));
    REQUIRE(!segments.empty());
    CHECK(segments.front().lambda_begin == 0.0);
    CHECK(segments.back().lambda_end == 1.0);
    for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
      CHECK(segments[i].lambda_end == doctest::Approx(segments[i + 1].lambda_begin));
    }
    for (const auto& seg : segments) {
      const double mid = 0.5 * (seg.lambda_begin + seg.lambda_end);
      double best = std::numeric_limits<double>::infinity();
      for (const auto& p : raw) {
        best = std::min(best, mid * p[0] + (1.0 - mid) * p[1]);
      }
      const auto& chosen = raw[seg.point_index];
      CHECK(mid * chosen[0] + (1.0 - mid) * chosen[1] ==
            doctest::Approx(best).epsilon(1e-12));
    }
  }
}
