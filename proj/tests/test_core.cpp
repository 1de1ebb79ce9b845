#include <doctest.h>

#include <algorithm>
#include <random>

#include "nmetrics/dominance.hpp"
#include "nmetrics/types.hpp"

#include "test_support.hpp"

using namespace nmetrics;

TEST_CASE("objective vector rejects invalid entries") {
  CHECK_THROWS_AS(ObjectiveVector(std::vector<double>{}), invariant_error);
  CHECK_THROWS_AS(ObjectiveVector({1.0, std::numeric_limits<double>::quiet_NaN()}),
                  invariant_error);
  CHECK_THROWS_AS(ObjectiveVector({std::numeric_limits<double>::infinity()}), invariant_error);
  const ObjectiveVector v{1.0, -2.5};
  CHECK(v.dimension() == 2);
  CHECK(v[1] == -2.5);
}

TEST_CASE("euclidean distance") {
  CHECK(euclidean_distance(ObjectiveVector{0.0, 0.0}, ObjectiveVector{3.0, 4.0}) == 5.0);
  CHECK_THROWS_AS(euclidean_distance(ObjectiveVector{0.0}, ObjectiveVector{0.0, 0.0}),
                  dimension_error);
}

TEST_CASE("dominance basics") {
  CHECK(dominates(ObjectiveVector{0.0, 0.0}, ObjectiveVector{1.0, 1.0}));
  CHECK_FALSE(dominates(ObjectiveVector{0.0, 0.0}, ObjectiveVector{0.0, 0.0}));
  CHECK_FALSE(dominates(ObjectiveVector{0.0, 2.0}, ObjectiveVector{1.0, 1.0}));
  CHECK_FALSE(dominates(ObjectiveVector{1.0, 1.0}, ObjectiveVector{0.0, 2.0}));
  CHECK(weakly_dominates(ObjectiveVector{0.0, 0.0}, ObjectiveVector{0.0, 0.0}));
  CHECK_THROWS_AS(dominates(ObjectiveVector{0.0}, ObjectiveVector{0.0, 1.0}), dimension_error);
}

TEST_CASE("dominance is antisymmetric and transitive on random triples") {
  std::mt19937_64 gen(7);
  // Coordinates on a coarse grid so equalities actually happen.
  const auto grid_point = [&gen](std::size_t d) {
    std::vector<double> v(d);
    for (auto& x : v) {
      x = 0.25 * static_cast<double>(gen() % 5);
    }
    return ObjectiveVector(std::move(v));
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t d = 2 + gen() % 3;
    const ObjectiveVector u = grid_point(d);
    const ObjectiveVector v = grid_point(d);
    const ObjectiveVector w = grid_point(d);
    CHECK_FALSE((dominates(u, v) && dominates(v, u)));
    if (dominates(u, v) && dominates(v, w)) {
      CHECK(dominates(u, w));
    }
  }
}

TEST_CASE("nondominated filter") {
  const std::vector<ObjectiveVector> mutually{{0.0, 2.0}, {1.0, 1.0}, {2.0, 0.0}};
  CHECK(nondominated_filter(mutually) == std::vector<std::size_t>{0, 1, 2});

  const std::vector<ObjectiveVector> chain{{0.0, 0.0}, {1.0, 1.0}};
  CHECK(nondominated_filter(chain) == std::vector<std::size_t>{0});

  // Duplicates never dominate each other, so both stay.
  const std::vector<ObjectiveVector> twins{{1.0, 1.0}, {1.0, 1.0}, {0.5, 2.0}};
  CHECK(nondominated_filter(twins) == std::vector<std::size_t>{0, 1, 2});

  CHECK_THROWS_AS(nondominated_filter(std::vector<ObjectiveVector>{}), invariant_error);
}

TEST_CASE("nondominated filter agrees with the pairwise oracle") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto raw = testsupport::random_points(20, 2, gen);
    CHECK(nondominated_filter(testsupport::to_vectors(raw)) == oracles::nondominated(raw));
  }
}

TEST_CASE("nondominated filter is idempotent") {
  std::mt19937_64 gen(13);
  const auto raw = testsupport::random_points(40, 3, gen);
  const auto vectors = testsupport::to_vectors(raw);
  const auto kept = nondominated_filter(vectors);
  std::vector<ObjectiveVector> filtered;
  for (std::size_t i : kept) {
    filtered.push_back(vectors[i]);
  }
  std::vector<std::size_t> all(filtered.size());
  std::iota(all.begin(), all.end(), 0u);
  CHECK(nondominated_filter(filtered) == all);
}

TEST_CASE("true nondominated fraction") {
  const auto set_of = [](const oracles::Points& truths) {
    return testsupport::noise_free_set(truths);
  };
  CHECK(true_nondominated_fraction(set_of({{0.0, 2.0}, {2.0, 0.0}})) == 1.0);
  CHECK(true_nondominated_fraction(set_of({{0.0, 0.0}, {1.0, 1.0}})) == 0.5);

  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto raw = testsupport::random_points(50, 2, gen);
    const double expected = static_cast<double>(oracles::nondominated(raw).size()) / 50.0;
    CHECK(true_nondominated_fraction(set_of(raw)) == expected);
  }
}

TEST_CASE("true nondominated fraction is permutation invariant") {
  std::mt19937_64 gen(19);
  auto raw = testsupport::random_points(30, 2, gen);
  const double before = true_nondominated_fraction(testsupport::noise_free_set(raw));
  std::shuffle(raw.begin(), raw.end(), gen);
  CHECK(true_nondominated_fraction(testsupport::noise_free_set(raw)) == before);
}

TEST_CASE("solution set invariants") {
  const ObjectiveVector p{1.0, 2.0};
  CHECK_THROWS_AS(SolutionSet({}), invariant_error);
  CHECK_THROWS_AS(SolutionSet({EvaluatedSolution{"a", p, p}, EvaluatedSolution{"a", p, p}}),
                  invariant_error);
  CHECK_THROWS_AS(SolutionSet({EvaluatedSolution{"a", p, ObjectiveVector{1.0}}}),
                  dimension_error);
  const SolutionSet set({EvaluatedSolution{"a", p, p}, EvaluatedSolution{"b", p, p}});
  CHECK(set.size() == 2);
  CHECK(set.dimension() == 2);
}

TEST_CASE("reference set validates mutual non-dominance eagerly") {
  CHECK_THROWS_AS(ReferenceSet({ObjectiveVector{0.0, 0.0}, ObjectiveVector{1.0, 1.0}}),
                  invariant_error);
  // Duplicate targets do not dominate each other.
  CHECK_NOTHROW(ReferenceSet({ObjectiveVector{1.0, 1.0}, ObjectiveVector{1.0, 1.0}}));
  CHECK_NOTHROW(ReferenceSet({ObjectiveVector{0.0, 2.0}, ObjectiveVector{2.0, 0.0}}));
  CHECK_THROWS_AS(ReferenceSet({ObjectiveVector{0.0, 1.0}, ObjectiveVector{0.0}}),
                  dimension_error);
}
