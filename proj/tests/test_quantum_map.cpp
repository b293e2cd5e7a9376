#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chainbands/builders.hpp"
#include "chainbands/quantum_map.hpp"

using namespace chainbands;

namespace {
constexpr double kPi = std::numbers::pi;

void check_energies(const std::vector<double>& got, const std::vector<double>& expected) {
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expected[i]) <= 1e-9);
}
}  // namespace

TEST_CASE("lift of lambda = 1, -1, 0") {
  check_energies(discrete_to_quantum(1.0, {50}), {0.0, 4 * kPi * kPi});
  check_energies(discrete_to_quantum(-1.0, {50}), {kPi * kPi});
  check_energies(discrete_to_quantum(0.0, {50}), {kPi * kPi / 4, 9 * kPi * kPi / 4});
  CHECK(discrete_to_quantum(0.0, {50}).size() == 2);  // (5π/2)² ≈ 61.7 is outside
}

TEST_CASE("clamping and range errors") {
  CHECK(discrete_to_quantum(1.0 + 5e-13, {1}).front() == 0.0);
  CHECK_THROWS_AS(discrete_to_quantum(1.01, {10}), Error);
  try {
    discrete_to_quantum(-1.5, {10});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LambdaOutOfRange);
  }
  CHECK_THROWS_AS(discrete_to_quantum(0.0, {-1}), Error);
}

TEST_CASE("round trip and window monotonicity") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1, 1);
  for (int i = 0; i < 200; ++i) {
    const double lambda = dist(rng);
    const auto small = discrete_to_quantum(lambda, {80});
    const auto large = discrete_to_quantum(lambda, {400});
    for (double e : large) CHECK(std::abs(std::cos(std::sqrt(e)) - lambda) <= 1e-9);
    CHECK(std::is_sorted(large.begin(), large.end()));
    REQUIRE(small.size() <= large.size());
    for (std::size_t j = 0; j < small.size(); ++j) CHECK(small[j] == large[j]);
  }
}

TEST_CASE("line graph lifts to the folded free dispersion") {
  const auto g = line_graph();
  for (double k : {0.2, 1.0, 2.5, kPi}) {
    const auto point = quantum_bands(g, k, {15});
    std::vector<double> expected{k * k};
    if ((2 * kPi - k) * (2 * kPi - k) <= 15 && k != kPi) expected.push_back((2 * kPi - k) * (2 * kPi - k));
    check_energies(point.energies, expected);
    check_energies(point.dirichlet_energies, {kPi * kPi});
  }
}

TEST_CASE("folded cell at k = 0 lifts its five discrete values") {
  // λ(0) = {-2/3, -1/3, 0, 0, 1}
  const auto point = quantum_bands(folded_hksw_graph(), 0.0, {10});
  std::vector<double> expected{0.0};
  for (double lambda : {-2.0 / 3, -1.0 / 3, 0.0, 0.0}) {
    const double t = std::acos(lambda);
    expected.push_back(t * t);
  }
  std::sort(expected.begin(), expected.end());
  check_energies(point.energies, expected);
}

TEST_CASE("a zero-width window keeps only E = 0") {
  CHECK(quantum_bands(line_graph(), 0.0, {0}).energies == std::vector<double>{0.0});
  CHECK(quantum_bands(line_graph(), 1.0, {0}).energies.empty());
  CHECK(quantum_bands(folded_hksw_graph(), 0.0, {0}).energies == std::vector<double>{0.0});
  CHECK(quantum_bands(folded_hksw_graph(), 2.0, {0}).energies.empty());
}

TEST_CASE("principal-branch lift keeps the folded cell's interior edges interior") {
  const auto g = folded_hksw_graph();
  const auto discrete3 = locate_band_edges(g, 3);
  const auto lifted3 = principal_branch_edges(g, 3);
  CHECK(lifted3.max.classification == EdgeClass::Interior);
  CHECK(std::abs(lifted3.max.attained_at.front() - discrete3.min.attained_at.front()) <= 1e-4);
  CHECK(std::abs(lifted3.max.value - principal_energy(discrete3.min.value)) <= 1e-8);

  const auto discrete2 = locate_band_edges(g, 2);
  const auto lifted2 = principal_branch_edges(g, 2);
  CHECK(lifted2.min.classification == EdgeClass::Interior);
  CHECK(std::abs(lifted2.min.attained_at.front() - discrete2.max.attained_at.front()) <= 1e-4);
  CHECK_THROWS_AS(principal_branch_edges(g, 6), Error);
}
