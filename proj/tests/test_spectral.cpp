#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "aperiodic/spectral.hpp"

using namespace aperiodic;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("perron-frobenius eigenvalues of the builtin matrices") {
  SubstitutionMatrix fib{"fib", {{1, 1}, {1, 0}}};
  CHECK(perron_frobenius(fib) == doctest::Approx(1.6180339887).epsilon(1e-9));
  SubstitutionMatrix ab{"ab", {{2, 1}, {1, 0}}};
  CHECK(perron_frobenius(ab) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-9));
  SubstitutionMatrix one{"one", {{1}}};
  CHECK(perron_frobenius(one) == doctest::Approx(1.0));
}

TEST_CASE("non-primitive matrix is a domain error") {
  SubstitutionMatrix diag{"diag", {{1, 0}, {0, 1}}};
  CHECK(!diag.primitive());
  CHECK_THROWS_AS(perron_frobenius(diag), std::domain_error);
}

TEST_CASE("entropy") {
  CHECK(substitution_entropy(kPhi) == doctest::Approx(0.4812118).epsilon(1e-6));
  CHECK(substitution_entropy(1.0) == doctest::Approx(0.0));
  CHECK(substitution_entropy(1 + std::sqrt(2.0)) == doctest::Approx(0.8813736).epsilon(1e-6));
  CHECK_THROWS_AS(substitution_entropy(0.5), std::domain_error);
}

TEST_CASE("j-cost fixed values") {
  CHECK(j_cost(kPhi) == doctest::Approx(kPhi - 1.5).epsilon(1e-12));
  CHECK(j_cost(kPhi) == doctest::Approx(0.1180339887).epsilon(1e-9));
  CHECK(j_cost(1 + std::sqrt(2.0)) == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-12));
  CHECK(j_cost(2 + std::sqrt(3.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j_cost(1.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(j_cost(0.0), std::domain_error);
}

TEST_CASE("j-cost properties: reciprocal invariance and monotonicity") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int i = 0; i < 200; ++i) {
    double x = u(rng);
    CHECK(j_cost(x) == doctest::Approx(j_cost(1.0 / x)).epsilon(1e-12));
  }
  std::uniform_real_distribution<double> v(1.0001, 50.0);
  for (int i = 0; i < 200; ++i) {
    double a = v(rng), b = v(rng);
    if (a > b) std::swap(a, b);
    CHECK(j_cost(a) <= j_cost(b) + 1e-15);
  }
}

TEST_CASE("plastic constant") {
  double p = plastic_constant();
  CHECK(p * p * p == doctest::Approx(p + 1).epsilon(1e-11));
  CHECK(p == doctest::Approx(1.3247179572).epsilon(1e-9));
  CHECK(j_cost(p) == doctest::Approx(0.040).epsilon(0.01));
  CHECK(j_cost(p) < j_cost(kPhi));
}

TEST_CASE("coherence hierarchy ordering of the builtins") {
  auto rows = coherence_hierarchy(builtin_substitutions());
  REQUIRE(rows.size() == 4);
  // fibonacci = penrose = icosahedral (phi) < ammann-beenker (1+sqrt2)
  CHECK(rows[0].name == "fibonacci");
  CHECK(rows[1].name == "penrose_p2");
  CHECK(rows[2].name == "icosahedral");
  CHECK(rows[3].name == "ammann_beenker");
  for (int i = 0; i < 3; ++i) CHECK(rows[i].lambda == doctest::Approx(kPhi).epsilon(1e-9));
  CHECK(rows[3].lambda == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-9));
  // J-order equals lambda-order
  for (int i = 0; i + 1 < 4; ++i) CHECK(rows[i].j <= rows[i + 1].j + 1e-12);
}
