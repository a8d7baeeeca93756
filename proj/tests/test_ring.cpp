#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aperiodic/ring.hpp"

using namespace aperiodic;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

double norm(const ExactPoint& p) { return std::hypot(p.x(), p.y()); }
}  // namespace

TEST_CASE("unit powers are 36-degree rotations") {
  for (int j = -10; j <= 20; ++j) {
    auto z = ExactPoint::unit_pow(j);
    CHECK(norm(z) == doctest::Approx(1.0).epsilon(1e-12));
    double ang = std::atan2(z.y(), z.x());
    double want = M_PI * j / 5.0;
    double diff = std::remainder(ang - want, 2 * M_PI);
    CHECK(std::abs(diff) < 1e-12);
  }
  CHECK(ExactPoint::unit_pow(5) == -ExactPoint::one());
  CHECK(ExactPoint::unit_pow(13) == ExactPoint::unit_pow(3) * ExactPoint::unit_pow(10));
}

TEST_CASE("phi is the golden ratio and a unit") {
  auto phi = ExactPoint::phi();
  CHECK(phi.x() == doctest::Approx(kPhi).epsilon(1e-14));
  CHECK(phi.y() == doctest::Approx(0.0));
  CHECK(phi * ExactPoint::phi_inv() == ExactPoint::one());
  // phi = z + z^-1
  CHECK(phi == ExactPoint::unit_pow(1) + ExactPoint::unit_pow(-1));
  // phi^2 = phi + 1
  CHECK(phi * phi == phi + ExactPoint::one());
}

TEST_CASE("ring multiplication agrees with complex multiplication") {
  ExactPoint a{3, -2, 1, 4}, b{-1, 0, 2, -3};
  auto p = a * b;
  double re = a.x() * b.x() - a.y() * b.y();
  double im = a.x() * b.y() + a.y() * b.x();
  CHECK(p.x() == doctest::Approx(re).epsilon(1e-12));
  CHECK(p.y() == doctest::Approx(im).epsilon(1e-12));
}

TEST_CASE("conjugation mirrors about the x axis") {
  ExactPoint a{3, -2, 1, 4};
  auto c = a.conj();
  CHECK(c.x() == doctest::Approx(a.x()).epsilon(1e-12));
  CHECK(c.y() == doctest::Approx(-a.y()).epsilon(1e-12));
  CHECK(c.conj() == a);
  CHECK((a * a.conj()).y() == doctest::Approx(0.0));
}

TEST_CASE("rationals") {
  Rational r(2, 10);
  CHECK(r.num == 1);
  CHECK(r.den == 5);
  Rational s = r + Rational(4, 5);
  CHECK(s.is_integer());
  CHECK(s.num == 1);
  CHECK(Rational(-3, -6) == Rational(1, 2));
}
