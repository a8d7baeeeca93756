#include "aperiodic/ring.hpp"

#include <numbers>
#include <stdexcept>

namespace aperiodic {

namespace {
// cos/sin of 36*k degrees, k = 0..3
constexpr double kPi = 3.14159265358979323846;
double cos36k(int k) { return std::cos(kPi * k / 5.0); }
double sin36k(int k) { return std::sin(kPi * k / 5.0); }
}  // namespace

ExactPoint ExactPoint::unit_pow(int j) {
  int m = ((j % 10) + 10) % 10;
  std::int64_t sign = 1;
  if (m >= 5) {  // z^5 = -1
    m -= 5;
    sign = -1;
  }
  ExactPoint p;
  if (m < 4) {
    p.c[m] = sign;
  } else {  // z^4 = z^3 - z^2 + z - 1
    p = ExactPoint{-sign, sign, -sign, sign};
  }
  return p;
}

ExactPoint operator*(const ExactPoint& a, const ExactPoint& b) {
  std::array<std::int64_t, 7> raw{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) raw[i + j] += a.c[i] * b.c[j];
  // reduce z^6 = -z, z^5 = -1, z^4 = z^3 - z^2 + z - 1
  raw[1] -= raw[6];
  raw[0] -= raw[5];
  raw[3] += raw[4];
  raw[2] -= raw[4];
  raw[1] += raw[4];
  raw[0] -= raw[4];
  return {raw[0], raw[1], raw[2], raw[3]};
}

ExactPoint operator*(std::int64_t s, const ExactPoint& p) {
  return {s * p.c[0], s * p.c[1], s * p.c[2], s * p.c[3]};
}

ExactPoint ExactPoint::conj() const {
  // conj(z) = z^9 = 1 - z + z^2 - z^3, conj(z^2) = -z^3, conj(z^3) = -z^2
  const auto& a = c;
  return {a[0] + a[1], -a[1], a[1] - a[3], -a[1] - a[2]};
}

double ExactPoint::x() const {
  double v = 0;
  for (int k = 0; k < 4; ++k) v += static_cast<double>(c[k]) * cos36k(k);
  return v;
}

double ExactPoint::y() const {
  double v = 0;
  for (int k = 0; k < 4; ++k) v += static_cast<double>(c[k]) * sin36k(k);
  return v;
}

std::ostream& operator<<(std::ostream& os, const ExactPoint& p) {
  return os << "(" << p.c[0] << "," << p.c[1] << "," << p.c[2] << "," << p.c[3] << ")";
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

}  // namespace aperiodic
