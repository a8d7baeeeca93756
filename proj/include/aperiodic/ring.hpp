#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>

namespace aperiodic {

/// Element of the cyclotomic integer ring Z[z], z = exp(i*pi/5), in the
/// basis 1, z, z^2, z^3.  Minimal polynomial: z^4 = z^3 - z^2 + z - 1.
/// All Penrose P2 vertex coordinates live in this ring; equality is exact
/// tuple equality.  z is a unit rotation by 36 degrees, phi = 1 + z^2 - z^3
/// is the golden ratio and is a unit (phi^-1 = phi - 1).
struct ExactPoint {
  std::array<std::int64_t, 4> c{0, 0, 0, 0};

  ExactPoint() = default;
  ExactPoint(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e)
      : c{a, b, d, e} {}

  static ExactPoint zero() { return {}; }
  static ExactPoint one() { return {1, 0, 0, 0}; }
  static ExactPoint phi() { return {1, 0, 1, -1}; }
  static ExactPoint phi_inv() { return {0, 0, 1, -1}; }
  /// z^j for any integer j (z^5 = -1).
  static ExactPoint unit_pow(int j);

  friend ExactPoint operator+(const ExactPoint& a, const ExactPoint& b) {
    return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
  }
  friend ExactPoint operator-(const ExactPoint& a, const ExactPoint& b) {
    return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
  }
  ExactPoint operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
  friend ExactPoint operator*(const ExactPoint& a, const ExactPoint& b);
  ExactPoint& operator+=(const ExactPoint& o) { return *this = *this + o; }
  ExactPoint& operator-=(const ExactPoint& o) { return *this = *this - o; }

  bool operator==(const ExactPoint& o) const { return c == o.c; }
  bool operator!=(const ExactPoint& o) const { return c != o.c; }
  bool operator<(const ExactPoint& o) const { return c < o.c; }

  /// Complex conjugate (mirror about the x axis).
  ExactPoint conj() const;

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

  double x() const;
  double y() const;
};

ExactPoint operator*(std::int64_t s, const ExactPoint& p);

struct ExactPointHash {
  std::size_t operator()(const ExactPoint& p) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : p.c) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::ostream& operator<<(std::ostream& os, const ExactPoint& p);

/// Small exact rational, used for pentagrid offsets.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend Rational operator+(const Rational& a, const Rational& b);
  bool is_integer() const { return den == 1; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

}  // namespace aperiodic
