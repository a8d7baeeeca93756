#include "aperiodic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aperiodic {

bool SubstitutionMatrix::primitive() const {
  int n = size();
  if (n == 0) return false;
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix not square");
    for (auto v : row)
      if (v < 0) throw std::invalid_argument("matrix has a negative entry");
  }
  // iterate boolean powers up to n^2
  std::vector<std::vector<char>> p(n, std::vector<char>(n, 0)), base(p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) base[i][j] = m[i][j] > 0;
  p = base;
  for (int k = 1; k <= n * n; ++k) {
    bool all = true;
    for (auto& row : p)
      for (auto v : row)
        if (!v) all = false;
    if (all) return true;
    std::vector<std::vector<char>> q(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (p[i][l])
          for (int j = 0; j < n; ++j)
            if (base[l][j]) q[i][j] = 1;
    p = std::move(q);
  }
  return false;
}

double perron_frobenius(const SubstitutionMatrix& mat) {
  if (!mat.primitive()) throw std::domain_error("matrix is not primitive");
  int n = mat.size();
  std::vector<double> v(n, 1.0), w(n, 0.0);
  double lambda = 0.0, prev = -1.0;
  for (int it = 0; it < 10000; ++it) {
    for (int i = 0; i < n; ++i) {
      double s = 0;
      for (int j = 0; j < n; ++j) s += static_cast<double>(mat.m[i][j]) * v[j];
      w[i] = s;
    }
    double nrm = 0;
    for (double x : w) nrm = std::max(nrm, std::abs(x));
    for (int i = 0; i < n; ++i) v[i] = w[i] / nrm;
    lambda = nrm;
    if (prev > 0 && std::abs(lambda - prev) <= 1e-12 * lambda) break;
    prev = lambda;
  }
  if (n == 2) {
    // closed-form cross-check against the quadratic characteristic roots
    double tr = static_cast<double>(mat.m[0][0] + mat.m[1][1]);
    double det = static_cast<double>(mat.m[0][0] * mat.m[1][1] - mat.m[0][1] * mat.m[1][0]);
    double disc = tr * tr - 4 * det;
    double root = (tr + std::sqrt(disc)) / 2.0;
    if (std::abs(root - lambda) > 1e-9 * std::max(1.0, root))
      throw std::runtime_error("power iteration disagrees with closed form");
    lambda = root;
  }
  return lambda;
}

double substitution_entropy(double lambda) {
  if (lambda < 1.0) throw std::domain_error("entropy needs lambda >= 1");
  return std::log(lambda);
}

double j_cost(double lambda) {
  if (lambda <= 0.0) throw std::domain_error("j_cost needs lambda > 0");
  return 0.5 * (lambda + 1.0 / lambda) - 1.0;
}

double plastic_constant() {
  double lo = 1.0, hi = 2.0;
  auto f = [](double x) { return x * x * x - x - 1.0; };
  while (hi - lo > 1e-13) {
    double mid = (lo + hi) / 2;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

std::vector<HierarchyRow> coherence_hierarchy(const std::vector<SubstitutionMatrix>& systems) {
  std::vector<HierarchyRow> rows;
  for (const auto& s : systems) {
    double l = perron_frobenius(s);
    rows.push_back({s.name, l, substitution_entropy(l), j_cost(l)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const HierarchyRow& a, const HierarchyRow& b) { return a.lambda < b.lambda - 1e-12; });
  return rows;
}

std::vector<SubstitutionMatrix> builtin_substitutions() {
  return {
      {"fibonacci", {{1, 1}, {1, 0}}},
      {"penrose_p2", {{1, 1}, {1, 0}}},
      {"ammann_beenker", {{2, 1}, {1, 0}}},
      {"icosahedral", {{1, 1}, {1, 0}}},
  };
}

}  // namespace aperiodic
