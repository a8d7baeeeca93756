#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aperiodic {

/// Square nonnegative integer matrix with a primitivity check.
struct SubstitutionMatrix {
  std::string name;
  std::vector<std::vector<std::int64_t>> m;

  int size() const { return static_cast<int>(m.size()); }
  /// Some power (exponent bounded by size^2) is strictly positive.
  bool primitive() const;
};

/// Dominant eigenvalue by power iteration from the all-ones vector, to
/// relative tolerance 1e-12.  For 2x2 matrices the quadratic closed form is
/// used as a cross-check; a discrepancy throws.
double perron_frobenius(const SubstitutionMatrix& m);

/// ln(lambda); requires lambda >= 1.
double substitution_entropy(double lambda);

/// J(x) = cosh(ln x) - 1 = (x + 1/x)/2 - 1; requires x > 0.
double j_cost(double lambda);

/// Root of x^3 = x + 1 by bisection to 1e-12.
double plastic_constant();

struct HierarchyRow {
  std::string name;
  double lambda;
  double entropy;
  double j;
};

/// Rows sorted ascending by lambda (ties keep input order).
std::vector<HierarchyRow> coherence_hierarchy(const std::vector<SubstitutionMatrix>& systems);

/// The four built-in substitution matrices: fibonacci, penrose_p2,
/// ammann_beenker, icosahedral.
std::vector<SubstitutionMatrix> builtin_substitutions();

}  // namespace aperiodic
