#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "aperiodic/ring.hpp"
#include "aperiodic/tiling.hpp"

namespace aperiodic {

struct SingularGridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// De Bruijn pentagrid parameters: five line families with unit normals
/// n_k = (cos 2*pi*k/5, sin 2*pi*k/5) and exact rational offsets whose sum
/// must be an integer (regular-pentagrid convention).
struct PentagridParams {
  std::array<Rational, 5> gamma{Rational(1, 5), Rational(1, 5), Rational(1, 5),
                                Rational(1, 5), Rational(1, 5)};
  double radius = 10.0;

  void check() const;
};

/// Unit normal n_k.
std::array<double, 2> pentagrid_normal(int k);

/// Strip index ceil(p . n_k + gamma_k); throws SingularGridError when the
/// point lies on a grid line of that family (tolerance 1e-9).
std::int64_t strip_index(const std::array<double, 2>& p, int family, const PentagridParams& params);

/// Physical position (2/5) * sum_k m_k n_k of a lattice 5-tuple.
std::array<double, 2> reconstruct_vertex(const std::array<std::int64_t, 5>& tuple);

/// Generates the dual rhombus tiling of the pentagrid.  Vertices carry their
/// integer 5-tuples, normalised so the vertex nearest the origin (ties broken
/// by lexicographic tuple order) has the zero tuple.  Tile-side decorations
/// are the lattice increments m_k(to) - m_k(from).
Tiling generate_pentagrid(const PentagridParams& params);

struct AffineConstraintReport {
  std::set<std::int64_t> sum_values;         // { sum_k h_k(v) }
  std::set<std::int64_t> alternating_values; // { sum_k (-1)^k h_k(v) }
};

/// Tabulates the two de Bruijn linear forms over all vertex tuples.  Reports
/// value sets only; constancy is convention-sensitive and is not asserted.
AffineConstraintReport affine_constraint_report(const Tiling& t);

}  // namespace aperiodic
