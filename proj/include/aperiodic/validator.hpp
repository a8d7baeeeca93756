#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aperiodic/tiling.hpp"

namespace aperiodic {

struct Violation {
  int u = 0, v = 0;  // canonical edge orientation u < v
  int family = 0;
  int a_tile = 0, b_tile = 0;
  int a_val = 0, b_val = 0;
};

struct ValidationReport {
  bool valid = false;
  std::vector<std::vector<Violation>> families;  // one list per family
  std::int64_t edges_checked = 0;
  double millis = 0.0;

  nlohmann::json to_json() const;
};

/// One pass over interior edges comparing the two incident tiles' claimed
/// values for one family on the canonical directed orientation.  Mismatches
/// are returned in edge-id order.
std::vector<Violation> check_gluing(const Tiling& t, int family);

/// Runs check_gluing for every family; valid iff all lists are empty.
/// The five passes run concurrently over the immutable tiling.
ValidationReport validate(const Tiling& t);

enum class MutationMode { kFlip, kZero };

/// The family a mutation targets on an edge: the smallest family with a
/// nonzero canonical value (for single-step edges this is the edge class).
int relevant_family(const Tiling& t, int edge_id);

/// Returns a copy with the chosen incident tile's side value on the edge's
/// relevant family flipped in sign (kFlip) or zeroed (kZero); which_tile
/// 0 = lower tile id, 1 = higher.  Boundary edge -> domain error.
Tiling inject_violation(const Tiling& t, int edge_id, int which_tile,
                        MutationMode mode = MutationMode::kFlip);

struct EquivalenceAudit {
  bool matching = false;   // (i)  per-edge gluing for all families
  bool closure = false;    // (iii) global cochain exists and is cycle-closed
  bool heights = false;    // (iv) a height function exists for every family
  bool agree() const { return matching == closure && closure == heights; }
};

/// Evaluates the three computable conditions of the matching-conservation
/// equivalence independently.  Throws if the verdicts disagree.
EquivalenceAudit equivalence_audit(const Tiling& t);

}  // namespace aperiodic
