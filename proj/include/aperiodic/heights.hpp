#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "aperiodic/tiling.hpp"

namespace aperiodic {

/// Per-family potentials over a tiling with a shared root, plus the
/// assembled per-vertex tuples Phi(v).
struct HeightAtlas {
  int root = 0;
  int families = 0;
  std::vector<std::vector<std::int64_t>> heights;  // [family][vertex]

  std::vector<std::int64_t> tuple(int v) const {
    std::vector<std::int64_t> t(families);
    for (int k = 0; k < families; ++k) t[k] = heights[k][v];
    return t;
  }

  nlohmann::json to_json() const;
};

/// Root selection: vertex nearest the origin, ties broken by lexicographic
/// tuple order (falling back to smallest id when tuples are absent).
int default_root(const Tiling& t);

/// Height function for one family: path integral from `root` of the family
/// cochain (taken from the lowest-id incident tile per edge).  A closure
/// violation yields the witness, not an exception.
std::variant<PotentialMap, ClosureWitness> height_function(const Tiling& t, int family, int root);

struct AtlasFailure {
  std::map<int, ClosureWitness> witnesses;  // family -> witness
};

/// Builds all families; the atlas exists iff every family admits a height
/// function, which is exactly tiling validity.
std::variant<HeightAtlas, AtlasFailure> height_atlas(const Tiling& t, int root);

/// First tuple collision in vertex-id order, or nullopt on pass.
std::optional<std::pair<int, int>> injectivity_check(const HeightAtlas& atlas);

/// max over vertices of | pos(v) - pos(root) - (2/5) sum_k h_k(v) n_k |
/// for planar 5-family tilings (the pentagrid reconstruction formula).
double reconstruction_check(const HeightAtlas& atlas, const Tiling& t);

}  // namespace aperiodic
