#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aperiodic/graph.hpp"

namespace aperiodic {

struct MalformedTilingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TilingVertex {
  int id = 0;
  std::vector<double> pos;           // physical position, dim 1..3
  std::vector<std::int64_t> tuple;   // lattice coordinates, may be empty
};

struct TilingEdge {
  int u = 0, v = 0;        // canonical u < v
  int cls = 0;             // edge direction / lattice class
  bool boundary = false;
  std::vector<int> tiles;  // incident tile ids
};

struct TileSide {
  int from = 0, to = 0;  // directed along the tile boundary cycle
  int family = 0;
  int value = 0;         // claimed bar-crossing value, -1/0/+1
};

struct PlacedTile {
  int id = 0;
  std::string kind;           // "dart", "kite", "rhombus:j:k", "face:j:k"
  std::vector<int> vertices;  // boundary cycle
  std::vector<TileSide> sides;
};

/// A candidate decorated tiling: the common in-memory form for P2 patches,
/// pentagrid patches and CPT patches, and the unit serialised as a
/// TilingDocument.  Decorations are per-tile claims; they need not agree
/// across shared edges.
class Tiling {
 public:
  std::string model;  // "p2" | "pentagrid" | "cpt"
  int families = 5;   // number of cochain families N
  int dim = 2;
  nlohmann::json metadata = nlohmann::json::object();

  std::vector<TilingVertex> vertices;
  std::vector<TilingEdge> edges;
  std::vector<PlacedTile> tiles;

  int edge_lookup(int u, int v) const;  // -1 if absent
  void rebuild_index();

  /// Fills edge incidence lists from tile sides and sets boundary flags
  /// (an edge is boundary iff it has exactly one incident tile).  Checks
  /// dense ids, side cycles and 2-tile incidence; throws MalformedTilingError.
  void finalise();

  Graph graph() const;

  /// Signed side value claimed by `tile` on the directed edge u->v for the
  /// given family; 0 when the tile has no such side entry.
  int side_value(const PlacedTile& tile, int u, int v, int family) const;

  /// The per-family cochain read from the lowest-id incident tile of each
  /// edge under the canonical orientation (boundary edges use their only
  /// tile).  Exists as data regardless of gluing.
  DirectedEdgeCochain family_cochain(int family) const;

  nlohmann::json to_json() const;
  static Tiling from_json(const nlohmann::json& j);

 private:
  std::map<std::pair<int, int>, int> edge_index_;
};

/// Fixed-format float for canonical serialisation: 12 significant digits.
double quantise(double x);

/// Canonical serialisation: sorted keys (nlohmann objects sort by key),
/// 2-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace aperiodic
