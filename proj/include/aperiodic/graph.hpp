#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace aperiodic {

struct MalformedWalkError : std::runtime_error {
  int index;
  explicit MalformedWalkError(int idx)
      : std::runtime_error("walk vertices at positions " + std::to_string(idx) + "," +
                           std::to_string(idx + 1) + " are not adjacent"),
        index(idx) {}
};

struct DisconnectedGraphError : std::runtime_error {
  int components;
  explicit DisconnectedGraphError(int n)
      : std::runtime_error("graph is disconnected (" + std::to_string(n) + " components)"),
        components(n) {}
};

/// Simple undirected graph over dense integer vertex ids.  No self loops,
/// no duplicate edges.  Edge ids index the canonical (min,max) edge list.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Edge id of {u,v}, or -1.
  int edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

  /// Neighbours of v in ascending id order, as (neighbour, edge id).
  const std::vector<std::pair<int, int>>& neighbours(int v) const { return adj_[v]; }

  int component_count() const;
  bool connected() const { return n_ <= 1 || component_count() == 1; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Integer antisymmetric function on directed edges.  One value is stored
/// per undirected edge under the canonical (min id -> max id) orientation;
/// the reverse orientation is computed, so antisymmetry is structural.
class DirectedEdgeCochain {
 public:
  DirectedEdgeCochain() = default;
  explicit DirectedEdgeCochain(int edge_count) : values_(edge_count, 0) {}

  /// Value on the directed edge u->v.
  std::int64_t at(const Graph& g, int u, int v) const;
  /// Set the value on the directed edge u->v (stored canonically).
  void set(const Graph& g, int u, int v, std::int64_t value);

  std::int64_t at_edge(int edge_id) const { return values_[edge_id]; }
  void set_edge(int edge_id, std::int64_t value) { values_[edge_id] = value; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<std::int64_t> values_;
};

/// Vertex potential with a designated root; height(root) == 0.
struct PotentialMap {
  std::vector<std::int64_t> height;
  int root = 0;
};

/// A closed walk (first == last) whose cochain sum is nonzero.
struct ClosureWitness {
  std::vector<int> walk;
  std::int64_t sum = 0;
};

/// Signed sum of cochain values along a walk.  Throws MalformedWalkError if
/// consecutive vertices are not adjacent.  An empty or single-vertex walk
/// sums to zero.
std::int64_t cycle_sum(const Graph& g, const DirectedEdgeCochain& c,
                       const std::vector<int>& walk);

/// Oriented boundary sum of a face, given as a closed walk.
std::int64_t face_sum(const Graph& g, const DirectedEdgeCochain& c,
                      const std::vector<int>& boundary);

/// Checks cycle closure on every closed walk by integrating over a BFS
/// spanning tree (ascending vertex-id order) and testing each non-tree edge.
/// Returns the fundamental cycle of the first failing non-tree edge, in
/// edge-id order, or nullopt on pass.  Requires a connected graph.
std::optional<ClosureWitness> check_cycle_closure(const Graph& g,
                                                  const DirectedEdgeCochain& c);

/// Path-integrates the cochain from `root` over the BFS tree and verifies
/// every non-tree edge.  Deterministic for fixed vertex ids.
std::variant<PotentialMap, ClosureWitness> build_potential(const Graph& g,
                                                           const DirectedEdgeCochain& c,
                                                           int root);

}  // namespace aperiodic
