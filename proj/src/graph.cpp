#include "aperiodic/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace aperiodic {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list)
    : n_(vertex_count) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::pair<int, int>> canon;
  canon.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self loop");
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(canon);
  adj_.assign(n_, {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    auto [u, v] = edges_[e];
    adj_[u].emplace_back(v, e);
    adj_[v].emplace_back(u, e);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it != edges_.end() && *it == std::make_pair(u, v))
    return static_cast<int>(it - edges_.begin());
  return -1;
}

int Graph::component_count() const {
  std::vector<char> seen(n_, 0);
  int comps = 0;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : adj_[v]) {
        (void)e;
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
  }
  return comps;
}

std::int64_t DirectedEdgeCochain::at(const Graph& g, int u, int v) const {
  int e = g.edge_index(u, v);
  if (e < 0) throw std::invalid_argument("no such edge");
  return u < v ? values_[e] : -values_[e];
}

void DirectedEdgeCochain::set(const Graph& g, int u, int v, std::int64_t value) {
  int e = g.edge_index(u, v);
  if (e < 0) throw std::invalid_argument("no such edge");
  values_[e] = (u < v) ? value : -value;
}

std::int64_t cycle_sum(const Graph& g, const DirectedEdgeCochain& c,
                       const std::vector<int>& walk) {
  std::int64_t s = 0;
  for (int i = 0; i + 1 < static_cast<int>(walk.size()); ++i) {
    if (!g.adjacent(walk[i], walk[i + 1])) throw MalformedWalkError(i);
    s += c.at(g, walk[i], walk[i + 1]);
  }
  return s;
}

std::int64_t face_sum(const Graph& g, const DirectedEdgeCochain& c,
                      const std::vector<int>& boundary) {
  if (!boundary.empty() && boundary.front() != boundary.back())
    throw std::invalid_argument("face boundary is not closed");
  return cycle_sum(g, c, boundary);
}

namespace {

struct BfsTree {
  std::vector<int> parent;       // parent vertex, -1 at root
  std::vector<int> parent_edge;  // edge id to parent, -1 at root
  std::vector<std::int64_t> height;
  std::vector<char> tree_edge;   // per edge id
};

BfsTree bfs_integrate(const Graph& g, const DirectedEdgeCochain& c, int root) {
  BfsTree t;
  int n = g.vertex_count();
  t.parent.assign(n, -2);
  t.parent_edge.assign(n, -1);
  t.height.assign(n, 0);
  t.tree_edge.assign(g.edge_count(), 0);
  std::queue<int> q;
  t.parent[root] = -1;
  q.push(root);
  int visited = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [w, e] : g.neighbours(v)) {
      if (t.parent[w] == -2) {
        t.parent[w] = v;
        t.parent_edge[w] = e;
        t.tree_edge[e] = 1;
        t.height[w] = t.height[v] + c.at(g, v, w);
        q.push(w);
        ++visited;
      }
    }
  }
  if (visited != n) throw DisconnectedGraphError(g.component_count());
  return t;
}

// Closed walk u -> ... -> lca -> ... -> v -> u for the non-tree edge {u,v}.
std::vector<int> fundamental_cycle(const BfsTree& t, int u, int v) {
  std::vector<int> up_chain;
  for (int x = u; x != -1; x = t.parent[x]) up_chain.push_back(x);
  std::vector<int> down_chain;
  for (int x = v; x != -1; x = t.parent[x]) down_chain.push_back(x);
  // find lca: deepest common suffix element
  int i = static_cast<int>(up_chain.size()) - 1;
  int j = static_cast<int>(down_chain.size()) - 1;
  while (i > 0 && j > 0 && up_chain[i - 1] == down_chain[j - 1]) {
    --i;
    --j;
  }
  std::vector<int> walk;
  for (int k = 0; k <= i; ++k) walk.push_back(up_chain[k]);
  for (int k = j - 1; k >= 0; --k) walk.push_back(down_chain[k]);
  walk.push_back(u);  // close through the non-tree edge v->u
  return walk;
}

}  // namespace

std::optional<ClosureWitness> check_cycle_closure(const Graph& g,
                                                  const DirectedEdgeCochain& c) {
  if (g.vertex_count() == 0) return std::nullopt;
  BfsTree t = bfs_integrate(g, c, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (t.tree_edge[e]) continue;
    auto [u, v] = g.edges()[e];
    std::int64_t defect = t.height[v] - t.height[u] - c.at(g, u, v);
    if (defect != 0) {
      ClosureWitness w;
      w.walk = fundamental_cycle(t, u, v);
      w.sum = cycle_sum(g, c, w.walk);
      return w;
    }
  }
  return std::nullopt;
}

std::variant<PotentialMap, ClosureWitness> build_potential(const Graph& g,
                                                           const DirectedEdgeCochain& c,
                                                           int root) {
  if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root out of range");
  BfsTree t = bfs_integrate(g, c, root);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (t.tree_edge[e]) continue;
    auto [u, v] = g.edges()[e];
    if (t.height[v] - t.height[u] != c.at(g, u, v)) {
      ClosureWitness w;
      w.walk = fundamental_cycle(t, u, v);
      w.sum = cycle_sum(g, c, w.walk);
      return w;
    }
  }
  PotentialMap p;
  p.root = root;
  p.height = std::move(t.height);
  return p;
}

}  // namespace aperiodic
