#include "aperiodic/validator.hpp"

#include <chrono>
#include <future>
#include <stdexcept>

#include "aperiodic/graph.hpp"

namespace aperiodic {

using nlohmann::json;

json ValidationReport::to_json() const {
  json j;
  j["valid"] = valid;
  json fams = json::array();
  for (int k = 0; k < static_cast<int>(families.size()); ++k) {
    json f;
    f["k"] = k;
    json vs = json::array();
    for (const auto& v : families[k]) {
      vs.push_back({{"edge", {v.u, v.v}},
                    {"a_tile", v.a_tile},
                    {"a_val", v.a_val},
                    {"b_tile", v.b_tile},
                    {"b_val", v.b_val}});
    }
    f["violations"] = vs;
    fams.push_back(f);
  }
  j["families"] = fams;
  j["edges_checked"] = edges_checked;
  j["millis"] = millis;
  return j;
}

std::vector<Violation> check_gluing(const Tiling& t, int family) {
  std::vector<Violation> out;
  for (const auto& e : t.edges) {
    if (e.tiles.size() != 2) {
      if (!e.boundary)
        throw MalformedTilingError("interior edge without 2 incident tiles");
      continue;
    }
    const auto& A = t.tiles[e.tiles[0]];
    const auto& B = t.tiles[e.tiles[1]];
    int a = t.side_value(A, e.u, e.v, family);
    int b = t.side_value(B, e.u, e.v, family);
    if (a != b) out.push_back({e.u, e.v, family, A.id, B.id, a, b});
  }
  return out;
}

ValidationReport validate(const Tiling& t) {
  auto start = std::chrono::steady_clock::now();
  ValidationReport rep;
  rep.families.resize(t.families);
  std::vector<std::future<std::vector<Violation>>> futs;
  futs.reserve(t.families);
  for (int k = 0; k < t.families; ++k)
    futs.push_back(std::async(std::launch::async, [&t, k] { return check_gluing(t, k); }));
  for (int k = 0; k < t.families; ++k) rep.families[k] = futs[k].get();
  rep.valid = true;
  for (const auto& f : rep.families)
    if (!f.empty()) rep.valid = false;
  std::int64_t interior = 0;
  for (const auto& e : t.edges)
    if (e.tiles.size() == 2) ++interior;
  rep.edges_checked = interior;
  rep.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

int relevant_family(const Tiling& t, int edge_id) {
  const auto& e = t.edges.at(edge_id);
  if (e.tiles.empty()) throw std::domain_error("edge has no incident tile");
  const auto& A = t.tiles[e.tiles.front()];
  for (int k = 0; k < t.families; ++k)
    if (t.side_value(A, e.u, e.v, k) != 0) return k;
  // all-zero sides should not happen for generated tilings; fall back to class
  return e.cls;
}

Tiling inject_violation(const Tiling& t, int edge_id, int which_tile, MutationMode mode) {
  const auto& e = t.edges.at(edge_id);
  if (e.tiles.size() != 2) throw std::domain_error("cannot inject on a boundary edge");
  int family = relevant_family(t, edge_id);
  Tiling out = t;
  auto& tile = out.tiles[e.tiles.at(which_tile)];
  bool touched = false;
  for (auto& s : tile.sides) {
    bool same = (s.from == e.u && s.to == e.v) || (s.from == e.v && s.to == e.u);
    if (!same || s.family != family) continue;
    s.value = (mode == MutationMode::kFlip) ? -s.value : 0;
    touched = true;
  }
  if (!touched) throw std::domain_error("tile carries no decoration on that edge/family");
  out.rebuild_index();
  return out;
}

namespace {

// BFS path integral of the cochain over every component; returns heights and
// whether every non-tree edge satisfies the gradient identity.
bool forest_integrate(const Graph& g, const DirectedEdgeCochain& c,
                      std::vector<std::int64_t>& h) {
  int n = g.vertex_count();
  h.assign(n, 0);
  std::vector<char> seen(n, 0);
  bool closed = true;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (auto [w, e] : g.neighbours(v)) {
        (void)e;
        if (!seen[w]) {
          seen[w] = 1;
          h[w] = h[v] + c.at(g, v, w);
          queue.push_back(w);
        }
      }
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    if (h[v] - h[u] != c.at_edge(e)) closed = false;
  }
  return closed;
}

}  // namespace

EquivalenceAudit equivalence_audit(const Tiling& t) {
  EquivalenceAudit a;

  // (i) matching: gluing on every interior edge, every family
  a.matching = true;
  for (int k = 0; k < t.families && a.matching; ++k)
    if (!check_gluing(t, k).empty()) a.matching = false;

  Graph g = t.graph();

  // (iii) global cochain existence (= gluing on every edge) plus cycle closure
  a.closure = true;
  for (int k = 0; k < t.families && a.closure; ++k) {
    if (!check_gluing(t, k).empty()) {
      a.closure = false;
      break;
    }
    auto c = t.family_cochain(k);
    std::vector<std::int64_t> h;
    if (!forest_integrate(g, c, h)) a.closure = false;
  }

  // (iv) height existence: a potential whose gradient matches EVERY incident
  // tile's claimed value on every directed edge
  a.heights = true;
  for (int k = 0; k < t.families && a.heights; ++k) {
    auto c = t.family_cochain(k);
    std::vector<std::int64_t> h;
    if (!forest_integrate(g, c, h)) {
      a.heights = false;
      break;
    }
    for (const auto& e : t.edges) {
      std::int64_t grad = h[e.v] - h[e.u];
      for (int ti : e.tiles) {
        if (t.side_value(t.tiles[ti], e.u, e.v, k) != grad) {
          a.heights = false;
          break;
        }
      }
      if (!a.heights) break;
    }
  }

  if (!a.agree())
    throw std::logic_error("equivalence audit disagreement: matching=" +
                           std::to_string(a.matching) + " closure=" + std::to_string(a.closure) +
                           " heights=" + std::to_string(a.heights));
  return a;
}

}  // namespace aperiodic
