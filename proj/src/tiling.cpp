#include "aperiodic/tiling.hpp"

#include <algorithm>
#include <cstdio>

namespace aperiodic {

using nlohmann::json;

int Tiling::edge_lookup(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = edge_index_.find({u, v});
  return it == edge_index_.end() ? -1 : it->second;
}

void Tiling::rebuild_index() {
  edge_index_.clear();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto& ed = edges[e];
    if (ed.u > ed.v) std::swap(ed.u, ed.v);
    edge_index_[{ed.u, ed.v}] = e;
  }
}

void Tiling::finalise() {
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    if (vertices[i].id != i) throw MalformedTilingError("vertex ids are not dense from 0");
  // canonical edge order (u,v) ascending, so edge ids match Graph edge ids
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(),
            [](const TilingEdge& a, const TilingEdge& b) {
              return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
            });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw MalformedTilingError("duplicate edge");
  rebuild_index();
  for (int i = 0; i < static_cast<int>(tiles.size()); ++i)
    if (tiles[i].id != i) throw MalformedTilingError("tile ids are not dense from 0");
  for (auto& e : edges) e.tiles.clear();
  for (const auto& t : tiles) {
    int k = static_cast<int>(t.vertices.size());
    if (k < 3) throw MalformedTilingError("tile with fewer than 3 vertices");
    for (int i = 0; i < k; ++i) {
      int u = t.vertices[i], v = t.vertices[(i + 1) % k];
      int e = edge_lookup(u, v);
      if (e < 0) throw MalformedTilingError("tile side is not an edge of the tiling");
      auto& lst = edges[e].tiles;
      if (std::find(lst.begin(), lst.end(), t.id) == lst.end()) lst.push_back(t.id);
    }
    for (const auto& s : t.sides) {
      bool on_cycle = false;
      for (int i = 0; i < k; ++i) {
        int u = t.vertices[i], v = t.vertices[(i + 1) % k];
        if ((s.from == u && s.to == v) || (s.from == v && s.to == u)) on_cycle = true;
      }
      if (!on_cycle) throw MalformedTilingError("tile side not on the tile's vertex cycle");
    }
  }
  for (auto& e : edges) {
    std::sort(e.tiles.begin(), e.tiles.end());
    if (e.tiles.size() > 2) throw MalformedTilingError("edge with more than 2 incident tiles");
    e.boundary = e.tiles.size() < 2;
  }
}

Graph Tiling::graph() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(edges.size());
  for (const auto& e : edges) es.emplace_back(e.u, e.v);
  return Graph(static_cast<int>(vertices.size()), es);
}

int Tiling::side_value(const PlacedTile& tile, int u, int v, int family) const {
  for (const auto& s : tile.sides) {
    if (s.family != family) continue;
    if (s.from == u && s.to == v) return s.value;
    if (s.from == v && s.to == u) return -s.value;
  }
  return 0;
}

DirectedEdgeCochain Tiling::family_cochain(int family) const {
  DirectedEdgeCochain c(static_cast<int>(edges.size()));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto& ed = edges[e];
    if (ed.tiles.empty()) continue;
    const auto& tile = tiles[ed.tiles.front()];
    c.set_edge(e, side_value(tile, ed.u, ed.v, family));
  }
  return c;
}

double quantise(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json Tiling::to_json() const {
  json j;
  j["model"] = model;
  j["n"] = families;
  j["d"] = dim;
  j["metadata"] = metadata;
  json vs = json::array();
  for (const auto& v : vertices) {
    json jv;
    jv["id"] = v.id;
    json pos = json::array();
    for (double p : v.pos) pos.push_back(quantise(p));
    jv["pos"] = pos;
    if (!v.tuple.empty()) jv["tuple"] = v.tuple;
    vs.push_back(jv);
  }
  j["vertices"] = vs;
  json es = json::array();
  for (const auto& e : edges) {
    es.push_back({{"u", e.u}, {"v", e.v}, {"class", e.cls}, {"boundary", e.boundary}});
  }
  j["edges"] = es;
  json ts = json::array();
  for (const auto& t : tiles) {
    json jt;
    jt["id"] = t.id;
    jt["kind"] = t.kind;
    jt["vertices"] = t.vertices;
    json sides = json::array();
    for (const auto& s : t.sides)
      sides.push_back({{"from", s.from}, {"to", s.to}, {"family", s.family}, {"value", s.value}});
    jt["sides"] = sides;
    ts.push_back(jt);
  }
  j["tiles"] = ts;
  return j;
}

Tiling Tiling::from_json(const json& j) {
  Tiling t;
  try {
    t.model = j.at("model").get<std::string>();
    t.families = j.at("n").get<int>();
    t.dim = j.at("d").get<int>();
    t.metadata = j.value("metadata", json::object());
    for (const auto& jv : j.at("vertices")) {
      TilingVertex v;
      v.id = jv.at("id").get<int>();
      v.pos = jv.at("pos").get<std::vector<double>>();
      if (jv.contains("tuple")) v.tuple = jv.at("tuple").get<std::vector<std::int64_t>>();
      t.vertices.push_back(std::move(v));
    }
    for (const auto& je : j.at("edges")) {
      TilingEdge e;
      e.u = je.at("u").get<int>();
      e.v = je.at("v").get<int>();
      e.cls = je.at("class").get<int>();
      e.boundary = je.value("boundary", false);
      t.edges.push_back(e);
    }
    for (const auto& jt : j.at("tiles")) {
      PlacedTile tile;
      tile.id = jt.at("id").get<int>();
      tile.kind = jt.at("kind").get<std::string>();
      tile.vertices = jt.at("vertices").get<std::vector<int>>();
      for (const auto& js : jt.at("sides")) {
        TileSide s;
        s.from = js.at("from").get<int>();
        s.to = js.at("to").get<int>();
        s.family = js.at("family").get<int>();
        s.value = js.at("value").get<int>();
        tile.sides.push_back(s);
      }
      t.tiles.push_back(std::move(tile));
    }
  } catch (const json::exception& e) {
    throw MalformedTilingError(std::string("document schema error: ") + e.what());
  }
  t.finalise();
  return t;
}

}  // namespace aperiodic
