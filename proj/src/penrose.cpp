#include "aperiodic/penrose.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace aperiodic {

int class_of_edge(int direction_index) {
  int j = ((direction_index % 10) + 10) % 10;
  return (3 * j) % 5;
}

namespace {

const ExactPoint kPhiRing = ExactPoint::phi();
const ExactPoint kPhiInv = ExactPoint::phi_inv();

ExactPoint along(const ExactPoint& from, const ExactPoint& to) {
  return from + (to - from) * kPhiInv;
}

// +-z^j / +-phi z^j classification of an edge vector
struct EdgeVec {
  bool found = false;
  bool is_long = false;
  int j = 0;  // direction index 0..9 of the +vector
};

EdgeVec classify_edge(const ExactPoint& v) {
  EdgeVec r;
  for (int j = 0; j < 10; ++j) {
    auto u = ExactPoint::unit_pow(j);
    if (v == u) return {true, false, j};
    if (v == kPhiRing * u) return {true, true, j};
  }
  return r;
}

// lattice increment of a unit step z^j: family 3j mod 5, sign (-1)^j
std::pair<int, int> short_delta(int j) {
  j = ((j % 10) + 10) % 10;
  return {(3 * j) % 5, (j % 2 == 0) ? 1 : -1};
}

std::vector<std::pair<int, int>> edge_deltas(const EdgeVec& e) {
  if (!e.is_long) return {short_delta(e.j)};
  return {short_delta(e.j - 1), short_delta(e.j + 1)};
}

double cross2(const ExactPoint& a, const ExactPoint& b) {
  return a.x() * b.y() - a.y() * b.x();
}

}  // namespace

std::pair<std::int64_t, std::int64_t> TrianglePatch::shape_counts() const {
  std::int64_t t = 0, g = 0;
  for (const auto& h : halves) (h.gnomon ? g : t)++;
  return {t, g};
}

std::pair<std::int64_t, std::int64_t> TrianglePatch::role_counts() const {
  auto [t, g] = shape_counts();
  return phase == 0 ? std::make_pair(t, g) : std::make_pair(g, t);
}

TrianglePatch seed_half(bool gnomon) {
  TrianglePatch p;
  HalfTile h;
  h.gnomon = gnomon;
  if (!gnomon) {
    // acute: apex at origin, legs phi, axis v0-v2 along +x
    h.v0 = ExactPoint::zero();
    h.v1 = kPhiRing * ExactPoint::unit_pow(1);
    h.v2 = kPhiRing * ExactPoint::one();
  } else {
    // gnomon: dart apex at origin, wing at phi*z, notch at 1
    h.v0 = ExactPoint::zero();
    h.v1 = kPhiRing * ExactPoint::unit_pow(1);
    h.v2 = ExactPoint::one();
  }
  p.halves.push_back(h);
  return p;
}

TrianglePatch seed_patch(const std::string& kind) {
  if (kind == "sun") {
    // five kites apex-to-apex around the origin
    TrianglePatch p;
    for (int k = 0; k < 5; ++k) {
      auto rot = ExactPoint::unit_pow(2 * k);
      HalfTile h;
      h.gnomon = false;
      h.v0 = ExactPoint::zero();
      h.v1 = kPhiRing * ExactPoint::unit_pow(1) * rot;
      h.v2 = kPhiRing * rot;
      p.halves.push_back(h);
      h.v1 = kPhiRing * ExactPoint::unit_pow(-1) * rot;
      p.halves.push_back(h);
    }
    return p;
  }
  if (kind != "kite" && kind != "dart") throw std::invalid_argument("seed kind must be kite, dart or sun");
  TrianglePatch p = seed_half(kind == "dart");
  HalfTile m = p.halves[0];
  m.v1 = m.v1.conj();  // mirror across the +x axis
  p.halves.push_back(m);
  return p;
}

void robinson_substitute(TrianglePatch& patch, int steps, int max_steps) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (patch.half_steps + steps > max_steps)
    throw std::invalid_argument("substitution beyond the configured maximum of " +
                                std::to_string(max_steps) + " steps");
  for (int s = 0; s < steps; ++s) {
    std::vector<HalfTile> next;
    next.reserve(patch.halves.size() * 2);
    for (const auto& h : patch.halves) {
      if (patch.phase == 0 && !h.gnomon) {
        // cut the acute: D on the leg v0-v2
        ExactPoint d = along(h.v0, h.v2);
        next.push_back({false, h.v1, h.v2, d});
        next.push_back({true, h.v1, h.v0, d});
      } else if (patch.phase == 1 && h.gnomon) {
        // cut the gnomon: E on the base v0-v1
        ExactPoint e = along(h.v0, h.v1);
        next.push_back({false, h.v0, e, h.v2});
        next.push_back({true, h.v1, h.v2, e});
      } else {
        next.push_back(h);
      }
    }
    patch.halves = std::move(next);
    patch.phase ^= 1;
    ++patch.half_steps;
    if (patch.half_steps % 2 == 0) {
      for (auto& h : patch.halves) {
        h.v0 = h.v0 * kPhiRing;
        h.v1 = h.v1 * kPhiRing;
        h.v2 = h.v2 * kPhiRing;
      }
    }
  }
}

Tiling assemble_p2(const TrianglePatch& patch) {
  if (patch.phase != 0)
    throw std::invalid_argument("assembly requires an even number of half-steps");

  // A full tile is a mirror pair of same-kind halves sharing a leg (a
  // non-base edge).  Candidate mates are resolved by unique-candidate
  // propagation; residual ambiguous fans are split deterministically.
  using Key = std::pair<ExactPoint, ExactPoint>;
  auto mk = [](const ExactPoint& a, const ExactPoint& b) {
    return b < a ? Key{b, a} : Key{a, b};
  };
  const int nh = static_cast<int>(patch.halves.size());
  // legs: acute (v0,v1), (v0,v2); gnomon (v0,v2), (v1,v2); base excluded
  auto legs_of = [&](const HalfTile& h) -> std::array<Key, 2> {
    if (!h.gnomon) return {mk(h.v0, h.v1), mk(h.v0, h.v2)};
    return {mk(h.v0, h.v2), mk(h.v1, h.v2)};
  };
  std::map<Key, std::vector<int>> leg_inc[2];
  for (int i = 0; i < nh; ++i) {
    const auto& h = patch.halves[i];
    for (const auto& k : legs_of(h)) leg_inc[h.gnomon ? 1 : 0][k].push_back(i);
  }
  // patch-boundary contact per half (any of its three edges unshared)
  std::map<Key, int> edge_cnt;
  for (const auto& h : patch.halves) {
    edge_cnt[mk(h.v0, h.v1)]++;
    edge_cnt[mk(h.v1, h.v2)]++;
    edge_cnt[mk(h.v0, h.v2)]++;
  }
  auto touches_boundary = [&](int i) {
    const auto& h = patch.halves[i];
    return edge_cnt[mk(h.v0, h.v1)] == 1 || edge_cnt[mk(h.v1, h.v2)] == 1 ||
           edge_cnt[mk(h.v0, h.v2)] == 1;
  };

  // candidate-mate graph has degree <= 2: decompose into paths and cycles,
  // then match each component, preferring to orphan boundary halves
  std::vector<std::vector<std::pair<int, Key>>> cand(nh);
  for (int i = 0; i < nh; ++i) {
    const auto& h = patch.halves[i];
    for (const auto& k : legs_of(h))
      for (int o : leg_inc[h.gnomon ? 1 : 0][k])
        if (o != i) cand[i].emplace_back(o, k);
  }
  std::vector<int> mate(nh, -1);
  std::vector<Key> mate_leg(nh);
  auto pair_up = [&](int a, int b) {
    mate[a] = b;
    mate[b] = a;
    for (const auto& [o, k] : cand[a])
      if (o == b) {
        mate_leg[a] = mate_leg[b] = k;
        return;
      }
    throw std::logic_error("paired halves share no leg");
  };
  std::vector<char> comp_seen(nh, 0);
  auto trace_chain = [&](int head) {
    std::vector<int> chain{head};
    comp_seen[head] = 1;
    int cur = head;
    while (true) {
      int next = -1;
      for (const auto& [o, k] : cand[cur]) {
        (void)k;
        if (!comp_seen[o]) next = o;
      }
      if (next == -1) break;
      comp_seen[next] = 1;
      chain.push_back(next);
      cur = next;
    }
    return chain;
  };
  auto match_chain = [&](const std::vector<int>& chain, bool cycle) {
    int len = static_cast<int>(chain.size());
    if (len % 2 == 0) {
      for (int i = 0; i + 1 < len; i += 2) pair_up(chain[i], chain[i + 1]);
      return;
    }
    if (cycle) throw std::logic_error("odd mate cycle in half-tile pairing");
    // odd path: orphan one even-position node, preferring a boundary half
    int drop_pos = 0;
    for (int i = 0; i < len; i += 2)
      if (touches_boundary(chain[i])) {
        drop_pos = i;
        break;
      }
    for (int i = 0; i + 1 < drop_pos; i += 2) pair_up(chain[i], chain[i + 1]);
    for (int i = drop_pos + 1; i + 1 < len; i += 2) pair_up(chain[i], chain[i + 1]);
  };
  // path components first (from their degree-1 endpoints), then cycles
  for (int s = 0; s < nh; ++s)
    if (!comp_seen[s] && cand[s].size() == 1) match_chain(trace_chain(s), false);
  for (int s = 0; s < nh; ++s)
    if (!comp_seen[s] && !cand[s].empty()) match_chain(trace_chain(s), true);

  struct FullTile {
    bool dart;
    ExactPoint a, b, c, d;  // cycle apex, wing, far/notch, wing
  };
  std::vector<FullTile> fulls;
  int trimmed = 0;
  for (int i = 0; i < nh; ++i) {
    if (mate[i] == -1) {
      ++trimmed;
      continue;
    }
    if (mate[i] < i) continue;
    const auto& h1 = patch.halves[i];
    const auto& h2 = patch.halves[mate[i]];
    const Key& leg = mate_leg[i];
    FullTile f;
    f.dart = h1.gnomon;
    // the tile apex: for acutes the shared v0; for gnomons the shared
    // leg endpoint that is not the 108-degree vertex v2
    if (!h1.gnomon) {
      f.a = h1.v0;
    } else {
      f.a = (leg.first == h1.v2) ? leg.second : leg.first;
    }
    f.c = (leg.first == f.a) ? leg.second : leg.first;
    auto third = [](const HalfTile& h, const Key& k) {
      for (const auto& p : {h.v0, h.v1, h.v2})
        if (!(p == k.first) && !(p == k.second)) return p;
      throw std::logic_error("degenerate half tile");
    };
    ExactPoint y1 = third(h1, leg), y2 = third(h2, leg);
    if (cross2(y1 - f.a, f.c - f.a) < 0) {
      f.b = y1;
      f.d = y2;
    } else {
      f.b = y2;
      f.d = y1;
    }
    fulls.push_back(f);
  }

  // deterministic tile order: by (a, c, kind) exact coordinates
  std::sort(fulls.begin(), fulls.end(), [](const FullTile& x, const FullTile& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    if (!(x.c == y.c)) return x.c < y.c;
    return x.dart < y.dart;
  });

  std::map<ExactPoint, int> vid;
  for (const auto& f : fulls) {
    vid.emplace(f.a, 0);
    vid.emplace(f.b, 0);
    vid.emplace(f.c, 0);
    vid.emplace(f.d, 0);
  }
  int next_id = 0;
  for (auto& [p, id] : vid) id = next_id++;

  Tiling out;
  out.model = "p2";
  out.families = 5;
  out.dim = 2;
  out.metadata["half_steps"] = patch.half_steps;
  out.metadata["trimmed_halves"] = trimmed;

  out.vertices.resize(vid.size());
  for (const auto& [p, id] : vid) {
    TilingVertex v;
    v.id = id;
    v.pos = {0.4 * p.x(), 0.4 * p.y()};
    out.vertices[id] = std::move(v);
  }

  std::map<std::pair<int, int>, int> edge_ids;
  std::map<std::pair<int, int>, ExactPoint> edge_vecs;  // keyed u<v, vector u->v
  auto add_edge = [&](int u, int v, const ExactPoint& pu, const ExactPoint& pv) {
    int a = std::min(u, v), b = std::max(u, v);
    auto it = edge_ids.find({a, b});
    if (it != edge_ids.end()) return it->second;
    ExactPoint vec = (a == u) ? pv - pu : pu - pv;
    auto cls = classify_edge(vec);
    if (!cls.found) throw std::logic_error("edge vector is not a P2 edge");
    TilingEdge e;
    e.u = a;
    e.v = b;
    e.cls = class_of_edge(cls.j);
    int id = static_cast<int>(out.edges.size());
    edge_ids[{a, b}] = id;
    edge_vecs[{a, b}] = vec;
    out.edges.push_back(e);
    return id;
  };

  int tile_id = 0;
  for (const auto& f : fulls) {
    PlacedTile pt;
    pt.id = tile_id++;
    pt.kind = f.dart ? "dart" : "kite";
    std::array<ExactPoint, 4> cyc{f.a, f.b, f.c, f.d};
    for (const auto& p : cyc) pt.vertices.push_back(vid.at(p));
    for (int i = 0; i < 4; ++i) {
      const auto& pu = cyc[i];
      const auto& pv = cyc[(i + 1) % 4];
      int u = pt.vertices[i], v = pt.vertices[(i + 1) % 4];
      add_edge(u, v, pu, pv);
      auto ev = classify_edge(pv - pu);
      if (!ev.found) throw std::logic_error("tile side is not a P2 edge vector");
      for (auto [family, value] : edge_deltas(ev))
        pt.sides.push_back({u, v, family, value});
    }
    out.tiles.push_back(std::move(pt));
  }

  out.finalise();

  // integer lattice lift: integrate the side increments from the root
  if (!out.vertices.empty()) {
    int n = static_cast<int>(out.vertices.size());
    std::vector<std::array<std::int64_t, 5>> tup(n, {0, 0, 0, 0, 0});
    std::vector<char> seen(n, 0);
    // deterministic root: vertex nearest the origin
    int root = 0;
    double best = 1e300;
    for (const auto& v : out.vertices) {
      double d = v.pos[0] * v.pos[0] + v.pos[1] * v.pos[1];
      if (d < best - 1e-12) {
        best = d;
        root = v.id;
      }
    }
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other, edge id)
    for (int e = 0; e < static_cast<int>(out.edges.size()); ++e) {
      adj[out.edges[e].u].emplace_back(out.edges[e].v, e);
      adj[out.edges[e].v].emplace_back(out.edges[e].u, e);
    }
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [w, eid] : adj[u]) {
        if (seen[w]) continue;
        const auto& e = out.edges[eid];
        int su = (e.u == u) ? 1 : -1;
        auto vec = edge_vecs.at({e.u, e.v});
        auto cls = classify_edge(vec);
        tup[w] = tup[u];
        for (auto [family, value] : edge_deltas(cls)) tup[w][family] += su * value;
        seen[w] = 1;
        q.push(w);
      }
    }
    for (auto& v : out.vertices)
      if (seen[v.id]) v.tuple.assign(tup[v.id].begin(), tup[v.id].end());
  }
  return out;
}

std::vector<CrossingEntry> canonical_crossing_table() {
  std::vector<CrossingEntry> table;
  for (int kind = 0; kind < 2; ++kind) {
    for (int chi = 0; chi < 2; ++chi) {
      // unit tile at orientation 0: apex at origin, axis along +x
      ExactPoint a = ExactPoint::zero();
      ExactPoint b = kPhiRing * ExactPoint::unit_pow(1);
      ExactPoint c = kind == 0 ? kPhiRing * ExactPoint::one() : ExactPoint::one();
      ExactPoint d = b.conj();
      std::array<ExactPoint, 4> cyc{a, b, c, d};
      if (chi == 1)
        for (auto& p : cyc) p = p.conj();
      for (int slot = 0; slot < 4; ++slot) {
        auto vec = cyc[(slot + 1) % 4] - cyc[slot];
        auto cls = classify_edge(vec);
        if (!cls.found) throw std::logic_error("prototile side is not a P2 edge vector");
        for (auto [family, value] : edge_deltas(cls))
          table.push_back({kind == 0 ? "kite" : "dart", chi, slot, family, value});
      }
    }
  }
  return table;
}

std::string crossing_table_text(const std::vector<CrossingEntry>& table) {
  std::ostringstream os;
  os << "# p2 crossing table v1\n";
  os << "# kind chirality slot family sign\n";
  for (const auto& e : table)
    os << e.kind << " " << e.chirality << " " << e.slot << " " << e.family << " " << e.sign
       << "\n";
  return os.str();
}

std::vector<CrossingEntry> parse_crossing_table(const std::string& text) {
  std::vector<CrossingEntry> table;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    CrossingEntry e;
    if (!(ls >> e.kind >> e.chirality >> e.slot >> e.family >> e.sign))
      throw std::invalid_argument("bad crossing table line: " + line);
    table.push_back(e);
  }
  return table;
}

}  // namespace aperiodic
