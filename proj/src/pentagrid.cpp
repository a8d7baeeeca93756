#include "aperiodic/pentagrid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

namespace aperiodic {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSingularTol = 1e-9;
}  // namespace

std::array<double, 2> pentagrid_normal(int k) {
  return {std::cos(2 * kPi * k / 5.0), std::sin(2 * kPi * k / 5.0)};
}

void PentagridParams::check() const {
  Rational s(0, 1);
  for (const auto& g : gamma) s = s + g;
  if (!s.is_integer())
    throw std::invalid_argument("pentagrid offsets must sum to an integer");
  if (radius <= 0) throw std::invalid_argument("pentagrid radius must be positive");
}

std::int64_t strip_index(const std::array<double, 2>& p, int family,
                         const PentagridParams& params) {
  auto n = pentagrid_normal(family);
  double t = p[0] * n[0] + p[1] * n[1] + params.gamma[family].value();
  double nearest = std::round(t);
  if (std::abs(t - nearest) < kSingularTol)
    throw SingularGridError("point lies on a grid line of family " + std::to_string(family) +
                            "; perturb the offsets (e.g. add 1e-4 to gamma_" +
                            std::to_string(family) + ")");
  return static_cast<std::int64_t>(std::ceil(t));
}

std::array<double, 2> reconstruct_vertex(const std::array<std::int64_t, 5>& tuple) {
  double x = 0, y = 0;
  for (int k = 0; k < 5; ++k) {
    auto n = pentagrid_normal(k);
    x += static_cast<double>(tuple[k]) * n[0];
    y += static_cast<double>(tuple[k]) * n[1];
  }
  return {0.4 * x, 0.4 * y};
}

namespace {

using Tuple5 = std::array<std::int64_t, 5>;

struct RawTile {
  std::array<Tuple5, 4> corners;  // cyclic order
  int cj, ck;                     // the two classes spanned
};

}  // namespace

Tiling generate_pentagrid(const PentagridParams& params) {
  params.check();
  const double R = params.radius;
  const double line_range = R + 2.5;

  std::array<std::array<double, 2>, 5> n;
  std::array<double, 5> g;
  for (int k = 0; k < 5; ++k) {
    n[k] = pentagrid_normal(k);
    g[k] = params.gamma[k].value();
  }

  std::vector<RawTile> raw;
  for (int j = 0; j < 5; ++j) {
    for (int k = j + 1; k < 5; ++k) {
      double det = n[j][0] * n[k][1] - n[j][1] * n[k][0];
      auto pmin = static_cast<std::int64_t>(std::floor(-line_range + g[j]));
      auto pmax = static_cast<std::int64_t>(std::ceil(line_range + g[j]));
      auto qmin = static_cast<std::int64_t>(std::floor(-line_range + g[k]));
      auto qmax = static_cast<std::int64_t>(std::ceil(line_range + g[k]));
      for (std::int64_t p = pmin; p <= pmax; ++p) {
        for (std::int64_t q = qmin; q <= qmax; ++q) {
          // intersection of x.n_j + g_j = p with x.n_k + g_k = q
          double a = static_cast<double>(p) - g[j];
          double b = static_cast<double>(q) - g[k];
          double x = (a * n[k][1] - b * n[j][1]) / det;
          double y = (b * n[j][0] - a * n[k][0]) / det;
          if (x * x + y * y > line_range * line_range) continue;
          Tuple5 base{};
          base[j] = p;
          base[k] = q;
          for (int r = 0; r < 5; ++r) {
            if (r == j || r == k) continue;
            double t = x * n[r][0] + y * n[r][1] + g[r];
            double nearest = std::round(t);
            if (std::abs(t - nearest) < kSingularTol)
              throw SingularGridError(
                  "singular pentagrid: lines " + std::to_string(j) + "," + std::to_string(k) +
                  "," + std::to_string(r) + " meet at one point; perturb the offsets");
            base[r] = static_cast<std::int64_t>(std::ceil(t));
          }
          RawTile rt;
          rt.cj = j;
          rt.ck = k;
          rt.corners[0] = base;
          rt.corners[1] = base;
          rt.corners[1][j] += 1;
          rt.corners[2] = base;
          rt.corners[2][j] += 1;
          rt.corners[2][k] += 1;
          rt.corners[3] = base;
          rt.corners[3][k] += 1;
          // keep rhombi whose centre lies inside the requested radius
          double cx = 0, cy = 0;
          for (const auto& c : rt.corners) {
            auto pos = reconstruct_vertex(c);
            cx += pos[0] / 4;
            cy += pos[1] / 4;
          }
          if (cx * cx + cy * cy > R * R) continue;
          // counterclockwise orientation
          if (det < 0) std::reverse(rt.corners.begin() + 1, rt.corners.end());
          raw.push_back(rt);
        }
      }
    }
  }

  // vertex table in deterministic (lexicographic tuple) order
  std::map<Tuple5, int> vid;
  for (const auto& t : raw)
    for (const auto& c : t.corners) vid.emplace(c, 0);
  {
    int next = 0;
    for (auto& [tup, id] : vid) id = next++;
  }

  // resolve connectivity: keep the component of the vertex nearest origin
  auto nearest_origin = [&](const std::map<Tuple5, int>& table) {
    double best = 1e300;
    Tuple5 bt{};
    for (const auto& [tup, id] : table) {
      auto pos = reconstruct_vertex(tup);
      double d = pos[0] * pos[0] + pos[1] * pos[1];
      if (d < best - 1e-12 || (std::abs(d - best) <= 1e-12 && tup < bt)) {
        best = d;
        bt = tup;
      }
    }
    return bt;
  };
  Tuple5 root_tuple = nearest_origin(vid);

  // adjacency over raw tiles for the component filter
  {
    std::map<Tuple5, std::vector<int>> vert_tiles;
    for (int i = 0; i < static_cast<int>(raw.size()); ++i)
      for (const auto& c : raw[i].corners) vert_tiles[c].push_back(i);
    std::set<Tuple5> seen{root_tuple};
    std::queue<Tuple5> q;
    q.push(root_tuple);
    std::vector<char> tile_keep(raw.size(), 0);
    while (!q.empty()) {
      Tuple5 v = q.front();
      q.pop();
      auto it = vert_tiles.find(v);
      if (it == vert_tiles.end()) continue;
      for (int ti : it->second) {
        tile_keep[ti] = 1;
        for (const auto& c : raw[ti].corners)
          if (seen.insert(c).second) q.push(c);
      }
    }
    std::vector<RawTile> kept;
    for (int i = 0; i < static_cast<int>(raw.size()); ++i)
      if (tile_keep[i]) kept.push_back(raw[i]);
    raw = std::move(kept);
    vid.clear();
    for (const auto& t : raw)
      for (const auto& c : t.corners) vid.emplace(c, 0);
    int next = 0;
    for (auto& [tup, id] : vid) id = next++;
  }

  // normalise tuples at the root vertex
  root_tuple = nearest_origin(vid);
  std::map<Tuple5, int> norm_vid;
  for (const auto& [tup, id] : vid) {
    Tuple5 s;
    for (int r = 0; r < 5; ++r) s[r] = tup[r] - root_tuple[r];
    norm_vid.emplace(s, 0);
  }
  {
    int next = 0;
    for (auto& [tup, id] : norm_vid) id = next++;
  }

  Tiling out;
  out.model = "pentagrid";
  out.families = 5;
  out.dim = 2;
  out.metadata["radius"] = params.radius;
  {
    nlohmann::json offs = nlohmann::json::array();
    for (const auto& gm : params.gamma)
      offs.push_back(std::to_string(gm.num) + "/" + std::to_string(gm.den));
    out.metadata["offsets"] = offs;
  }

  out.vertices.resize(norm_vid.size());
  for (const auto& [tup, id] : norm_vid) {
    TilingVertex v;
    v.id = id;
    v.tuple.assign(tup.begin(), tup.end());
    auto pos = reconstruct_vertex(tup);
    v.pos = {pos[0], pos[1]};
    out.vertices[id] = std::move(v);
  }

  auto lookup = [&](const Tuple5& t) {
    Tuple5 s;
    for (int r = 0; r < 5; ++r) s[r] = t[r] - root_tuple[r];
    return std::make_pair(norm_vid.at(s), s);
  };

  std::map<std::pair<int, int>, int> edge_ids;
  auto add_edge = [&](int u, int v, int cls) {
    int a = std::min(u, v), b = std::max(u, v);
    auto it = edge_ids.find({a, b});
    if (it != edge_ids.end()) return it->second;
    TilingEdge e;
    e.u = a;
    e.v = b;
    e.cls = cls;
    int id = static_cast<int>(out.edges.size());
    edge_ids[{a, b}] = id;
    out.edges.push_back(e);
    return id;
  };

  int tile_id = 0;
  for (const auto& t : raw) {
    PlacedTile pt;
    pt.id = tile_id++;
    pt.kind = "rhombus:" + std::to_string(t.cj) + ":" + std::to_string(t.ck);
    std::array<Tuple5, 4> norm;
    for (int i = 0; i < 4; ++i) {
      auto [id, s] = lookup(t.corners[i]);
      pt.vertices.push_back(id);
      norm[i] = s;
    }
    for (int i = 0; i < 4; ++i) {
      int a = pt.vertices[i], b = pt.vertices[(i + 1) % 4];
      const Tuple5 &ta = norm[i], &tb = norm[(i + 1) % 4];
      int cls = -1;
      for (int r = 0; r < 5; ++r)
        if (ta[r] != tb[r]) cls = r;
      add_edge(a, b, cls);
      for (int r = 0; r < 5; ++r) {
        std::int64_t dv = tb[r] - ta[r];
        if (dv != 0) {
          TileSide s;
          s.from = a;
          s.to = b;
          s.family = r;
          s.value = static_cast<int>(dv);
          pt.sides.push_back(s);
        }
      }
    }
    out.tiles.push_back(std::move(pt));
  }

  out.finalise();
  return out;
}

AffineConstraintReport affine_constraint_report(const Tiling& t) {
  AffineConstraintReport rep;
  for (const auto& v : t.vertices) {
    if (v.tuple.empty()) continue;
    std::int64_t s = 0, a = 0;
    for (int k = 0; k < static_cast<int>(v.tuple.size()); ++k) {
      s += v.tuple[k];
      a += (k % 2 == 0 ? 1 : -1) * v.tuple[k];
    }
    rep.sum_values.insert(s);
    rep.alternating_values.insert(a);
  }
  return rep;
}

}  // namespace aperiodic
