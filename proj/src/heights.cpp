#include "aperiodic/heights.hpp"

#include <algorithm>
#include <cmath>

#include "aperiodic/pentagrid.hpp"

namespace aperiodic {

using nlohmann::json;

json HeightAtlas::to_json() const {
  json j;
  j["root"] = root;
  json hs = json::object();
  int n = heights.empty() ? 0 : static_cast<int>(heights[0].size());
  for (int v = 0; v < n; ++v) hs[std::to_string(v)] = tuple(v);
  j["heights"] = hs;
  return j;
}

int default_root(const Tiling& t) {
  int best = 0;
  double bd = 1e300;
  for (const auto& v : t.vertices) {
    double d = 0;
    for (double p : v.pos) d += p * p;
    bool better = d < bd - 1e-12;
    if (!better && std::abs(d - bd) <= 1e-12) {
      if (!v.tuple.empty() && !t.vertices[best].tuple.empty())
        better = v.tuple < t.vertices[best].tuple;
    }
    if (better) {
      best = v.id;
      bd = d;
    }
  }
  return best;
}

std::variant<PotentialMap, ClosureWitness> height_function(const Tiling& t, int family,
                                                           int root) {
  Graph g = t.graph();
  auto c = t.family_cochain(family);
  return build_potential(g, c, root);
}

std::variant<HeightAtlas, AtlasFailure> height_atlas(const Tiling& t, int root) {
  HeightAtlas atlas;
  atlas.root = root;
  atlas.families = t.families;
  AtlasFailure fail;
  Graph g = t.graph();
  for (int k = 0; k < t.families; ++k) {
    auto c = t.family_cochain(k);
    auto r = build_potential(g, c, root);
    if (std::holds_alternative<PotentialMap>(r)) {
      atlas.heights.push_back(std::move(std::get<PotentialMap>(r).height));
    } else {
      fail.witnesses.emplace(k, std::get<ClosureWitness>(r));
    }
  }
  if (!fail.witnesses.empty()) return fail;
  return atlas;
}

std::optional<std::pair<int, int>> injectivity_check(const HeightAtlas& atlas) {
  if (atlas.heights.empty()) return std::nullopt;
  int n = static_cast<int>(atlas.heights[0].size());
  std::map<std::vector<std::int64_t>, int> seen;
  for (int v = 0; v < n; ++v) {
    auto [it, fresh] = seen.emplace(atlas.tuple(v), v);
    if (!fresh) return std::make_pair(it->second, v);
  }
  return std::nullopt;
}

double reconstruction_check(const HeightAtlas& atlas, const Tiling& t) {
  double worst = 0;
  const auto& rootpos = t.vertices[atlas.root].pos;
  for (const auto& v : t.vertices) {
    std::array<std::int64_t, 5> tup{};
    for (int k = 0; k < std::min(5, atlas.families); ++k) tup[k] = atlas.heights[k][v.id];
    auto rec = reconstruct_vertex(tup);
    double dx = (v.pos[0] - rootpos[0]) - rec[0];
    double dy = (v.pos[1] - rootpos[1]) - rec[1];
    worst = std::max(worst, std::hypot(dx, dy));
  }
  return worst;
}

}  // namespace aperiodic
