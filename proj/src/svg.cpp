#include "aperiodic/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace aperiodic {

namespace {
constexpr double kPi = 3.14159265358979323846;

const char* kKindFill(const std::string& kind) {
  if (kind == "kite") return "#cfe8ff";
  if (kind == "dart") return "#ffd9b0";
  if (kind.rfind("rhombus:", 0) == 0 || kind.rfind("face:", 0) == 0) {
    // alternate by class parity for a readable thick/thin contrast
    return nullptr;
  }
  return "#e8e8e8";
}
}  // namespace

std::string render_svg(const Tiling& t, const SvgOptions& opt) {
  if (t.dim != 2) throw std::invalid_argument("svg rendering needs a planar tiling");
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (const auto& v : t.vertices) {
    minx = std::min(minx, v.pos[0]);
    maxx = std::max(maxx, v.pos[0]);
    miny = std::min(miny, v.pos[1]);
    maxy = std::max(maxy, v.pos[1]);
  }
  if (t.vertices.empty()) minx = miny = maxx = maxy = 0;
  double pad = 0.05 * std::max(maxx - minx, maxy - miny) + 0.1;
  double scale = 800.0 / std::max(1e-9, std::max(maxx - minx, maxy - miny) + 2 * pad);
  auto X = [&](double x) { return (x - minx + pad) * scale; };
  auto Y = [&](double y) { return (maxy + pad - y) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\">\n";
  for (const auto& tile : t.tiles) {
    os << "<polygon points=\"";
    for (int vid : tile.vertices)
      os << X(t.vertices[vid].pos[0]) << "," << Y(t.vertices[vid].pos[1]) << " ";
    const char* fill = kKindFill(tile.kind);
    std::string f;
    if (fill == nullptr) {
      bool thick = tile.kind.size() >= 2 &&
                   ((tile.kind.back() - tile.kind[tile.kind.size() - 3]) % 2 != 0);
      f = thick ? "#cfe8ff" : "#ffd9b0";
      fill = f.c_str();
    }
    os << "\" fill=\"" << fill << "\" stroke=\"#444\" stroke-width=\"0.6\"/>\n";
  }
  if (opt.draw_bars) {
    for (const auto& e : t.edges) {
      const auto& a = t.vertices[e.u].pos;
      const auto& b = t.vertices[e.v].pos;
      double mx = (a[0] + b[0]) / 2, my = (a[1] + b[1]) / 2;
      // chord perpendicular to the family normal n_k
      double ang = 2 * kPi * e.cls / t.families + kPi / 2;
      double len = 0.2 * std::hypot(b[0] - a[0], b[1] - a[1]);
      double dx = std::cos(ang) * len, dy = std::sin(ang) * len;
      os << "<line x1=\"" << X(mx - dx) << "\" y1=\"" << Y(my - dy) << "\" x2=\"" << X(mx + dx)
         << "\" y2=\"" << Y(my + dy) << "\" stroke=\"#3366aa\" stroke-width=\"0.5\"/>\n";
    }
  }
  for (const auto& v : opt.violations) {
    const auto& a = t.vertices[v.u].pos;
    const auto& b = t.vertices[v.v].pos;
    os << "<line x1=\"" << X(a[0]) << "\" y1=\"" << Y(a[1]) << "\" x2=\"" << X(b[0]) << "\" y2=\""
       << Y(b[1]) << "\" stroke=\"#d00000\" stroke-width=\"3\"/>\n";
    os << "<text x=\"" << X((a[0] + b[0]) / 2) << "\" y=\"" << Y((a[1] + b[1]) / 2)
       << "\" font-size=\"12\" fill=\"#d00000\">k=" << v.family << "</text>\n";
  }
  if (opt.colour_family >= 0 && opt.colour_family < static_cast<int>(opt.heights.size())) {
    const auto& h = opt.heights[opt.colour_family];
    std::int64_t lo = 0, hi = 1;
    if (!h.empty()) {
      lo = *std::min_element(h.begin(), h.end());
      hi = std::max(lo + 1, *std::max_element(h.begin(), h.end()));
    }
    for (const auto& v : t.vertices) {
      double f = static_cast<double>(h[v.id] - lo) / static_cast<double>(hi - lo);
      int hue = static_cast<int>(240 * (1 - f));
      os << "<circle cx=\"" << X(v.pos[0]) << "\" cy=\"" << Y(v.pos[1])
         << "\" r=\"2.5\" fill=\"hsl(" << hue << ",90%,45%)\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace aperiodic
