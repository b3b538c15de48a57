#include "pentaheesch/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace pentaheesch {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", std::abs(v) < 5e-7 ? 0.0 : v);  // no "-0.000000"
  return buf;
}

const char* layer_stroke(std::size_t layer) {
  static const char* colours[] = {"#1f4e9c", "#b3541e", "#2f7d32", "#7b2d8e"};
  return colours[layer % 4];
}

}  // namespace

std::string render_svg(const Pentagon& p, const Patch& patch) {
  const double s = 100.0 / p.longest_edge();
  struct Item {
    std::vector<Point> pts;
    int layer;  // -1 kernel
  };
  std::vector<Item> items;
  auto push = [&](const Placement& pl, int layer) {
    Item it{{}, layer};
    const ConvexPolygon poly = placed_polygon(p, pl);
    for (const Point& v : poly.vertices()) it.pts.push_back(Point{v.x * s, -v.y * s});
    items.push_back(std::move(it));
  };
  for (const Placement& pl : patch.kernel) push(pl, -1);
  for (std::size_t l = 0; l < patch.layers.size(); ++l) {
    for (const Placement& pl : patch.layers[l]) push(pl, static_cast<int>(l));
  }

  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  for (const Item& it : items) {
    for (const Point& q : it.pts) {
      min_x = std::min(min_x, q.x);
      min_y = std::min(min_y, q.y);
      max_x = std::max(max_x, q.x);
      max_y = std::max(max_y, q.y);
    }
  }
  if (items.empty()) min_x = min_y = max_x = max_y = 0.0;
  const double margin = 10.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(min_x - margin) << ' ' << fmt(min_y - margin)
      << ' ' << fmt(max_x - min_x + 2 * margin) << ' ' << fmt(max_y - min_y + 2 * margin) << "\">\n";
  for (const Item& it : items) {
    out << "  <polygon class=\"" << (it.layer < 0 ? "kernel" : "layer" + std::to_string(it.layer + 1))
        << "\" points=\"";
    for (std::size_t k = 0; k < it.pts.size(); ++k) {
      if (k) out << ' ';
      out << fmt(it.pts[k].x) << ',' << fmt(it.pts[k].y);
    }
    if (it.layer < 0) {
      out << "\" fill=\"#bdbdbd\" stroke=\"#000000\" stroke-width=\"1.000000\"/>\n";
    } else {
      out << "\" fill=\"none\" stroke=\"" << layer_stroke(static_cast<std::size_t>(it.layer))
          << "\" stroke-width=\"1.000000\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pentaheesch
