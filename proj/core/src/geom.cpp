#include "pentaheesch/geom.hpp"

#include <algorithm>
#include <limits>

namespace pentaheesch {

double normalize_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

void BBox::expand(const BBox& o) {
  min_x = std::min(min_x, o.min_x);
  min_y = std::min(min_y, o.min_y);
  max_x = std::max(max_x, o.max_x);
  max_y = std::max(max_y, o.max_y);
}

Isometry Isometry::make(double rotation, Point translation, bool reflected) {
  return Isometry{normalize_angle(rotation), translation, reflected};
}

Point Isometry::apply_linear(Point v) const {
  if (reflected) v.y = -v.y;
  const double c = std::cos(rotation), s = std::sin(rotation);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Point Isometry::apply(Point p) const { return apply_linear(p) + translation; }

double Isometry::apply_heading(double angle) const {
  return normalize_angle(reflected ? rotation - angle : rotation + angle);
}

Isometry Isometry::compose(const Isometry& inner) const {
  const double rot = reflected ? rotation - inner.rotation : rotation + inner.rotation;
  return make(rot, apply(inner.translation), reflected != inner.reflected);
}

Isometry Isometry::inverse() const {
  // p = S^r R(-theta) (q - t). With a reflection S R(-theta) = R(theta) S.
  if (reflected) {
    Isometry lin = make(rotation, {0.0, 0.0}, true);
    return make(rotation, -1.0 * lin.apply_linear(translation), true);
  }
  Isometry lin = make(-rotation, {0.0, 0.0}, false);
  return make(-rotation, -1.0 * lin.apply_linear(translation), false);
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw GeometryError("convex polygon needs at least 3 vertices");
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    scale = std::max(scale, distance(vertices[i], vertices[(i + 1) % n]));
  }
  if (!(scale > 0.0)) throw GeometryError("degenerate polygon");
  double sign = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices[(i + n - 1) % n], b = vertices[i], c = vertices[(i + 1) % n];
    if (distance(a, b) <= kCoincideTol * scale) throw GeometryError("repeated vertex");
    const double turn = cross(b - a, c - b) / (distance(a, b) * distance(b, c));
    if (std::abs(turn) < 1e-12) throw GeometryError("collinear vertices; polygon not strictly convex");
    if (sign == 0.0) sign = turn;
    if (sign * turn < 0.0) throw GeometryError("polygon is not convex");
  }
  // A star polygon passes the local turn test; require total turning 2*pi.
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices[(i + n - 1) % n], b = vertices[i], c = vertices[(i + 1) % n];
    total += std::atan2(cross(b - a, c - b), dot(b - a, c - b));
  }
  if (std::abs(std::abs(total) - kTwoPi) > 1e-6) throw GeometryError("polygon is self-intersecting");
  ConvexPolygon p;
  p.vertices_ = std::move(vertices);
  return p;
}

double ConvexPolygon::signed_area() const {
  double a = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) a += cross(vertices_[i], vertices_[(i + 1) % n]);
  return 0.5 * a;
}

ConvexPolygon ConvexPolygon::ccw() const {
  if (is_ccw()) return *this;
  ConvexPolygon p = *this;
  std::reverse(p.vertices_.begin(), p.vertices_.end());
  return p;
}

BBox ConvexPolygon::bbox() const {
  BBox b{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Point& v : vertices_) {
    b.min_x = std::min(b.min_x, v.x);
    b.min_y = std::min(b.min_y, v.y);
    b.max_x = std::max(b.max_x, v.x);
    b.max_y = std::max(b.max_y, v.y);
  }
  return b;
}

Point ConvexPolygon::centroid() const {
  const std::size_t n = vertices_.size();
  double a = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = vertices_[i], q = vertices_[(i + 1) % n];
    const double w = cross(p, q);
    a += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {cx / (3.0 * a), cy / (3.0 * a)};
}

double ConvexPolygon::edge_length(std::size_t i) const {
  return distance(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
}

double ConvexPolygon::interior_angle(std::size_t i) const {
  const std::size_t n = vertices_.size();
  const Point b = vertices_[i];
  const Point u = vertices_[(i + 1) % n] - b, w = vertices_[(i + n - 1) % n] - b;
  return std::atan2(std::abs(cross(u, w)), dot(u, w));
}

double ConvexPolygon::longest_edge() const {
  double m = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) m = std::max(m, edge_length(i));
  return m;
}

ConvexPolygon apply_isometry(const Isometry& g, const ConvexPolygon& p) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (const Point& v : p.vertices()) out.push_back(g.apply(v));
  return ConvexPolygon::from_vertices(std::move(out));
}

namespace {

bool separated_on_axes(std::span<const Point> a, std::span<const Point> b, double slack) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point e = a[(i + 1) % n] - a[i];
    const Point axis{-e.y, e.x};
    const double len = norm(axis);
    double amin = std::numeric_limits<double>::infinity(), amax = -amin;
    double bmin = amin, bmax = -amin;
    for (const Point& v : a) {
      const double d = dot(v, axis) / len;
      amin = std::min(amin, d);
      amax = std::max(amax, d);
    }
    for (const Point& v : b) {
      const double d = dot(v, axis) / len;
      bmin = std::min(bmin, d);
      bmax = std::max(bmax, d);
    }
    if (amax <= bmin + slack || bmax <= amin + slack) return true;
  }
  return false;
}

double polygon_area(const std::vector<Point>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) a += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * a;
}

}  // namespace

double overlap_area(const ConvexPolygon& p_in, const ConvexPolygon& q_in) {
  const ConvexPolygon p = p_in.ccw(), q = q_in.ccw();
  const double scale = std::max(p.longest_edge(), q.longest_edge());
  const double slack = 1e-9 * scale;
  if (separated_on_axes(p.vertices(), q.vertices(), slack) ||
      separated_on_axes(q.vertices(), p.vertices(), slack)) {
    return 0.0;
  }
  // Sutherland-Hodgman: clip p against each half-plane of q.
  std::vector<Point> out(p.vertices().begin(), p.vertices().end());
  std::vector<Point> in;
  for (std::size_t i = 0; i < q.size() && !out.empty(); ++i) {
    const Point a = q[i], b = q[(i + 1) % q.size()];
    const Point e = b - a;
    in.swap(out);
    out.clear();
    for (std::size_t j = 0; j < in.size(); ++j) {
      const Point s = in[j], t = in[(j + 1) % in.size()];
      const double ds = cross(e, s - a), dt = cross(e, t - a);
      const bool s_in = ds >= 0.0, t_in = dt >= 0.0;
      if (s_in) out.push_back(s);
      if (s_in != t_in) {
        const double k = ds / (ds - dt);
        out.push_back(s + k * (t - s));
      }
    }
  }
  if (out.size() < 3) return 0.0;
  return std::max(0.0, polygon_area(out));
}

}  // namespace pentaheesch
