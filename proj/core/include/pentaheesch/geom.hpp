#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentaheesch {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// Wraps an angle into [0, 2*pi).
double normalize_angle(double a);

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline double heading(Point d) { return normalize_angle(std::atan2(d.y, d.x)); }
inline Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

struct BBox {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;

  bool intersects(const BBox& o, double pad) const {
    return min_x <= o.max_x + pad && o.min_x <= max_x + pad &&
           min_y <= o.max_y + pad && o.min_y <= max_y + pad;
  }
  void expand(const BBox& o);
};

// Proper rigid motion, optionally preceded by the reflection (x, y) -> (x, -y):
//   p -> R(rotation) * S^reflected * p + translation
struct Isometry {
  double rotation = 0.0;  // radians, kept in [0, 2*pi)
  Point translation;
  bool reflected = false;

  static Isometry make(double rotation, Point translation, bool reflected);

  Point apply(Point p) const;
  // Linear part only (no translation); used for directions.
  Point apply_linear(Point v) const;
  // Rotates a heading angle the way apply_linear rotates a direction.
  double apply_heading(double angle) const;

  // (outer.compose(inner)).apply(p) == outer.apply(inner.apply(p))
  Isometry compose(const Isometry& inner) const;
  Isometry inverse() const;
};

// Strictly convex polygon. Stored vertex order is the caller's order; ccw()
// gives a counter-clockwise copy.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  // Throws GeometryError if fewer than 3 vertices, repeated vertices, or not
  // strictly convex (interior angles must lie in (0, pi)).
  static ConvexPolygon from_vertices(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  double signed_area() const;
  double area() const { return std::abs(signed_area()); }
  bool is_ccw() const { return signed_area() > 0.0; }
  ConvexPolygon ccw() const;
  BBox bbox() const;
  Point centroid() const;
  // Length of the edge from vertex i to vertex i+1.
  double edge_length(std::size_t i) const;
  // Interior angle at vertex i, radians.
  double interior_angle(std::size_t i) const;
  double longest_edge() const;

 private:
  std::vector<Point> vertices_;
};

ConvexPolygon apply_isometry(const Isometry& g, const ConvexPolygon& p);

// Area of the intersection of two convex polygons (either orientation).
// Polygons separated by an axis, or touching along an edge or at a point,
// report 0. A separating-axis test with slack 1e-9 (relative to the polygon
// scale) short-circuits before the exact clipping computation.
double overlap_area(const ConvexPolygon& p, const ConvexPolygon& q);

// Squared-scale tolerance used to decide whether an overlap counts.
inline constexpr double kOverlapAreaTol = 1e-9;
// Distance under which two vertices are identified (relative to scale).
inline constexpr double kCoincideTol = 1e-7;
// Angular tolerance for vertex sums, radians (about 6e-8 degrees).
inline constexpr double kAngleTol = 1e-9;

}  // namespace pentaheesch
