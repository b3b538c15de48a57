#include "pentaheesch/arrangement.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <utility>

namespace pentaheesch {

namespace {

constexpr double kDirTol = 1e-6;

double angle_diff(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d);
}

// True if p lies on segment [a, b] away from both endpoints.
bool strictly_inside_segment(Point p, Point a, Point b, double tol) {
  const Point e = b - a;
  const double len = norm(e);
  const double along = dot(p - a, e) / len;
  if (along <= tol || along >= len - tol) return false;
  return std::abs(cross(e, p - a)) / len <= tol;
}

}  // namespace

Arrangement::Arrangement(ContactPolicy policy, double scale) : policy_(policy), scale_(scale) {
  if (!(scale > 0.0)) throw GeometryError("arrangement scale must be positive");
}

bool Arrangement::wedge_fits(const Junction& j, const Wedge& w) const {
  if (j.covered + w.span > kTwoPi + kAngleTol * 10) return false;
  for (const Wedge& o : j.wedges) {
    double d = normalize_angle(o.start - w.start);
    if (d > kTwoPi - 1e-9) d = 0.0;
    if (d < w.span - 1e-9) return false;
    double e = normalize_angle(w.start - o.start);
    if (e > kTwoPi - 1e-9) e = 0.0;
    if (e < o.span - 1e-9) return false;
  }
  return true;
}

int Arrangement::find_point(Point p) const {
  const double tol = kCoincideTol * scale_;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (distance(points_[i].pos, p) <= tol) return static_cast<int>(i);
  }
  return -1;
}

AddResult Arrangement::add_tile(const ConvexPolygon& ccw_tile, std::span<const int> labels) {
  const std::size_t n = ccw_tile.size();
  const double tol = kCoincideTol * scale_;
  const BBox box = ccw_tile.bbox();
  const int tile_index = static_cast<int>(tiles_.size());

  std::vector<int> near;
  for (std::size_t t = 0; t < tiles_.size(); ++t) {
    if (tiles_[t].box.intersects(box, tol)) near.push_back(static_cast<int>(t));
  }
  const double area_tol = kOverlapAreaTol * scale_ * scale_;
  for (int t : near) {
    if (overlap_area(tiles_[t].poly, ccw_tile) > area_tol) return AddResult::kOverlap;
  }

  std::vector<int> near_points;
  for (int t : near) {
    for (int p : tiles_[t].corner_points) near_points.push_back(p);
  }
  std::sort(near_points.begin(), near_points.end());
  near_points.erase(std::unique(near_points.begin(), near_points.end()), near_points.end());

  std::vector<PendingWedge> pending;
  std::vector<int> corner_slots(n, -1);  // existing junction or -(k+2) for pending new point k
  std::vector<Point> new_points;
  std::vector<char> matched(near_points.size(), 0);

  for (std::size_t i = 0; i < n; ++i) {
    const Point v = ccw_tile[i];
    const Point next = ccw_tile[(i + 1) % n], prev = ccw_tile[(i + n - 1) % n];
    Wedge w;
    w.start = heading(next - v);
    w.span = ccw_tile.interior_angle(i);
    w.start_len = distance(next, v);
    w.end_len = distance(prev, v);
    w.tile = tile_index;
    w.corner = labels.empty() ? static_cast<int>(i) : labels[i];

    int found = -1;
    for (std::size_t k = 0; k < near_points.size(); ++k) {
      if (distance(points_[near_points[k]].pos, v) <= tol) {
        found = near_points[k];
        matched[k] = 1;
        break;
      }
    }
    if (found >= 0) {
      pending.push_back({found, v, w});
      corner_slots[i] = found;
      continue;
    }
    // New junction; it may sit in the interior of existing edges.
    const int new_id = static_cast<int>(new_points.size());
    new_points.push_back(v);
    corner_slots[i] = -(new_id + 2);
    for (int t : near) {
      const ConvexPolygon& host = tiles_[t].poly;
      for (std::size_t e = 0; e < host.size(); ++e) {
        const Point a = host[e], b = host[(e + 1) % host.size()];
        if (!strictly_inside_segment(v, a, b, tol)) continue;
        if (policy_ == ContactPolicy::kEdgeToEdge) return AddResult::kNotEdgeToEdge;
        Wedge s;
        s.start = heading(b - v);
        s.span = kPi;
        s.start_len = distance(b, v);
        s.end_len = distance(a, v);
        s.tile = t;
        s.corner = -1;
        pending.push_back({-(new_id + 2), v, s});
      }
    }
    pending.push_back({-(new_id + 2), v, w});
  }

  // Existing junctions lying inside an edge of the new tile.
  for (std::size_t k = 0; k < near_points.size(); ++k) {
    if (matched[k]) continue;
    const Point p = points_[near_points[k]].pos;
    for (std::size_t e = 0; e < n; ++e) {
      const Point a = ccw_tile[e], b = ccw_tile[(e + 1) % n];
      if (!strictly_inside_segment(p, a, b, tol)) continue;
      if (policy_ == ContactPolicy::kEdgeToEdge) return AddResult::kNotEdgeToEdge;
      Wedge s;
      s.start = heading(b - p);
      s.span = kPi;
      s.start_len = distance(b, p);
      s.end_len = distance(a, p);
      s.tile = tile_index;
      s.corner = -1;
      pending.push_back({near_points[k], p, s});
    }
  }

  // Angular consistency at existing junctions (new tile adds one wedge each).
  for (const PendingWedge& pw : pending) {
    if (pw.point >= 0 && !wedge_fits(points_[pw.point], pw.wedge)) return AddResult::kWedgeConflict;
  }

  JournalEntry entry;
  entry.points_before = points_.size();
  for (const Point& p : new_points) points_.push_back(Junction{p, {}, 0.0});
  auto resolve = [&](int slot) {
    return slot >= 0 ? slot : static_cast<int>(entry.points_before) + (-slot - 2);
  };
  for (const PendingWedge& pw : pending) {
    const int id = resolve(pw.point);
    points_[id].wedges.push_back(pw.wedge);
    points_[id].covered += pw.wedge.span;
    entry.touched.push_back(id);
  }
  std::sort(entry.touched.begin(), entry.touched.end());
  entry.touched.erase(std::unique(entry.touched.begin(), entry.touched.end()), entry.touched.end());

  TileRec rec;
  rec.poly = ccw_tile;
  rec.labels = labels.empty() ? std::vector<int>(n) : std::vector<int>(labels.begin(), labels.end());
  if (labels.empty()) std::iota(rec.labels.begin(), rec.labels.end(), 0);
  rec.corner_points.resize(n);
  for (std::size_t i = 0; i < n; ++i) rec.corner_points[i] = resolve(corner_slots[i]);
  rec.box = box;
  tiles_.push_back(std::move(rec));
  journal_.push_back(std::move(entry));
  return AddResult::kOk;
}

void Arrangement::pop_tile() {
  if (tiles_.empty()) return;
  const int tile_index = static_cast<int>(tiles_.size()) - 1;
  const JournalEntry& entry = journal_.back();
  for (int id : entry.touched) {
    if (static_cast<std::size_t>(id) >= entry.points_before) continue;
    Junction& j = points_[id];
    while (!j.wedges.empty() && j.wedges.back().tile == tile_index) {
      j.covered -= j.wedges.back().span;
      j.wedges.pop_back();
    }
  }
  points_.resize(entry.points_before);
  tiles_.pop_back();
  journal_.pop_back();
}

std::vector<FreeArc> Arrangement::free_arcs(std::size_t i) const {
  const Junction& j = points_[i];
  std::vector<FreeArc> arcs;
  if (j.wedges.empty()) return arcs;
  std::vector<int> order(j.wedges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return j.wedges[a].start < j.wedges[b].start; });
  const std::size_t m = order.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Wedge& w = j.wedges[order[k]];
    const Wedge& nx = j.wedges[order[(k + 1) % m]];
    double g;
    if (m == 1) {
      g = kTwoPi - w.span;
    } else {
      g = normalize_angle(nx.start - (w.start + w.span));
      if (g > kTwoPi - 1e-6) g = 0.0;
    }
    if (g <= kAngleTol) continue;
    arcs.push_back(FreeArc{normalize_angle(w.start + w.span), g, w.end_len, nx.start_len,
                           order[k], order[(k + 1) % m]});
  }
  return arcs;
}

int Arrangement::next_along_ray(int from, double dir, double max_len) const {
  const Point p = points_[from].pos;
  const double tol = kCoincideTol * scale_;
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (static_cast<int>(i) == from) continue;
    const Point d = points_[i].pos - p;
    const double len = norm(d);
    if (len <= tol || len > max_len + tol || len >= best_d) continue;
    if (angle_diff(heading(d), dir) > kDirTol) continue;
    best = static_cast<int>(i);
    best_d = len;
  }
  return best;
}

std::vector<BoundaryLoop> Arrangement::boundary_loops() const {
  std::vector<std::vector<FreeArc>> arcs(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) arcs[i] = free_arcs(i);
  std::set<std::pair<int, int>> visited;
  std::vector<BoundaryLoop> loops;
  for (std::size_t s = 0; s < points_.size(); ++s) {
    for (std::size_t a = 0; a < arcs[s].size(); ++a) {
      if (visited.count({static_cast<int>(s), static_cast<int>(a)})) continue;
      BoundaryLoop loop;
      int p = static_cast<int>(s);
      int arc = static_cast<int>(a);
      const std::size_t limit = 4 * points_.size() + 8;
      while (!visited.count({p, arc})) {
        visited.insert({p, arc});
        const FreeArc& f = arcs[p][arc];
        loop.points.push_back(p);
        loop.free_angles.push_back(f.span);
        const Wedge& out = points_[p].wedges[f.after];
        const int q = next_along_ray(p, out.start, out.start_len);
        if (q < 0) throw GeometryError("boundary walk lost its edge");
        const double back = heading(points_[p].pos - points_[q].pos);
        int next_arc = -1;
        for (std::size_t k = 0; k < arcs[q].size(); ++k) {
          if (angle_diff(arcs[q][k].start, back) <= kDirTol) {
            next_arc = static_cast<int>(k);
            break;
          }
        }
        if (next_arc < 0) throw GeometryError("boundary walk found no exterior at a junction");
        p = q;
        arc = next_arc;
        if (loop.points.size() > limit) throw GeometryError("boundary walk did not close");
      }
      if (p != static_cast<int>(s) || arc != static_cast<int>(a)) {
        throw GeometryError("boundary walk merged into another loop");
      }
      double area = 0.0;
      for (std::size_t k = 0; k < loop.points.size(); ++k) {
        area += cross(points_[loop.points[k]].pos,
                      points_[loop.points[(k + 1) % loop.points.size()]].pos);
      }
      loop.signed_area = 0.5 * area;
      loops.push_back(std::move(loop));
    }
  }
  return loops;
}

std::vector<BoundaryVertex> PatchBoundary::corners() const {
  std::vector<BoundaryVertex> out;
  for (const BoundaryVertex& v : walk) {
    if (!v.flat) out.push_back(v);
  }
  return out;
}

PatchBoundary trace_boundary(std::span<const ConvexPolygon> tiles) {
  if (tiles.empty()) throw NotConnected("empty patch");
  double scale = 0.0;
  for (const ConvexPolygon& t : tiles) scale = std::max(scale, t.longest_edge());
  Arrangement arr(ContactPolicy::kAllowCollinear, scale);
  for (const ConvexPolygon& t : tiles) {
    if (arr.add_tile(t.ccw()) != AddResult::kOk) throw GeometryError("tiles overlap");
  }
  std::vector<BoundaryLoop> loops = arr.boundary_loops();
  const BoundaryLoop* outer = nullptr;
  int outer_count = 0;
  for (const BoundaryLoop& l : loops) {
    if (l.signed_area < 0.0) throw HoleDetected("patch boundary encloses a hole");
    outer = &l;
    ++outer_count;
  }
  if (outer_count != 1) throw NotConnected("patch has more than one component");
  PatchBoundary result;
  for (std::size_t k = 0; k < outer->points.size(); ++k) {
    const Junction& j = arr.point(outer->points[k]);
    BoundaryVertex v;
    v.pos = j.pos;
    for (const Wedge& w : j.wedges) v.tiles.push_back(w.tile);
    std::sort(v.tiles.begin(), v.tiles.end());
    v.tiles.erase(std::unique(v.tiles.begin(), v.tiles.end()), v.tiles.end());
    v.gap_deg = rad_to_deg(outer->free_angles[k]);
    v.flat = std::abs(outer->free_angles[k] - kPi) <= 1e-9;
    result.walk.push_back(std::move(v));
  }
  return result;
}

}  // namespace pentaheesch
