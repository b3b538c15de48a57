#include "pentaheesch/corona.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "pentaheesch/spots.hpp"

namespace pentaheesch {

std::string to_string(PlacementModel m) { return m == PlacementModel::kEecOnly ? "eec" : "eec+collinear"; }

PlacementModel parse_placement_model(const std::string& s) {
  if (s == "eec") return PlacementModel::kEecOnly;
  if (s == "eec+collinear") return PlacementModel::kEecPlusCollinear;
  throw std::invalid_argument("unknown placement model: " + s);
}

std::string placement_caveat(PlacementModel m) {
  if (m == PlacementModel::kEecOnly) {
    return "exhaustive over edge-to-edge placements only; copies with a vertex inside another copy's edge "
           "are not considered";
  }
  return "collinear contacts are limited to a corner on an existing vertex with one edge along the boundary "
         "line, or an edge through a vertex with the copy's corner at the next vertex on that line; the "
         "result is a bound, not a proof";
}

std::string to_string(HeeschStatus s) {
  switch (s) {
    case HeeschStatus::kSurroundedKTimes: return "SURROUNDED_K_TIMES";
    case HeeschStatus::kNoFirstCorona: return "NO_FIRST_CORONA";
    case HeeschStatus::kDeadSpotCertificate: return "DEAD_SPOT_CERTIFICATE";
    case HeeschStatus::kSearchExhausted: return "SEARCH_EXHAUSTED";
    case HeeschStatus::kLayerLimitReached: return "LAYER_LIMIT_REACHED";
  }
  return "?";
}

std::vector<Placement> Patch::all() const {
  std::vector<Placement> out = kernel;
  for (const auto& l : layers) out.insert(out.end(), l.begin(), l.end());
  return out;
}

std::size_t Patch::tile_count() const {
  std::size_t n = kernel.size();
  for (const auto& l : layers) n += l.size();
  return n;
}

BudgetExceeded::BudgetExceeded(std::uint64_t nodes)
    : std::runtime_error("search budget exceeded after " + std::to_string(nodes) + " placements"), nodes_(nodes) {}

Isometry corner_pose(const Pentagon& p, int corner, bool reflected, Point at, double heading_rad) {
  const auto v = p.vertices();
  const int next = reflected ? (corner + 4) % 5 : (corner + 1) % 5;
  Point flank = v[next] - v[corner];
  Point base = v[corner];
  if (reflected) {
    flank.y = -flank.y;
    base.y = -base.y;
  }
  const double rot = heading_rad - std::atan2(flank.y, flank.x);
  const Isometry r = Isometry::make(rot, Point{}, false);
  return Isometry::make(rot, at - r.apply(base), reflected);
}

ConvexPolygon placed_polygon(const Pentagon& p, const Placement& pl) {
  const auto v = p.vertices();
  std::vector<Point> pts;
  for (const Point& q : v) pts.push_back(pl.pose.apply(q));
  if (pl.pose.reflected) std::reverse(pts.begin(), pts.end());
  return ConvexPolygon::from_vertices(std::move(pts));
}

std::vector<int> placed_labels(const Placement& pl) {
  if (pl.pose.reflected) return {4, 3, 2, 1, 0};
  return {0, 1, 2, 3, 4};
}

namespace {

constexpr double kFillTol = deg_to_rad(1e-6);
constexpr double kLenTol = 1e-9;  // relative to scale

std::array<int, 5> edge_classes_of(const Pentagon& p) {
  std::array<int, 5> cls{};
  std::vector<double> reps;
  for (int e = 0; e < 5; ++e) {
    int found = -1;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (std::abs(reps[r] - p.edges[e]) <= kLenTol * p.longest_edge()) found = static_cast<int>(r);
    }
    if (found < 0) {
      found = static_cast<int>(reps.size());
      reps.push_back(p.edges[e]);
    }
    cls[e] = found;
  }
  return cls;
}

long long arc_key(double arc) { return std::llround(arc * 1e9); }

// Which free arcs copies of the pentagon can fill, by angles alone or with
// flank lengths matched edge to edge.
class FillOracle {
 public:
  FillOracle(const Pentagon& p, bool reflections)
      : ang_(p.angles), cls_(edge_classes_of(p)), reflections_(reflections) {}

  bool corners(double arc) {
    if (arc < -kFillTol) return false;
    const long long key = arc_key(arc);
    if (auto it = corner_memo_.find(key); it != corner_memo_.end()) return it->second;
    bool ok = false;
    for (int k = 0; k < 5 && !ok; ++k) {
      const double a = ang_[k];
      if (std::abs(arc - a) <= kFillTol) ok = true;
      else if (a < arc - kFillTol) ok = corners(arc - a);
    }
    corner_memo_[key] = ok;
    return ok;
  }

  bool angles(double arc, bool allow_straight) {
    if (corners(arc)) return true;
    if (!allow_straight) return false;
    if (std::abs(arc - kPi) <= kFillTol) return true;
    return arc > kPi && corners(arc - kPi);
  }

  bool edge_to_edge(double arc, int start_cls, int end_cls) {
    const auto key = std::make_tuple(arc_key(arc), start_cls, end_cls);
    if (auto it = eec_memo_.find(key); it != eec_memo_.end()) return it->second;
    bool ok = false;
    for (int k = 0; k < 5 && !ok; ++k) {
      for (bool refl : {false, true}) {
        if (refl && !reflections_) continue;
        const WedgeUse w{k, refl};
        if (cls_[start_flank(w)] != start_cls) continue;
        const double a = ang_[k];
        if (std::abs(arc - a) <= kFillTol) {
          if (cls_[end_flank(w)] == end_cls) ok = true;
        } else if (a < arc - kFillTol) {
          ok = edge_to_edge(arc - a, cls_[end_flank(w)], end_cls);
        }
        if (ok) break;
      }
    }
    eec_memo_[key] = ok;
    return ok;
  }

  int length_class(double len, const std::array<double, 5>& edges, double scale) const {
    for (int e = 0; e < 5; ++e) {
      if (std::abs(edges[e] - len) <= kLenTol * scale) return cls_[e];
    }
    return -1;
  }

 private:
  std::array<double, 5> ang_;
  std::array<int, 5> cls_;
  bool reflections_;
  std::unordered_map<long long, bool> corner_memo_;
  std::map<std::tuple<long long, int, int>, bool> eec_memo_;
};

// Closest corner sums (plus an optional straight contact) on either side of
// a gap, degrees.
std::pair<double, double> nearest_sums(const Pentagon& p, double gap_deg, bool allow_straight) {
  const auto deg = p.angles_deg();
  const double hi = gap_deg + *std::max_element(deg.begin(), deg.end()) + (allow_straight ? 180.0 : 0.0);
  double below = 0.0, above = hi + 360.0;
  auto consider = [&](double s) {
    if (s < gap_deg && s > below) below = s;
    if (s > gap_deg && s < above) above = s;
  };
  auto rec = [&](auto&& self, int k, double sum) -> void {
    if (k == 5) {
      if (sum > 0.0) consider(sum);
      if (allow_straight) consider(sum + 180.0);
      return;
    }
    for (double s = sum; s <= hi; s += deg[k]) self(self, k + 1, s);
  };
  rec(rec, 0, 0.0);
  return {below, above};
}

// Incremental layer search over one arrangement. Each layer closes a set of
// target junctions: the open points of the patch when the layer starts, plus
// points later created in the interior of an earlier layer's edges.
class Engine {
 public:
  Engine(const Pentagon& p, const SearchOptions& opt, std::uint64_t* nodes)
      : pent_(p),
        opt_(opt),
        collinear_(opt.mode == PlacementModel::kEecPlusCollinear),
        scale_(p.longest_edge()),
        arr_(collinear_ ? ContactPolicy::kAllowCollinear : ContactPolicy::kEdgeToEdge, scale_),
        oracle_(p, opt.allow_reflections),
        nodes_(nodes) {}

  const Arrangement& arrangement() const { return arr_; }

  bool add(const Placement& pl) {
    const ConvexPolygon poly = placed_polygon(pent_, pl);
    const std::vector<int> labels = placed_labels(pl);
    const std::size_t before = arr_.point_count();
    if (arr_.add_tile(poly, labels) != AddResult::kOk) return false;
    placements_.push_back(pl);
    target_.resize(arr_.point_count(), 0);
    for (std::size_t i = before; i < arr_.point_count(); ++i) {
      for (const Wedge& w : arr_.point(i).wedges) {
        if (w.corner < 0 && static_cast<std::size_t>(w.tile) < layer_first_) target_[i] = 1;
      }
    }
    return true;
  }

  void pop() {
    arr_.pop_tile();
    placements_.pop_back();
    target_.resize(arr_.point_count());
  }

  void load(const std::vector<Placement>& kernel) {
    for (const Placement& pl : kernel) {
      if (!add(pl)) throw GeometryError("kernel copies overlap or do not meet edge to edge");
    }
  }

  void begin_layer() {
    saved_.push_back({target_, layer_first_});
    layer_first_ = arr_.tile_count();
    layer_starts_.push_back(layer_first_);
    target_.assign(arr_.point_count(), 0);
    for (std::size_t i = 0; i < arr_.point_count(); ++i) target_[i] = !arr_.is_closed(i);
  }

  void end_layer() {
    target_ = std::move(saved_.back().first);
    layer_first_ = saved_.back().second;
    saved_.pop_back();
    layer_starts_.pop_back();
  }

  bool arc_fillable(const FreeArc& a) {
    if (collinear_) return oracle_.angles(a.span, true);
    const int s = oracle_.length_class(a.start_len, pent_.edges, scale_);
    const int e = oracle_.length_class(a.end_len, pent_.edges, scale_);
    if (s < 0 || e < 0) return false;
    return oracle_.edge_to_edge(a.span, s, e);
  }

  bool point_fillable(int pt) {
    if (arr_.is_closed(pt)) return true;
    for (const FreeArc& a : arr_.free_arcs(pt)) {
      if (!arc_fillable(a)) return false;
    }
    return true;
  }

  bool targets_feasible() {
    for (std::size_t i = 0; i < target_.size(); ++i) {
      if (target_[i] && !point_fillable(static_cast<int>(i))) return false;
    }
    return true;
  }

  bool touched_feasible() {
    for (int t : arr_.last_touched()) {
      if (target_[t] && !point_fillable(t)) return false;
    }
    return true;
  }

  // Open target with the smallest gap; ties go to the older point.
  int anchor() const {
    int best = -1;
    double best_gap = 0.0;
    for (std::size_t i = 0; i < target_.size(); ++i) {
      if (!target_[i] || arr_.is_closed(i)) continue;
      const double g = arr_.gap(i);
      if (best < 0 || g < best_gap) {
        best = static_cast<int>(i);
        best_gap = g;
      }
    }
    return best;
  }

  // Free arc following the earliest-placed wedge at the point.
  FreeArc choose_arc(int pt) const {
    const auto arcs = arr_.free_arcs(pt);
    return *std::min_element(arcs.begin(), arcs.end(),
                             [](const FreeArc& a, const FreeArc& b) { return a.before < b.before; });
  }

  std::vector<Placement> candidates(int pt, const FreeArc& arc) const {
    std::vector<Placement> out;
    const Point p = arr_.point(pt).pos;
    const double len_tol = kLenTol * scale_;
    for (int x = 0; x < 5; ++x) {
      for (bool refl : {false, true}) {
        if (refl && !opt_.allow_reflections) continue;
        const WedgeUse w{x, refl};
        const double a = pent_.angles[x];
        if (a > arc.span + kFillTol) continue;
        if (!collinear_) {
          if (std::abs(pent_.edges[start_flank(w)] - arc.start_len) > len_tol) continue;
          if (std::abs(a - arc.span) <= kFillTol && std::abs(pent_.edges[end_flank(w)] - arc.end_len) > len_tol) {
            continue;
          }
        }
        out.push_back(Placement{corner_pose(pent_, x, refl, p, arc.start)});
      }
    }
    if (collinear_ && arc.span >= kPi - kFillTol) {
      // A copy whose edge runs straight through p, with its corner at the
      // next junction along the start ray.
      const int q = arr_.next_along_ray(pt, arc.start, arc.start_len);
      if (q >= 0) {
        const Point qp = arr_.point(q).pos;
        const double dq = distance(p, qp);
        const double back = heading(p - qp);
        for (int y = 0; y < 5; ++y) {
          for (bool refl : {false, true}) {
            if (refl && !opt_.allow_reflections) continue;
            const WedgeUse w{y, refl};
            if (pent_.edges[end_flank(w)] <= dq + len_tol) continue;
            out.push_back(Placement{corner_pose(pent_, y, refl, qp, back - pent_.angles[y])});
          }
        }
      }
    }
    return out;
  }

  void count_node() {
    if (++*nodes_ > opt_.budget) throw BudgetExceeded(*nodes_);
  }

  bool boundary_ok() const {
    try {
      int outer = 0;
      for (const BoundaryLoop& l : arr_.boundary_loops()) {
        if (l.signed_area <= 0.0) return false;
        ++outer;
      }
      return outer == 1;
    } catch (const GeometryError&) {
      return false;
    }
  }

  // Depth-first completion of the current layer. `on_complete` returns false
  // to stop the whole search; dfs then returns false as well.
  template <class F>
  bool dfs(F& on_complete) {
    const int pt = anchor();
    if (pt < 0) {
      if (!boundary_ok()) return true;
      return on_complete();
    }
    const FreeArc arc = choose_arc(pt);
    for (const Placement& cand : candidates(pt, arc)) {
      if (!add(cand)) continue;
      count_node();
      bool go = true;
      if (touched_feasible()) go = dfs(on_complete);
      pop();
      if (!go) return false;
    }
    return true;
  }

  std::vector<DeadSpot> dead_spots() {
    std::vector<DeadSpot> out;
    for (std::size_t i = 0; i < arr_.point_count(); ++i) {
      if (arr_.is_closed(i)) continue;
      for (const FreeArc& a : arr_.free_arcs(i)) {
        if (oracle_.angles(a.span, collinear_)) continue;
        DeadSpot d;
        d.position = arr_.point(i).pos;
        d.gap_deg = rad_to_deg(a.span);
        for (const Wedge& w : arr_.point(i).wedges) {
          if (w.corner >= 0) ++d.corners[w.corner];
          else ++d.straight_contacts;
        }
        std::tie(d.nearest_below_deg, d.nearest_above_deg) = nearest_sums(pent_, d.gap_deg, collinear_);
        out.push_back(d);
      }
    }
    return out;
  }

  // Dead spot with the fewest corners; ties go to the widest gap.
  std::optional<DeadSpot> find_dead_spot() {
    std::optional<DeadSpot> best;
    for (const DeadSpot& d : dead_spots()) {
      const int n = total_corners(d.corners) + d.straight_contacts;
      const int bn = best ? total_corners(best->corners) + best->straight_contacts : 0;
      if (!best || n < bn || (n == bn && d.gap_deg > best->gap_deg + 1e-9)) best = d;
    }
    return best;
  }

  Patch snapshot() const {
    Patch patch;
    patch.mode = opt_.mode;
    const std::size_t k0 = layer_starts_.empty() ? placements_.size() : layer_starts_.front();
    patch.kernel.assign(placements_.begin(), placements_.begin() + static_cast<std::ptrdiff_t>(k0));
    for (std::size_t l = 0; l < layer_starts_.size(); ++l) {
      const std::size_t b = layer_starts_[l];
      const std::size_t e = l + 1 < layer_starts_.size() ? layer_starts_[l + 1] : placements_.size();
      patch.layers.emplace_back(placements_.begin() + static_cast<std::ptrdiff_t>(b),
                                placements_.begin() + static_cast<std::ptrdiff_t>(e));
    }
    return patch;
  }

  const std::vector<Placement>& placements() const { return placements_; }

 private:
  const Pentagon& pent_;
  SearchOptions opt_;
  bool collinear_;
  double scale_;
  Arrangement arr_;
  FillOracle oracle_;
  std::uint64_t* nodes_;
  std::vector<Placement> placements_;
  std::vector<char> target_;
  std::size_t layer_first_ = 0;
  std::vector<std::size_t> layer_starts_;
  std::vector<std::pair<std::vector<char>, std::size_t>> saved_;
};

Placement identity_placement() { return Placement{Isometry{}}; }

// Layer-by-layer recursion: every completed k-layer patch is either closed
// off by a dead spot or searched for a (k+1)-th layer.
class HeeschRun {
 public:
  HeeschRun(const Pentagon& p, const SearchOptions& opt) : engine_(p, opt, &nodes_), limit_(opt.layer_limit) {
    const auto n = static_cast<std::size_t>(std::max(limit_, 0) + 2);
    per_depth_.assign(n, 0);
    dead_at_.assign(n, 0);
    search_at_.assign(n, 0);
    first_dead_.resize(n);
    witness_at_.resize(n);
  }

  HeeschReport run(const std::vector<Placement>& kernel, const SearchOptions& opt) {
    engine_.load(kernel);
    const int best = explore(0);
    HeeschReport r;
    r.model = opt.mode;
    r.caveat = placement_caveat(opt.mode);
    r.layers_completed = best;
    r.nodes = nodes_;
    for (int k = 1; k <= best; ++k) r.patches_per_depth.push_back(per_depth_[k]);
    if (best >= 1) {
      r.witness = witness_at_[best];
      r.refuted_by_dead_spot = dead_at_[best];
      r.refuted_by_search = search_at_[best];
    }
    if (best >= limit_) {
      r.status = HeeschStatus::kLayerLimitReached;
    } else if (best == 0) {
      r.status = HeeschStatus::kNoFirstCorona;
    } else if (search_at_[best] == 0) {
      r.status = HeeschStatus::kDeadSpotCertificate;
      r.certificate = first_dead_[best];
    } else {
      r.status = HeeschStatus::kSearchExhausted;
    }
    return r;
  }

 private:
  int explore(int k) {
    if (k >= 1) {
      ++per_depth_[k];
      if (!witness_at_[k]) witness_at_[k] = engine_.snapshot();
    }
    if (k >= limit_) {
      reached_ = true;
      return k;
    }
    if (k >= 1) {
      if (auto d = engine_.find_dead_spot()) {
        ++dead_at_[k];
        if (!first_dead_[k]) first_dead_[k] = d;
        return k;
      }
    }
    engine_.begin_layer();
    int best = k;
    if (engine_.targets_feasible()) {
      auto on_complete = [&]() {
        best = std::max(best, explore(k + 1));
        return !reached_;
      };
      engine_.dfs(on_complete);
    }
    engine_.end_layer();
    if (best == k && k >= 1) ++search_at_[k];
    return best;
  }

  std::uint64_t nodes_ = 0;
  Engine engine_;
  int limit_;
  bool reached_ = false;
  std::vector<std::uint64_t> per_depth_, dead_at_, search_at_;
  std::vector<std::optional<DeadSpot>> first_dead_;
  std::vector<std::optional<Patch>> witness_at_;
};

struct ClusterKey {
  std::vector<std::tuple<long long, long long, long long, bool>> poses;
  friend auto operator<=>(const ClusterKey&, const ClusterKey&) = default;
};

// Congruence-invariant key: the cluster re-expressed in the frame of each of
// its copies, smallest result kept. Mirror images share a key.
ClusterKey cluster_key(const std::vector<Placement>& cluster, double scale) {
  const long long full_turn = std::llround(kTwoPi * 1e6);
  std::optional<ClusterKey> best;
  for (const Placement& frame : cluster) {
    const Isometry inv = frame.pose.inverse();
    ClusterKey key;
    for (const Placement& pl : cluster) {
      const Isometry g = inv.compose(pl.pose);
      key.poses.emplace_back(std::llround(g.rotation * 1e6) % full_turn,
                             std::llround(g.translation.x / scale * 1e6),
                             std::llround(g.translation.y / scale * 1e6), g.reflected);
    }
    std::sort(key.poses.begin(), key.poses.end());
    if (!best || key < *best) best = std::move(key);
  }
  return best.value_or(ClusterKey{});
}

bool polygons_touch(const ConvexPolygon& a, const ConvexPolygon& b, double tol) {
  auto near_edge = [&](Point p, const ConvexPolygon& q) {
    for (std::size_t e = 0; e < q.size(); ++e) {
      const Point s = q[e], t = q[(e + 1) % q.size()];
      const Point d = t - s;
      const double u = std::clamp(dot(p - s, d) / dot(d, d), 0.0, 1.0);
      if (distance(p, s + u * d) <= tol) return true;
    }
    return false;
  };
  for (const Point& p : a.vertices()) {
    if (near_edge(p, b)) return true;
  }
  for (const Point& p : b.vertices()) {
    if (near_edge(p, a)) return true;
  }
  return false;
}

bool point_in_convex(Point p, const ConvexPolygon& ccw) {
  for (std::size_t e = 0; e < ccw.size(); ++e) {
    if (cross(ccw[(e + 1) % ccw.size()] - ccw[e], p - ccw[e]) <= 0.0) return false;
  }
  return true;
}

}  // namespace

bool gap_fillable(const Pentagon& p, double gap_deg, bool allow_straight) {
  FillOracle oracle(p, true);
  return oracle.angles(deg_to_rad(gap_deg), allow_straight);
}

std::vector<Placement> candidate_placements(const Pentagon& p, const Patch& patch, Point anchor,
                                            const SearchOptions& options) {
  std::uint64_t nodes = 0;
  SearchOptions opt = options;
  opt.budget = UINT64_MAX;
  Engine eng(p, opt, &nodes);
  eng.load(patch.all());
  eng.begin_layer();
  const int pt = eng.arrangement().find_point(anchor);
  std::vector<Placement> out;
  if (pt < 0 || eng.arrangement().is_closed(pt)) return out;
  for (const Placement& cand : eng.candidates(pt, eng.choose_arc(pt))) {
    if (!eng.add(cand)) continue;
    if (eng.touched_feasible()) out.push_back(cand);
    eng.pop();
  }
  return out;
}

std::vector<std::vector<Placement>> vertex_patterns(const Pentagon& p, const Patch& patch, Point vertex,
                                                    const SearchOptions& options) {
  std::uint64_t nodes = 0;
  Engine eng(p, options, &nodes);
  const std::vector<Placement> base = patch.all();
  eng.load(base);
  eng.begin_layer();
  const int pt = eng.arrangement().find_point(vertex);
  std::vector<std::vector<Placement>> out;
  if (pt < 0 || eng.arrangement().is_closed(pt)) return out;
  auto rec = [&](auto&& self) -> void {
    if (eng.arrangement().is_closed(pt)) {
      out.emplace_back(eng.placements().begin() + static_cast<std::ptrdiff_t>(base.size()), eng.placements().end());
      return;
    }
    for (const Placement& cand : eng.candidates(pt, eng.choose_arc(pt))) {
      if (!eng.add(cand)) continue;
      eng.count_node();
      if (eng.point_fillable(pt)) self(self);
      eng.pop();
    }
  };
  rec(rec);
  return out;
}

std::vector<Patch> enumerate_coronas(const Pentagon& p, const std::vector<Placement>& kernel,
                                     const SearchOptions& options, std::size_t limit) {
  std::uint64_t nodes = 0;
  Engine eng(p, options, &nodes);
  eng.load(kernel);
  eng.begin_layer();
  std::vector<Patch> out;
  if (limit == 0 || !eng.targets_feasible()) return out;
  auto on_complete = [&]() {
    out.push_back(eng.snapshot());
    return out.size() < limit;
  };
  eng.dfs(on_complete);
  return out;
}

SurroundResult surround(const Pentagon& p, const std::vector<Placement>& kernel, const SearchOptions& options) {
  std::uint64_t nodes = 0;
  Engine eng(p, options, &nodes);
  eng.load(kernel);
  eng.begin_layer();
  SurroundResult result;
  result.report.model = options.mode;
  result.report.caveat = placement_caveat(options.mode);
  if (eng.targets_feasible()) {
    auto on_complete = [&]() {
      result.patch = eng.snapshot();
      return false;
    };
    eng.dfs(on_complete);
  }
  result.report.nodes = nodes;
  if (result.patch) {
    result.report.layers_completed = 1;
    result.report.status = HeeschStatus::kSurroundedKTimes;
    result.report.patches_per_depth = {1};
    result.report.witness = result.patch;
  } else {
    result.report.status = HeeschStatus::kNoFirstCorona;
  }
  return result;
}

HeeschReport surround_cluster(const Pentagon& p, const std::vector<Placement>& cluster, const SearchOptions& options) {
  HeeschRun run(p, options);
  return run.run(cluster, options);
}

HeeschReport heesch_bound(const Pentagon& p, const SearchOptions& options) {
  return surround_cluster(p, {identity_placement()}, options);
}

std::vector<std::vector<Placement>> three_tile_vertex_clusters(const Pentagon& p, const SearchOptions& options) {
  const double scale = p.longest_edge();
  std::vector<std::vector<Placement>> out;
  std::set<ClusterKey> seen;
  std::vector<WedgeUse> uses;
  for (int c = 0; c < 5; ++c) {
    uses.push_back({c, false});
    if (options.allow_reflections) uses.push_back({c, true});
  }
  for (const WedgeUse& u0 : uses) {
    for (const WedgeUse& u1 : uses) {
      for (const WedgeUse& u2 : uses) {
        const std::vector<WedgeUse> cycle{u0, u1, u2};
        const double sum = p.angles[u0.corner] + p.angles[u1.corner] + p.angles[u2.corner];
        if (std::abs(sum - kTwoPi) > kFillTol || !witness_valid(p, cycle)) continue;
        std::vector<Placement> cluster;
        double h = 0.0;
        for (const WedgeUse& u : cycle) {
          cluster.push_back(Placement{corner_pose(p, u.corner, u.reflected, Point{}, h)});
          h += p.angles[u.corner];
        }
        Arrangement arr(ContactPolicy::kEdgeToEdge, scale);
        bool ok = true;
        for (const Placement& pl : cluster) {
          ok = ok && arr.add_tile(placed_polygon(p, pl), placed_labels(pl)) == AddResult::kOk;
        }
        if (!ok) continue;
        if (seen.insert(cluster_key(cluster, scale)).second) out.push_back(std::move(cluster));
      }
    }
  }
  return out;
}

std::optional<ClusterSearchResult> find_once_surroundable_cluster(const Pentagon& p, const SearchOptions& options) {
  SearchOptions opt = options;
  opt.layer_limit = 2;
  std::size_t tried = 0;
  for (const auto& cluster : three_tile_vertex_clusters(p, opt)) {
    ++tried;
    HeeschReport r = surround_cluster(p, cluster, opt);
    if (r.layers_completed == 1) return ClusterSearchResult{cluster, std::move(r), tried};
  }
  return std::nullopt;
}

std::vector<DeadSpot> dead_spots(const Pentagon& p, const Patch& patch) {
  std::uint64_t nodes = 0;
  SearchOptions opt;
  opt.mode = patch.mode;
  Engine eng(p, opt, &nodes);
  eng.load(patch.all());
  return eng.dead_spots();
}

PatchBoundary patch_boundary(const Pentagon& p, const Patch& patch) {
  std::vector<ConvexPolygon> polys;
  for (const Placement& pl : patch.all()) polys.push_back(placed_polygon(p, pl));
  return trace_boundary(polys);
}

PatchValidation validate_patch(const Pentagon& p, const Patch& patch) {
  PatchValidation v;
  auto fail = [&](std::string kind, std::string detail) {
    v.violations.push_back(PatchViolation{std::move(kind), std::move(detail)});
  };
  const double scale = p.longest_edge();
  const double tol = kCoincideTol * scale;

  // Tiles grouped by layer, kernel first.
  std::vector<std::vector<ConvexPolygon>> groups;
  groups.emplace_back();
  for (const Placement& pl : patch.kernel) groups.back().push_back(placed_polygon(p, pl));
  for (const auto& layer : patch.layers) {
    groups.emplace_back();
    for (const Placement& pl : layer) groups.back().push_back(placed_polygon(p, pl));
  }
  std::vector<ConvexPolygon> all;
  for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  if (all.empty()) {
    fail("geometry", "empty patch");
    return v;
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const double a = overlap_area(all[i], all[j]);
      if (a > kOverlapAreaTol * scale * scale) {
        fail("overlap", "tiles " + std::to_string(i) + " and " + std::to_string(j) + " overlap by area " +
                            std::to_string(a));
      }
    }
  }
  if (!v.ok()) return v;

  // Arrangement of the first `count` tiles; nullopt if they cannot be added.
  auto build = [&](std::size_t count) -> std::optional<Arrangement> {
    Arrangement arr(ContactPolicy::kAllowCollinear, scale);
    for (std::size_t i = 0; i < count; ++i) {
      if (arr.add_tile(all[i]) != AddResult::kOk) return std::nullopt;
    }
    return arr;
  };

  auto full = build(all.size());
  if (!full) {
    fail("geometry", "tiles do not form a consistent arrangement");
    return v;
  }
  std::vector<BoundaryLoop> loops;
  try {
    loops = full->boundary_loops();
  } catch (const GeometryError& e) {
    fail("geometry", e.what());
    return v;
  }
  std::vector<char> on_outer(full->point_count(), 0);
  int outer = 0;
  for (const BoundaryLoop& l : loops) {
    if (l.signed_area < 0.0) {
      fail("hole", "boundary loop with area " + std::to_string(l.signed_area));
      continue;
    }
    ++outer;
    for (int pt : l.points) on_outer[pt] = 1;
  }
  if (outer != 1) fail("geometry", std::to_string(outer) + " outer boundary loops");
  for (std::size_t i = 0; i < full->point_count(); ++i) {
    if (on_outer[i]) continue;
    const double sum = rad_to_deg(full->point(i).covered);
    if (std::abs(sum - 360.0) > 1e-6) {
      fail("angle-sum", "interior junction sums to " + std::to_string(sum) + " degrees");
    }
  }

  // Each layer must touch the previous group and cover its boundary.
  std::size_t inner_count = groups[0].size();
  for (std::size_t g = 1; g < groups.size(); ++g) {
    for (std::size_t t = 0; t < groups[g].size(); ++t) {
      bool touches = false;
      for (const ConvexPolygon& q : groups[g - 1]) touches = touches || polygons_touch(groups[g][t], q, tol);
      if (!touches) fail("layer-contact", "layer " + std::to_string(g) + " tile " + std::to_string(t));
    }
    auto inner = build(inner_count);
    auto upto = build(inner_count + groups[g].size());
    if (!inner || !upto) {
      fail("geometry", "layer " + std::to_string(g) + " does not form a consistent arrangement");
      inner_count += groups[g].size();
      continue;
    }
    std::vector<BoundaryLoop> inner_loops;
    try {
      inner_loops = inner->boundary_loops();
    } catch (const GeometryError& e) {
      fail("geometry", e.what());
      inner_count += groups[g].size();
      continue;
    }
    const std::span<const ConvexPolygon> ring(all.data() + inner_count, groups[g].size());
    for (const BoundaryLoop& l : inner_loops) {
      for (std::size_t k = 0; k < l.points.size(); ++k) {
        const Point a = inner->point(l.points[k]).pos;
        const Point b = inner->point(l.points[(k + 1) % l.points.size()]).pos;
        const int id = upto->find_point(a);
        if (id < 0 || !upto->is_closed(id)) {
          fail("coverage", "layer " + std::to_string(g) + " leaves a boundary vertex of the inner patch open");
        }
        // Points just outside the boundary edge must lie in the new layer.
        const Point d = b - a;
        const Point out_normal = Point{d.y, -d.x} * (1.0 / norm(d));
        for (double f : {0.25, 0.5, 0.75}) {
          const Point s = a + f * d + (1e-4 * scale) * out_normal;
          bool inside = false;
          for (const ConvexPolygon& t : ring) inside = inside || point_in_convex(s, t);
          if (!inside) {
            fail("coverage", "layer " + std::to_string(g) + " leaves part of the inner boundary uncovered");
            break;
          }
        }
      }
    }
    inner_count += groups[g].size();
  }
  return v;
}

}  // namespace pentaheesch
