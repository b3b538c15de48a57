#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "pentaheesch/corona.hpp"

namespace pentaheesch {
namespace {

const Params kNone{};
Params n_of(int n) { return Params{std::nullopt, n}; }

SearchOptions collinear() {
  SearchOptions o;
  o.mode = PlacementModel::kEecPlusCollinear;
  return o;
}

// Order-free fingerprint of a patch's layers: every placed vertex with its
// label, rounded to 1e-6 of the tile scale.
std::set<std::tuple<long long, long long, int>> signature(const Pentagon& p, const Patch& patch) {
  const double q = 1e-6 * p.longest_edge();
  std::set<std::tuple<long long, long long, int>> sig;
  for (const auto& layer : patch.layers) {
    for (const Placement& pl : layer) {
      const ConvexPolygon poly = placed_polygon(p, pl);
      const auto labels = placed_labels(pl);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        sig.emplace(std::llround(poly[i].x / q), std::llround(poly[i].y / q), labels[i]);
      }
    }
  }
  return sig;
}

// Oracle for the dead-spot test: can nonnegative multiples of the corner
// angles, plus at most `straights` extra 180s, reach `gap` within 1e-6 deg?
bool reachable(const std::array<double, 5>& deg, double gap, int straights) {
  auto rec = [&](auto&& self, int k, double left) -> bool {
    if (std::abs(left) <= 1e-6) return true;
    if (left < 0.0 || k == 5) return false;
    for (double r = left; r > -1e-6; r -= deg[k]) {
      if (self(self, k + 1, r)) return true;
    }
    return false;
  };
  for (int s = 0; s <= straights; ++s) {
    if (rec(rec, 0, gap - 180.0 * s)) return true;
  }
  return false;
}

TEST(Corona, CornerPosePutsTheCornerAndFlankWhereAsked) {
  const Pentagon p = solve(2, kNone).pentagon;
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int corner = 0; corner < 5; ++corner) {
    for (bool refl : {false, true}) {
      const Point at{u(rng), u(rng)};
      const double h = normalize_angle(u(rng));
      const Placement pl{corner_pose(p, corner, refl, at, h)};
      const ConvexPolygon poly = placed_polygon(p, pl);
      const auto labels = placed_labels(pl);
      ASSERT_TRUE(poly.is_ccw());
      const auto it = std::find(labels.begin(), labels.end(), corner);
      ASSERT_NE(it, labels.end());
      const std::size_t i = it - labels.begin();
      EXPECT_NEAR(distance(poly[i], at), 0.0, 1e-12);
      // The clockwise flank runs to the ccw-next vertex of the placed polygon.
      const Point next = poly[(i + 1) % poly.size()];
      const double d = normalize_angle(heading(next - at) - h);
      EXPECT_LT(std::min(d, kTwoPi - d), 1e-9);
      const int along = refl ? (corner + 4) % 5 : (corner + 1) % 5;
      EXPECT_EQ(labels[(i + 1) % poly.size()], along);
    }
  }
}

TEST(Corona, PlacedLabelsCarryTheirAngles) {
  const Pentagon p = solve(7, kNone).pentagon;
  for (bool refl : {false, true}) {
    const Placement pl{Isometry::make(1.3, {2.0, -1.0}, refl)};
    const ConvexPolygon poly = placed_polygon(p, pl);
    const auto labels = placed_labels(pl);
    EXPECT_EQ(labels, refl ? (std::vector<int>{4, 3, 2, 1, 0}) : (std::vector<int>{0, 1, 2, 3, 4}));
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(poly.interior_angle(i), p.angles[labels[i]], 1e-9);
  }
}

TEST(Corona, GapFillableAgreesWithSubsetSumOracle) {
  for (const ReferenceRow& row : reference_rows()) {
    const Pentagon p = solve(row.category, row.params).pentagon;
    const auto deg = p.angles_deg();
    for (double gap = 10.0; gap < 360.0; gap += 3.7) {
      EXPECT_EQ(gap_fillable(p, gap, false), reachable(deg, gap, 0));
      EXPECT_EQ(gap_fillable(p, gap, true), reachable(deg, gap, 1));
    }
    for (double a : deg) EXPECT_TRUE(gap_fillable(p, a, false));
  }
}

class Category1 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    p_ = new Pentagon(solve(1, kNone).pentagon);
    eec_ = new std::vector<Patch>(enumerate_coronas(*p_, {Placement{}}, SearchOptions{}));
    col_ = new std::vector<Patch>(enumerate_coronas(*p_, {Placement{}}, collinear()));
  }
  static void TearDownTestSuite() {
    delete p_;
    delete eec_;
    delete col_;
  }
  static Pentagon* p_;
  static std::vector<Patch>* eec_;
  static std::vector<Patch>* col_;
};
Pentagon* Category1::p_ = nullptr;
std::vector<Patch>* Category1::eec_ = nullptr;
std::vector<Patch>* Category1::col_ = nullptr;

TEST_F(Category1, VertexDClosesInTwoWays) {
  Patch lone;
  lone.kernel = {Placement{}};
  const auto patterns = vertex_patterns(*p_, lone, p_->vertices()[kD], SearchOptions{});
  ASSERT_EQ(patterns.size(), 2u);
  for (const auto& added : patterns) {
    Patch closed = lone;
    closed.layers = {added};
    // Each pattern fills exactly the 360 degrees at D.
    double sum = p_->angles[kD];
    for (const Placement& pl : added) {
      const ConvexPolygon poly = placed_polygon(*p_, pl);
      const auto labels = placed_labels(pl);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        if (distance(poly[i], p_->vertices()[kD]) < 1e-9) sum += p_->angles[labels[i]];
      }
    }
    EXPECT_NEAR(sum, kTwoPi, 1e-9);
  }
}

TEST_F(Category1, CoronaCensus) {
  EXPECT_EQ(eec_->size(), 4u);
  EXPECT_GE(col_->size(), 6u);
  EXPECT_GT(col_->size(), eec_->size());
}

TEST_F(Category1, CoronasAreDistinct) {
  for (const auto* set : {eec_, col_}) {
    std::set<std::set<std::tuple<long long, long long, int>>> seen;
    for (const Patch& c : *set) EXPECT_TRUE(seen.insert(signature(*p_, c)).second);
  }
  // Every edge-to-edge corona is also found under the wider model.
  std::set<std::set<std::tuple<long long, long long, int>>> wide;
  for (const Patch& c : *col_) wide.insert(signature(*p_, c));
  for (const Patch& c : *eec_) EXPECT_TRUE(wide.count(signature(*p_, c)));
}

TEST_F(Category1, CoronasValidate) {
  for (const auto* set : {eec_, col_}) {
    for (const Patch& c : *set) {
      const PatchValidation v = validate_patch(*p_, c);
      EXPECT_TRUE(v.ok()) << (v.ok() ? "" : v.violations.front().kind + ": " + v.violations.front().detail);
    }
  }
}

TEST_F(Category1, EveryCoronaHasADeadDoubleE) {
  for (const auto* set : {eec_, col_}) {
    for (const Patch& c : *set) {
      const auto dead = dead_spots(*p_, c);
      const bool has = std::any_of(dead.begin(), dead.end(), [](const DeadSpot& d) {
        return d.corners == CornerCounts{0, 0, 0, 0, 2} && d.straight_contacts == 0;
      });
      EXPECT_TRUE(has);
    }
  }
}

TEST_F(Category1, DeadSpotsAreSound) {
  const auto deg = p_->angles_deg();
  for (const auto* set : {eec_, col_}) {
    for (const Patch& c : *set) {
      const int straights = c.mode == PlacementModel::kEecPlusCollinear ? 1 : 0;
      for (const DeadSpot& d : dead_spots(*p_, c)) {
        EXPECT_FALSE(reachable(deg, d.gap_deg, straights)) << d.gap_deg;
        double covered = 180.0 * d.straight_contacts;
        for (int k = 0; k < 5; ++k) covered += d.corners[k] * deg[k];
        EXPECT_NEAR(covered + d.gap_deg, 360.0, 1e-6);
        EXPECT_LT(d.nearest_below_deg, d.gap_deg);
        EXPECT_GT(d.nearest_above_deg, d.gap_deg);
      }
    }
  }
}

TEST_F(Category1, SearchIsDeterministic) {
  const auto again = enumerate_coronas(*p_, {Placement{}}, collinear());
  ASSERT_EQ(again.size(), col_->size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    ASSERT_EQ(again[i].layers.front().size(), (*col_)[i].layers.front().size());
    for (std::size_t j = 0; j < again[i].layers.front().size(); ++j) {
      const Isometry& a = again[i].layers.front()[j].pose;
      const Isometry& b = (*col_)[i].layers.front()[j].pose;
      EXPECT_EQ(a.rotation, b.rotation);
      EXPECT_EQ(a.translation, b.translation);
      EXPECT_EQ(a.reflected, b.reflected);
    }
  }
}

TEST_F(Category1, ValidationCatchesInjectedFaults) {
  const Patch& base = eec_->front();
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = base.layers.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    Patch shifted = base;
    Isometry& pose = shifted.layers.front()[i].pose;
    pose = Isometry::make(pose.rotation, pose.translation + Point{u(rng), u(rng)} * 1e-3, pose.reflected);
    EXPECT_FALSE(validate_patch(*p_, shifted).ok()) << "shift of copy " << i;

    Patch turned = base;
    Isometry& t = turned.layers.front()[i].pose;
    t = Isometry::make(t.rotation + 1e-3, t.translation, t.reflected);
    EXPECT_FALSE(validate_patch(*p_, turned).ok()) << "rotation of copy " << i;

    Patch missing = base;
    missing.layers.front().erase(missing.layers.front().begin() + static_cast<long>(i));
    EXPECT_FALSE(validate_patch(*p_, missing).ok()) << "copy " << i << " removed";
  }
  Patch doubled = base;
  doubled.layers.front().push_back(doubled.layers.front().front());
  const PatchValidation v = validate_patch(*p_, doubled);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations.front().kind, "overlap");
}

TEST(Corona, CandidatesAtAVertexStartOnTheFreeArc) {
  const Pentagon p = solve(6, kNone).pentagon;
  Patch lone;
  lone.kernel = {Placement{}};
  const Point b = p.vertices()[kB];
  const auto cands = candidate_placements(p, lone, b, SearchOptions{});
  EXPECT_FALSE(cands.empty());
  for (const Placement& pl : cands) {
    Patch two = lone;
    two.layers = {{pl}};
    const ConvexPolygon poly = placed_polygon(p, pl);
    EXPECT_LE(overlap_area(poly, p.polygon()), kOverlapAreaTol);
    const auto& v = poly.vertices();
    EXPECT_TRUE(std::any_of(v.begin(), v.end(), [&](Point q) { return distance(q, b) < 1e-9; }));
  }
  // No reflections means only the two rotations of each matching corner.
  SearchOptions plain;
  plain.allow_reflections = false;
  for (const Placement& pl : candidate_placements(p, lone, b, plain)) EXPECT_FALSE(pl.pose.reflected);
  EXPECT_TRUE(candidate_placements(p, lone, Point{50.0, 50.0}, SearchOptions{}).empty());
}

TEST(Corona, HeeschOneRowsCarrySoundCertificates) {
  SearchOptions opt;
  opt.layer_limit = 2;
  for (const ReferenceRow& row : reference_rows()) {
    if (row.heesch != HeeschClass::kOne) continue;
    const Pentagon p = solve(row.category, row.params).pentagon;
    const HeeschReport r = heesch_bound(p, opt);
    const std::string name = std::to_string(row.category) + " " + format_params(row.params);
    EXPECT_EQ(r.layers_completed, 1) << name;
    ASSERT_TRUE(r.witness.has_value()) << name;
    EXPECT_TRUE(validate_patch(p, *r.witness).ok()) << name;
    if (r.status == HeeschStatus::kDeadSpotCertificate) {
      ASSERT_TRUE(r.certificate.has_value());
      EXPECT_FALSE(reachable(p.angles_deg(), r.certificate->gap_deg, 0)) << name;
    } else {
      EXPECT_EQ(r.status, HeeschStatus::kSearchExhausted) << name;
    }
    EXPECT_FALSE(r.caveat.empty());
  }
}

TEST(Corona, TilingRowsReachTheLayerLimit) {
  SearchOptions opt;
  opt.layer_limit = 2;
  for (const auto& [cat, params] : std::vector<std::pair<int, Params>>{{3, n_of(1)}, {4, Params{2, 1}}, {11, n_of(1)}, {12, n_of(1)}}) {
    const Pentagon p = solve(cat, params).pentagon;
    const HeeschReport r = heesch_bound(p, opt);
    EXPECT_EQ(r.layers_completed, 2) << cat;
    EXPECT_EQ(r.status, HeeschStatus::kLayerLimitReached) << cat;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->layers.size(), 2u);
    EXPECT_TRUE(validate_patch(p, *r.witness).ok()) << cat;
  }
}

TEST(Corona, BudgetIsEnforced) {
  SearchOptions opt;
  opt.budget = 10;
  EXPECT_THROW(heesch_bound(solve(3, n_of(1)).pentagon, opt), BudgetExceeded);
}

TEST(Corona, ThreeTileClustersAreValidAndPairwiseIncongruent) {
  const Pentagon p = solve(9, kNone).pentagon;
  const auto clusters = three_tile_vertex_clusters(p, SearchOptions{});
  ASSERT_FALSE(clusters.empty());
  for (const auto& cl : clusters) {
    ASSERT_EQ(cl.size(), 3u);
    Patch patch;
    patch.kernel = cl;
    EXPECT_TRUE(validate_patch(p, patch).ok());
    // The three copies share a vertex.
    std::vector<Point> common;
    for (Point v : placed_polygon(p, cl[0]).vertices()) {
      bool in_all = true;
      for (int k = 1; k < 3; ++k) {
        const ConvexPolygon other = placed_polygon(p, cl[k]);
        const auto& w = other.vertices();
        in_all = in_all && std::any_of(w.begin(), w.end(), [&](Point q) { return distance(q, v) < 1e-9; });
      }
      if (in_all) common.push_back(v);
    }
    EXPECT_FALSE(common.empty());
  }
  const auto found = find_once_surroundable_cluster(p, SearchOptions{});
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->report.layers_completed, 1);
}

}  // namespace
}  // namespace pentaheesch
