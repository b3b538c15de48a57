#include <gtest/gtest.h>

#include <algorithm>

#include "pentaheesch/arrangement.hpp"

namespace pentaheesch {
namespace {

ConvexPolygon square(double x, double y, double side = 1.0) {
  return ConvexPolygon::from_vertices({{x, y}, {x + side, y}, {x + side, y + side}, {x, y + side}});
}

TEST(Arrangement, SharedCornerAccumulatesWedges) {
  Arrangement arr(ContactPolicy::kEdgeToEdge);
  ASSERT_EQ(arr.add_tile(square(0, 0)), AddResult::kOk);
  ASSERT_EQ(arr.add_tile(square(1, 0)), AddResult::kOk);
  ASSERT_EQ(arr.add_tile(square(0, 1)), AddResult::kOk);
  const int centre = arr.find_point({1, 1});
  ASSERT_GE(centre, 0);
  EXPECT_EQ(arr.point(centre).wedges.size(), 3u);
  EXPECT_NEAR(arr.gap(centre), kPi / 2, 1e-12);
  EXPECT_FALSE(arr.is_closed(centre));
  const auto arcs = arr.free_arcs(centre);
  ASSERT_EQ(arcs.size(), 1u);
  EXPECT_NEAR(arcs[0].span, kPi / 2, 1e-12);
  EXPECT_NEAR(arcs[0].start_len, 1.0, 1e-12);
  EXPECT_NEAR(arcs[0].end_len, 1.0, 1e-12);
  ASSERT_EQ(arr.add_tile(square(1, 1)), AddResult::kOk);
  EXPECT_TRUE(arr.is_closed(centre));
  EXPECT_TRUE(arr.free_arcs(centre).empty());
}

TEST(Arrangement, PopRestoresPreviousState) {
  Arrangement arr(ContactPolicy::kEdgeToEdge);
  ASSERT_EQ(arr.add_tile(square(0, 0)), AddResult::kOk);
  const std::size_t points = arr.point_count();
  const double gap = arr.gap(arr.find_point({1, 0}));
  ASSERT_EQ(arr.add_tile(square(1, 0)), AddResult::kOk);
  EXPECT_GT(arr.point_count(), points);
  arr.pop_tile();
  EXPECT_EQ(arr.tile_count(), 1u);
  EXPECT_EQ(arr.point_count(), points);
  EXPECT_EQ(arr.find_point({2, 0}), -1);
  EXPECT_DOUBLE_EQ(arr.gap(arr.find_point({1, 0})), gap);
}

TEST(Arrangement, RejectionLeavesArrangementUntouched) {
  Arrangement arr(ContactPolicy::kEdgeToEdge);
  ASSERT_EQ(arr.add_tile(square(0, 0)), AddResult::kOk);
  const std::size_t points = arr.point_count();
  EXPECT_EQ(arr.add_tile(square(0.5, 0.5)), AddResult::kOverlap);
  EXPECT_EQ(arr.tile_count(), 1u);
  EXPECT_EQ(arr.point_count(), points);
}

TEST(Arrangement, EdgeToEdgePolicyRejectsTJunctions) {
  // The small square's corner (2, 1) sits inside the big square's right edge.
  Arrangement eec(ContactPolicy::kEdgeToEdge);
  ASSERT_EQ(eec.add_tile(square(0, 0, 2)), AddResult::kOk);
  EXPECT_EQ(eec.add_tile(square(2, 0)), AddResult::kNotEdgeToEdge);

  Arrangement col(ContactPolicy::kAllowCollinear);
  ASSERT_EQ(col.add_tile(square(0, 0, 2)), AddResult::kOk);
  ASSERT_EQ(col.add_tile(square(2, 0)), AddResult::kOk);
  const int t = col.find_point({2, 1});
  ASSERT_GE(t, 0);
  // Straight wedge of the big square plus the small square's right angle.
  EXPECT_NEAR(col.gap(t), kPi / 2, 1e-12);
  const auto& wedges = col.point(t).wedges;
  EXPECT_TRUE(std::any_of(wedges.begin(), wedges.end(), [](const Wedge& w) { return w.corner == -1; }));
}

TEST(Arrangement, NextAlongRayFindsNearestJunction) {
  Arrangement arr(ContactPolicy::kEdgeToEdge);
  ASSERT_EQ(arr.add_tile(square(0, 0)), AddResult::kOk);
  ASSERT_EQ(arr.add_tile(square(1, 0)), AddResult::kOk);
  const int origin = arr.find_point({0, 0});
  EXPECT_EQ(arr.next_along_ray(origin, 0.0, 5.0), arr.find_point({1, 0}));
  EXPECT_EQ(arr.next_along_ray(origin, 0.0, 0.5), -1);
  EXPECT_EQ(arr.next_along_ray(origin, kPi, 5.0), -1);
}

TEST(Arrangement, BoundaryLoopsOfSimplePatch) {
  Arrangement arr(ContactPolicy::kEdgeToEdge);
  ASSERT_EQ(arr.add_tile(square(0, 0)), AddResult::kOk);
  ASSERT_EQ(arr.add_tile(square(1, 0)), AddResult::kOk);
  const auto loops = arr.boundary_loops();
  ASSERT_EQ(loops.size(), 1u);
  EXPECT_NEAR(loops[0].signed_area, 2.0, 1e-12);
  EXPECT_EQ(loops[0].points.size(), 6u);
  double free_total = 0.0;
  for (double f : loops[0].free_angles) free_total += f;
  // Exterior angles of a simple polygon with n vertices sum to (n + 2) * pi.
  EXPECT_NEAR(free_total, 8 * kPi, 1e-9);
}

TEST(Arrangement, RingOfSquaresHasOneHole) {
  Arrangement arr(ContactPolicy::kEdgeToEdge);
  std::vector<ConvexPolygon> ring;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x == 1 && y == 1) continue;
      ring.push_back(square(x, y));
      ASSERT_EQ(arr.add_tile(ring.back()), AddResult::kOk);
    }
  }
  const auto loops = arr.boundary_loops();
  ASSERT_EQ(loops.size(), 2u);
  const int outer = std::count_if(loops.begin(), loops.end(), [](const BoundaryLoop& l) { return l.signed_area > 0; });
  EXPECT_EQ(outer, 1);
  double total = 0.0;
  for (const auto& l : loops) total += l.signed_area;
  EXPECT_NEAR(total, 8.0, 1e-12);
  EXPECT_THROW(trace_boundary(ring), HoleDetected);
}

TEST(Arrangement, TraceBoundaryCollapsesFlatRuns) {
  const std::vector<ConvexPolygon> tiles = {square(0, 0, 2), square(2, 0), square(2, 1)};
  const PatchBoundary b = trace_boundary(tiles);
  const auto corners = b.corners();
  EXPECT_EQ(corners.size(), 4u);
  for (const auto& v : corners) EXPECT_NEAR(v.gap_deg, 270.0, 1e-9);
  EXPECT_GT(b.walk.size(), corners.size());
  EXPECT_THROW(trace_boundary(std::vector<ConvexPolygon>{square(0, 0), square(3, 0)}), NotConnected);
}

}  // namespace
}  // namespace pentaheesch
