#include <gtest/gtest.h>

#include <cmath>

#include "pentaheesch/solver.hpp"

namespace pentaheesch {
namespace {

double max_angle_diff_deg(const Pentagon& a, const Pentagon& b) {
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) worst = std::max(worst, rad_to_deg(std::abs(a.angles[k] - b.angles[k])));
  return worst;
}

TEST(Solver, EveryReferenceRowSolvesToAValidPentagon) {
  for (const ReferenceRow& row : reference_rows()) {
    const Solution s = solve(row.category, row.params);
    EXPECT_NO_THROW(s.pentagon.validate());
    EXPECT_LT(s.trace.closure_residual, 1e-9);
    EXPECT_LT(closure_residual(s.pentagon.angles, s.pentagon.edges), 1e-9);
    for (double r : s.trace.relation_residuals_deg) EXPECT_LT(std::abs(r), 1e-9);
    for (int k = 0; k < 5; ++k) {
      EXPECT_NEAR(rad_to_deg(s.pentagon.angles[k]), row.angles_deg[k], 0.01)
          << row.category << ' ' << format_params(row.params) << " corner " << corner_letter(k);
    }
  }
}

TEST(Solver, EdgeClassesHold) {
  for (const ReferenceRow& row : reference_rows()) {
    const Pentagon p = solve(row.category, row.params).pentagon;
    const auto& classes = category_info(row.category).edge_classes;
    for (const auto& cls : classes) {
      for (int e : cls) EXPECT_NEAR(p.edges[e], p.edges[cls.front()], 1e-9 * p.longest_edge());
    }
    // Distinct classes have distinct lengths.
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        EXPECT_GT(std::abs(p.edges[classes[i][0]] - p.edges[classes[j][0]]), 1e-6 * p.longest_edge());
      }
    }
  }
}

TEST(Solver, CoordinatesMatchAnglesAndEdges) {
  const Pentagon p = solve(2, {}).pentagon;
  const ConvexPolygon poly = p.polygon();
  ASSERT_TRUE(poly.is_ccw());
  EXPECT_EQ(p.vertices()[kA], (Point{0, 0}));
  EXPECT_NEAR(p.vertices()[kB].y, 0.0, 1e-15);
  for (int k = 0; k < 5; ++k) {
    EXPECT_NEAR(poly.interior_angle(k), p.angles[k], 1e-9);
    EXPECT_NEAR(poly.edge_length((k + 4) % 5), p.edges[k], 1e-9);  // edge k joins corners k-1 and k
  }
}

TEST(Solver, RootScanIsIndependentOfBracketOffset) {
  for (const ReferenceRow& row : reference_rows()) {
    SolveOptions generic;
    generic.use_closed_forms = false;
    const Solution base = solve(row.category, row.params, generic);
    for (double offset : {0.17, 0.5, 0.83}) {
      generic.scan_offset = offset;
      const Solution shifted = solve(row.category, row.params, generic);
      EXPECT_LT(max_angle_diff_deg(base.pentagon, shifted.pentagon), 1e-9)
          << row.category << ' ' << format_params(row.params) << " offset " << offset;
      EXPECT_EQ(shifted.trace.roots_found, 1);
    }
  }
}

TEST(Solver, ClosedFormsAgreeWithGenericRoute) {
  for (const ReferenceRow& row : reference_rows()) {
    SolveOptions generic;
    generic.use_closed_forms = false;
    const Solution a = solve(row.category, row.params);
    const Solution b = solve(row.category, row.params, generic);
    EXPECT_LT(max_angle_diff_deg(a.pentagon, b.pentagon), 1e-8) << row.category << ' ' << format_params(row.params);
  }
}

// Independent oracle: sigma solves 2 sin^2 x + sin x = 2 at n = 1 via the
// quadratic formula, lambda is fixed by the category 1 relations alone.
TEST(Solver, FamilyParametersMatchIndependentRoots) {
  const double sigma = std::asin((std::sqrt(17.0) - 1.0) / 4.0);
  EXPECT_NEAR(2 * std::sin(sigma) * std::sin(sigma) + std::sin(sigma), 2.0, 1e-12);
  const Solution s3 = solve(3, Params{std::nullopt, 1});
  bool found = false;
  for (const auto& [name, value] : s3.trace.aux) {
    if (name == "sigma") {
      found = true;
      EXPECT_NEAR(value, rad_to_deg(sigma), 1e-9);
    }
  }
  EXPECT_TRUE(found);
  const Pentagon p1 = solve(1, {}, SolveOptions{true, false, 0.0}).pentagon;
  EXPECT_NEAR(p1.angles[kA] - kPi / 2, 0.4125742, 1e-6);
  EXPECT_NEAR(deg_to_rad(family_parameter(1, {}).value_deg), p1.angles[kA] - kPi / 2, 1e-9);
}

TEST(Solver, MuApproachesRightAngleMonotonically) {
  double prev = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const double mu = family_parameter(3, Params{std::nullopt, n}).value_deg;
    EXPECT_GT(mu, prev);
    EXPECT_LT(mu, 90.0);
    prev = mu;
  }
}

TEST(Solver, OutsideTheDomainThereIsNoPentagon) {
  EXPECT_THROW(solve(8, Params{std::nullopt, 0}), ParamOutOfDomain);
  SolveOptions loose;
  loose.check_domain = false;
  EXPECT_THROW(solve(8, Params{std::nullopt, 6}, loose), NoSolution);
  EXPECT_THROW(solve(5, Params{std::nullopt, 4}, loose), NoSolution);
  EXPECT_THROW(solve(3, Params{std::nullopt, 0}, loose), NoSolution);
}

TEST(Solver, Type7SweepFindsOnlyTwo) {
  const Type7Report r = type7_uniqueness_check();
  EXPECT_TRUE(r.only_two);
  EXPECT_EQ(r.integer_solutions, std::vector<int>{2});
  EXPECT_FALSE(r.samples.empty());
}

}  // namespace
}  // namespace pentaheesch
