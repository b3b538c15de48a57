#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pentaheesch/catalog.hpp"
#include "pentaheesch/solver.hpp"

namespace pentaheesch {
namespace {

TEST(Catalog, CountsRoundTrip) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> u(0, 12);
  for (int trial = 0; trial < 300; ++trial) {
    CornerCounts c{};
    for (int& k : c) k = u(rng) < 6 ? 0 : u(rng);
    if (total_corners(c) == 0) c[kC] = 1;
    EXPECT_EQ(parse_counts(format_counts(c)), c) << format_counts(c);
  }
  EXPECT_EQ(format_counts({2, 1, 0, 0, 0}), "2A+B");
  EXPECT_EQ(parse_counts("3D+2E"), (CornerCounts{0, 0, 0, 3, 2}));
  EXPECT_EQ(parse_counts("B+C+E"), (CornerCounts{0, 1, 1, 0, 1}));
  EXPECT_THROW(parse_counts("2X"), std::invalid_argument);
  EXPECT_THROW(parse_counts(""), std::invalid_argument);
}

TEST(Catalog, SeventeenCategories) {
  const auto ids = category_ids();
  ASSERT_EQ(ids.size(), 17u);
  for (int k = 0; k < 17; ++k) EXPECT_EQ(ids[k], k + 1);
  EXPECT_THROW(category_info(18), CatalogError);
}

TEST(Catalog, EdgeClassesPartitionTheEdges) {
  for (int id : category_ids()) {
    std::multiset<int> seen;
    for (const auto& cls : category_info(id).edge_classes) seen.insert(cls.begin(), cls.end());
    EXPECT_EQ(seen, (std::multiset<int>{0, 1, 2, 3, 4})) << "category " << id;
  }
}

TEST(Catalog, ParameterChecks) {
  EXPECT_NO_THROW(check_params(1, {}));
  EXPECT_THROW(check_params(1, Params{std::nullopt, 1}), CatalogError);
  EXPECT_THROW(check_params(3, {}), CatalogError);
  EXPECT_THROW(check_params(8, Params{std::nullopt, 0}), ParamOutOfDomain);
  EXPECT_FALSE(in_domain(8, Params{std::nullopt, 0}));
  EXPECT_TRUE(in_domain(4, Params{2, 1}));
  EXPECT_FALSE(in_domain(4, Params{0, 1}));
}

TEST(Catalog, ReferenceRowsAreTabulatedAndInDomain) {
  const auto& rows = reference_rows();
  EXPECT_GE(rows.size(), 35u);
  for (const ReferenceRow& row : rows) {
    EXPECT_TRUE(in_domain(row.category, row.params)) << row.category << ' ' << format_params(row.params);
    const auto listed = tabulated_params(row.category);
    EXPECT_NE(std::find(listed.begin(), listed.end(), row.params), listed.end());
    ASSERT_TRUE(reference_row(row.category, row.params).has_value());
    double sum = 0.0;
    for (double a : row.angles_deg) sum += a;
    EXPECT_NEAR(sum, 540.0, 0.05) << row.category << ' ' << format_params(row.params);
  }
  EXPECT_EQ(std::count_if(rows.begin(), rows.end(), [](const ReferenceRow& r) { return r.category == 4; }), 12);
}

// The printed angles are rounded to two decimals, so each relation holds on
// them only up to the accumulated rounding.
TEST(Catalog, PrintedRowsSatisfyTheirRelations) {
  for (const ReferenceRow& row : reference_rows()) {
    for (const AngleRelation& rel : angle_relations(row.category, row.params)) {
      double lhs = 0.0, slack = 0.0;
      for (int k = 0; k < 5; ++k) {
        lhs += rel.coeffs[k] * row.angles_deg[k];
        slack += std::abs(rel.coeffs[k]) * 0.005;
      }
      EXPECT_NEAR(lhs, rel.rhs_deg, slack + 1e-9) << row.category << ' ' << format_params(row.params) << ": " << rel.text;
    }
  }
}

TEST(Catalog, StatedSpotsSumToFullTurnOnSolvedPentagons) {
  for (const ReferenceRow& row : reference_rows()) {
    const Pentagon p = solve(row.category, row.params).pentagon;
    const StatedSpots s = stated_spots(row.category, row.params);
    for (const auto* list : {&s.eec, &s.neec}) {
      for (const CornerCounts& c : *list) {
        double sum = 0.0;
        for (int k = 0; k < 5; ++k) sum += c[k] * rad_to_deg(p.angles[k]);
        EXPECT_NEAR(sum, 360.0, 1e-6) << row.category << ' ' << format_params(row.params) << ' ' << format_counts(c);
      }
    }
  }
}

TEST(Catalog, HeeschClassMatchesTypes) {
  for (const ReferenceRow& row : reference_rows()) {
    EXPECT_EQ(heesch_class(row.category, row.params), row.heesch);
    EXPECT_EQ(known_types(row.category, row.params).empty(), row.heesch == HeeschClass::kOne);
  }
}

}  // namespace
}  // namespace pentaheesch
