#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "pentaheesch/spots.hpp"

namespace pentaheesch {
namespace {

// Oracle: odometer over all count vectors with at most `max_corners` corners.
std::set<CornerCounts> brute_force_spots(const Pentagon& p, int max_corners, double tol_deg) {
  const auto deg = p.angles_deg();
  std::set<CornerCounts> out;
  CornerCounts c{};
  while (true) {
    double sum = 0.0;
    for (int k = 0; k < 5; ++k) sum += c[k] * deg[k];
    if (total_corners(c) > 0 && std::abs(sum - 360.0) <= tol_deg) out.insert(c);
    int k = 0;
    while (k < 5) {
      ++c[k];
      if (total_corners(c) <= max_corners) break;
      c[k] = 0;
      ++k;
    }
    if (k == 5) break;
  }
  return out;
}

// Oracle: tries every cyclic corner order (rotated to start at the smallest
// label) and every chirality, comparing flank lengths directly.
bool brute_force_eec(const Pentagon& p, const CornerCounts& counts) {
  std::vector<int> word;
  for (int k = 0; k < 5; ++k) word.insert(word.end(), counts[k], k);
  const std::size_t n = word.size();
  const double tol = 1e-9 * p.longest_edge();
  // Non-reflected corner X: clockwise flank is the edge towards X+1, the
  // counter-clockwise flank the edge towards X-1.
  auto cw_len = [&](int corner, bool refl) { return refl ? p.edges[corner] : p.edges[(corner + 1) % 5]; };
  auto ccw_len = [&](int corner, bool refl) { return refl ? p.edges[(corner + 1) % 5] : p.edges[corner]; };
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const std::size_t j = (i + 1) % n;
        ok = std::abs(ccw_len(word[i], mask >> i & 1) - cw_len(word[j], mask >> j & 1)) <= tol;
      }
      if (ok) return true;
    }
  } while (std::next_permutation(word.begin() + 1, word.end()));
  return false;
}

TEST(Spots, FlankConvention) {
  EXPECT_EQ(start_flank({kC, false}), edge_after(kC));
  EXPECT_EQ(end_flank({kC, false}), edge_before(kC));
  EXPECT_EQ(start_flank({kC, true}), edge_before(kC));
  EXPECT_EQ(end_flank({kC, true}), edge_after(kC));
}

TEST(Spots, EnumerationEqualsBruteForce) {
  for (const ReferenceRow& row : reference_rows()) {
    const Pentagon p = solve(row.category, row.params).pentagon;
    const int max_corners = default_max_corners(p);
    const auto spots = enumerate_spots(p);
    std::set<CornerCounts> got;
    for (const Spot& s : spots) {
      got.insert(s.counts);
      EXPECT_NEAR(s.angle_sum_deg, 360.0, kSpotTolDeg);
    }
    EXPECT_EQ(got.size(), spots.size()) << "duplicate multisets";
    EXPECT_EQ(got, brute_force_spots(p, max_corners, kSpotTolDeg)) << row.category << ' ' << format_params(row.params);
    // One more corner of the smallest angle already overshoots, so the bound is exhaustive.
    const auto deg = p.angles_deg();
    EXPECT_GT(*std::min_element(deg.begin(), deg.end()) * (max_corners + 1), 360.0 + 1e-6);
  }
}

TEST(Spots, ClassificationEqualsBruteForce) {
  for (const ReferenceRow& row : reference_rows()) {
    const Pentagon p = solve(row.category, row.params).pentagon;
    for (const Spot& s : classify_all(p, enumerate_spots(p))) {
      if (total_corners(s.counts) > 14) continue;
      ASSERT_TRUE(s.classification.has_value());
      const bool eec = brute_force_eec(p, s.counts);
      EXPECT_EQ(*s.classification == SpotClass::kEec, eec)
          << row.category << ' ' << format_params(row.params) << ' ' << format_counts(s.counts);
      EXPECT_EQ(s.witness.empty(), !eec);
      if (eec) {
        EXPECT_TRUE(witness_valid(p, s.witness));
        CornerCounts used{};
        for (const WedgeUse& w : s.witness) ++used[w.corner];
        EXPECT_EQ(used, s.counts);
      }
    }
  }
}

TEST(Spots, WitnessValidChecksEveryContact) {
  // Category 1: edge d is the odd one out, so D's d flank cannot meet A's b flank.
  const Pentagon p = solve(1, {}).pentagon;
  EXPECT_FALSE(witness_valid(p, {{kD, false}, {kA, false}}));
  EXPECT_FALSE(witness_valid(p, {{kD, false}, {kD, false}}));
  // Mirrored pair glued along d on one side and e on the other.
  EXPECT_TRUE(witness_valid(p, {{kD, false}, {kD, true}}));
}

TEST(Spots, TableArrangementWordsAreRealizable) {
  for (const ReferenceRow& row : reference_rows()) {
    const Pentagon p = solve(row.category, row.params).pentagon;
    for (const std::string& word : row.arrangements) {
      if (word.empty()) continue;
      const auto w = realize_word(p, word);
      ASSERT_TRUE(w.has_value()) << row.category << ' ' << format_params(row.params) << ' ' << word;
      ASSERT_EQ(w->size(), word.size());
      for (std::size_t i = 0; i < word.size(); ++i) EXPECT_EQ(corner_letter((*w)[i].corner), word[i]);
      EXPECT_TRUE(witness_valid(p, *w));
    }
  }
}

TEST(Spots, KnownExamples) {
  const Pentagon p17 = solve(17, Params{std::nullopt, 2}).pentagon;
  EXPECT_EQ(classify_spot(p17, parse_counts("6B+C")).classification, SpotClass::kEec);
  EXPECT_EQ(classify_spot(p17, parse_counts("9B")).classification, SpotClass::kEec);
  const Pentagon p1 = solve(1, {}).pentagon;
  EXPECT_FALSE(is_spot(p1, parse_counts("2E")));
  for (const Spot& s : enumerate_straight_spots(p1)) EXPECT_NEAR(s.angle_sum_deg, 180.0, kSpotTolDeg);
}

// Every stated label agrees with the computed one except the category 14
// multiset 2A+4D, which is realizable edge-to-edge on the solved pentagon
// although it is listed as non-edge-to-edge.
TEST(Spots, RemarksContradictionsAreExactlyTheKnownOne) {
  std::vector<std::string> contradictions;
  for (const ReferenceRow& row : reference_rows()) {
    const RemarksReport r = verify_remarks(row.category, row.params);
    for (const SpotCheck& c : r.contradicting) {
      contradictions.push_back(std::to_string(row.category) + " " + format_counts(c.counts));
    }
  }
  EXPECT_EQ(contradictions, std::vector<std::string>{"14 2A+4D"});
}

}  // namespace
}  // namespace pentaheesch
