#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentaheesch/catalog.hpp"
#include "pentaheesch/solver.hpp"

namespace pentaheesch {

enum class SpotClass { kEec, kNeec };
std::string to_string(SpotClass c);

// One corner placed around a point. A non-reflected wedge at corner X has the
// edge towards X+1 on its clockwise side and the edge towards X-1 on its
// counter-clockwise side; reflection swaps them.
struct WedgeUse {
  int corner = 0;
  bool reflected = false;

  friend bool operator==(const WedgeUse&, const WedgeUse&) = default;
};

// Edge index along the clockwise (start) and counter-clockwise (end) flank.
int start_flank(const WedgeUse& w);
int end_flank(const WedgeUse& w);

struct Spot {
  CornerCounts counts{};
  double angle_sum_deg = 0.0;
  std::optional<SpotClass> classification;
  std::vector<WedgeUse> witness;  // counter-clockwise cycle, present iff EEC
};

inline constexpr double kSpotTolDeg = 1e-7;

// Smallest corner count that exhausts multisets reaching `target_deg`.
int default_max_corners(const Pentagon& p, double target_deg = 360.0);

// All corner multisets with at most `max_corners` corners whose angles sum to
// `target_deg` within `tol_deg`. max_corners <= 0 selects the default.
// Sorted by descending multiplicity vector (A count first).
std::vector<Spot> enumerate_spots(const Pentagon& p, int max_corners = 0, double target_deg = 360.0,
                                  double tol_deg = kSpotTolDeg);

// Multisets summing to 180 degrees (straight contacts); never classified.
std::vector<Spot> enumerate_straight_spots(const Pentagon& p, int max_corners = 0);

double angle_sum_deg(const Pentagon& p, const CornerCounts& counts);
bool is_spot(const Pentagon& p, const CornerCounts& counts, double tol_deg = kSpotTolDeg);

// EEC iff some cyclic order of the corners, each in either chirality, makes
// every pair of touching flanks the same length.
Spot classify_spot(const Pentagon& p, const CornerCounts& counts);
std::vector<Spot> classify_all(const Pentagon& p, const std::vector<Spot>& spots);

// Chirality assignment realizing a fixed counter-clockwise corner word such as
// "CEAC", if any.
std::optional<std::vector<WedgeUse>> realize_word(const Pentagon& p, const std::string& word);

// True when consecutive wedges (cyclically) have matching flank lengths.
bool witness_valid(const Pentagon& p, const std::vector<WedgeUse>& cycle);

std::string format_witness(const std::vector<WedgeUse>& cycle);

struct SpotCheck {
  CornerCounts counts{};
  std::string source;                  // "remarks", "table vertex X", "angle relation"
  std::string word;                    // corner word for table entries
  std::optional<SpotClass> stated;     // unset for angle relations
  bool sums_to_360 = false;
  std::optional<SpotClass> computed;
  bool agrees = false;
};

struct RemarksReport {
  int category = 0;
  Params params;
  std::vector<SpotCheck> matched;
  std::vector<SpotCheck> contradicting;
  std::vector<Spot> unlisted;  // found by enumeration, not mentioned in the category data

  bool ok() const { return contradicting.empty(); }
};

RemarksReport verify_remarks(const Pentagon& p);
RemarksReport verify_remarks(int category, const Params& params);

}  // namespace pentaheesch
