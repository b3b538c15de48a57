#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentaheesch {

// Corner labels A..E (counter-clockwise). Edge labels: a = EA, b = AB,
// c = BC, d = CD, e = DE, so edge index k joins corners k-1 and k.
enum Corner : int { kA = 0, kB = 1, kC = 2, kD = 3, kE = 4 };

using CornerCounts = std::array<int, 5>;

char corner_letter(int corner);
char edge_letter(int edge);
// Index of the edge joining corners i and i+1 (mod 5).
inline int edge_after(int corner) { return (corner + 1) % 5; }
// Index of the edge joining corners i-1 and i.
inline int edge_before(int corner) { return corner; }

// "2A+B" style text; corners in A..E order, unit coefficients omitted.
std::string format_counts(const CornerCounts& counts);
// Parses "2A+B", "3D+2E", "B+C+E". Throws std::invalid_argument.
CornerCounts parse_counts(const std::string& text);
int total_corners(const CornerCounts& counts);

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter lies outside the category's domain; the message states which
// cases do not exist.
class ParamOutOfDomain : public CatalogError {
 public:
  using CatalogError::CatalogError;
};

struct Params {
  std::optional<int> m;
  std::optional<int> n;

  friend bool operator==(const Params&, const Params&) = default;
};

std::string format_params(const Params& p);

enum class ParamKind { kNone, kN, kMN };
enum class HeeschClass { kOne, kInfinite };

// Linear angle relation: sum_k coeffs[k] * angle_k = rhs_deg.
struct AngleRelation {
  CornerCounts coeffs{};
  double rhs_deg = 360.0;
  std::string text;
};

struct CategoryInfo {
  int id = 0;
  ParamKind kind = ParamKind::kNone;
  std::vector<std::string> angle_relations;  // with parameters left symbolic
  std::string edge_relation;                 // e.g. "a=b=c=e!=d"
  std::vector<std::vector<int>> edge_classes;  // edge indices per equal-length class
  std::string domain;                        // human-readable parameter domain
  std::string nonexistence;                  // cases that do not exist
};

const CategoryInfo& category_info(int id);
std::vector<int> category_ids();

// Throws ParamOutOfDomain (or CatalogError for an unknown category or a
// missing/extra parameter).
void check_params(int id, const Params& params);
bool in_domain(int id, const Params& params);

// Instantiated angle relations. With `check_domain == false` parameters
// outside the domain are still instantiated, which is how non-existent cases
// are shown to have no solution.
std::vector<AngleRelation> angle_relations(int id, const Params& params, bool check_domain = true);

HeeschClass heesch_class(int id, const Params& params);
// Known tile types the pentagon belongs to (empty when H = 1).
std::vector<std::string> known_types(int id, const Params& params);

// Parameter values listed in the reference tables (first few for the
// infinite families).
std::vector<Params> tabulated_params(int id);

struct ReferenceRow {
  int category = 0;
  Params params;
  HeeschClass heesch = HeeschClass::kOne;
  std::array<double, 5> angles_deg{};   // as printed, two decimals
  std::array<std::string, 5> arrangements;  // corners met at A..E, counter-clockwise; empty if none
  std::string note;
};

const std::vector<ReferenceRow>& reference_rows();
std::optional<ReferenceRow> reference_row(int id, const Params& params);

// Vertex spots stated for the category: each equal-length list holds corner
// multisets summing to 360 degrees.
struct StatedSpots {
  std::vector<CornerCounts> eec;
  std::vector<CornerCounts> neec;
};
StatedSpots stated_spots(int id, const Params& params);

}  // namespace pentaheesch
