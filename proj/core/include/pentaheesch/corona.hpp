#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentaheesch/arrangement.hpp"
#include "pentaheesch/geom.hpp"
#include "pentaheesch/solver.hpp"

namespace pentaheesch {

enum class PlacementModel {
  kEecOnly,           // copies meet only vertex-to-vertex along full edges
  kEecPlusCollinear,  // also a copy's vertex on an existing vertex with an edge along a boundary line
};

std::string to_string(PlacementModel m);
PlacementModel parse_placement_model(const std::string& s);  // "eec" | "eec+collinear"
// Completeness caveat attached to every report produced under the model.
std::string placement_caveat(PlacementModel m);

// A congruent copy: pose applied to the pentagon's canonical polygon
// (Pentagon::vertices()).
struct Placement {
  Isometry pose;
};

struct Patch {
  std::vector<Placement> kernel;
  std::vector<std::vector<Placement>> layers;
  PlacementModel mode = PlacementModel::kEecOnly;

  std::vector<Placement> all() const;
  std::size_t tile_count() const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes);
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

struct SearchOptions {
  PlacementModel mode = PlacementModel::kEecOnly;
  int layer_limit = 3;
  std::uint64_t budget = 10'000'000;  // placement nodes
  bool allow_reflections = true;
};

enum class HeeschStatus {
  kSurroundedKTimes,
  kNoFirstCorona,
  kDeadSpotCertificate,
  kSearchExhausted,
  kLayerLimitReached,
};
std::string to_string(HeeschStatus s);

// Boundary vertex whose exterior gap no combination of corners can fill.
struct DeadSpot {
  Point position;
  double gap_deg = 0.0;
  CornerCounts corners{};    // corners already meeting there
  int straight_contacts = 0; // copies whose edge passes through the point
  double nearest_below_deg = 0.0;  // largest corner sum below the gap
  double nearest_above_deg = 0.0;  // smallest corner sum above the gap
};

struct HeeschReport {
  int layers_completed = 0;
  HeeschStatus status = HeeschStatus::kNoFirstCorona;
  std::optional<DeadSpot> certificate;
  PlacementModel model = PlacementModel::kEecOnly;
  std::string caveat;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> patches_per_depth;  // completed patches found with k layers, k = 1..
  std::uint64_t refuted_by_dead_spot = 0;        // deepest patches closed off by a dead spot
  std::uint64_t refuted_by_search = 0;           // deepest patches whose next layer search failed
  std::optional<Patch> witness;                  // first patch reaching layers_completed
};

// Exterior gap (degrees) fillable by corners, optionally together with one
// straight contact (which contributes 180). Tolerance 1e-6 degrees.
bool gap_fillable(const Pentagon& p, double gap_deg, bool allow_straight);

// Pose putting corner `corner` (in the given chirality) at `at`, with its
// clockwise flank along `heading`.
Isometry corner_pose(const Pentagon& p, int corner, bool reflected, Point at, double heading);

// Counter-clockwise polygon of a placement and the corner label of each of
// its vertices.
ConvexPolygon placed_polygon(const Pentagon& p, const Placement& pl);
std::vector<int> placed_labels(const Placement& pl);

// Every admissible copy filling the free sector at `anchor` that follows the
// earliest-placed wedge there. Empty if the anchor is covered or unknown.
std::vector<Placement> candidate_placements(const Pentagon& p, const Patch& patch, Point anchor,
                                            const SearchOptions& options);

// All ways to close the vertex at `vertex` completely, each a list of added
// copies. Only overlaps and the vertex itself constrain the copies; whether
// the rest of the boundary can still be surrounded is not checked.
std::vector<std::vector<Placement>> vertex_patterns(const Pentagon& p, const Patch& patch, Point vertex,
                                                    const SearchOptions& options);

struct SurroundResult {
  HeeschReport report;
  std::optional<Patch> patch;
};

// One layer around the kernel (first found).
SurroundResult surround(const Pentagon& p, const std::vector<Placement>& kernel, const SearchOptions& options);

// Every complete first layer around the kernel, in search order.
std::vector<Patch> enumerate_coronas(const Pentagon& p, const std::vector<Placement>& kernel,
                                     const SearchOptions& options, std::size_t limit = SIZE_MAX);

HeeschReport heesch_bound(const Pentagon& p, const SearchOptions& options);
HeeschReport surround_cluster(const Pentagon& p, const std::vector<Placement>& cluster, const SearchOptions& options);

// Connected edge-to-edge clusters of three copies around a vertex where three
// copies meet, one per congruence class.
std::vector<std::vector<Placement>> three_tile_vertex_clusters(const Pentagon& p, const SearchOptions& options);

struct ClusterSearchResult {
  std::vector<Placement> cluster;
  HeeschReport report;
  std::size_t clusters_tried = 0;
};

// First cluster from three_tile_vertex_clusters that can be surrounded once
// but not twice (layer_limit forced to 2).
std::optional<ClusterSearchResult> find_once_surroundable_cluster(const Pentagon& p, const SearchOptions& options);

struct PatchViolation {
  std::string kind;  // "overlap", "coverage", "angle-sum", "hole", "layer-contact", "geometry"
  std::string detail;
};

struct PatchValidation {
  std::vector<PatchViolation> violations;
  bool ok() const { return violations.empty(); }
};

PatchValidation validate_patch(const Pentagon& p, const Patch& patch);

// Every open boundary arc of the patch that no corner combination fills
// (straight contacts count in collinear mode).
std::vector<DeadSpot> dead_spots(const Pentagon& p, const Patch& patch);

// Traced outer boundary of the whole patch.
PatchBoundary patch_boundary(const Pentagon& p, const Patch& patch);

}  // namespace pentaheesch
