#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pentaheesch/geom.hpp"

namespace pentaheesch {

enum class ContactPolicy {
  kEdgeToEdge,       // every tile vertex meets other tiles only at their vertices
  kAllowCollinear,   // a vertex may sit in the interior of another tile's edge
};

// Angular sector occupied at a junction point by one tile. The sector runs
// counter-clockwise from `start` for `span` radians. Both bounding rays lie
// along edges of the tile; the lengths are the distances along those edges to
// the tile's next vertex.
struct Wedge {
  double start = 0.0;
  double span = 0.0;
  double start_len = 0.0;
  double end_len = 0.0;
  int tile = -1;
  int corner = -1;  // corner label of the tile, or -1 for a straight (pi) wedge
};

struct Junction {
  Point pos;
  std::vector<Wedge> wedges;  // insertion order
  double covered = 0.0;
};

// Unoccupied sector at a junction, bounded by the end ray of wedge `before`
// and the start ray of wedge `after` (indices into Junction::wedges).
struct FreeArc {
  double start = 0.0;
  double span = 0.0;
  double start_len = 0.0;  // edge length along the start ray
  double end_len = 0.0;    // edge length along the end ray
  int before = -1;
  int after = -1;
};

enum class AddResult { kOk, kOverlap, kNotEdgeToEdge, kWedgeConflict };

// One closed walk around the patch, patch on the left. Positive area means
// the outer boundary; negative area means a hole.
struct BoundaryLoop {
  std::vector<int> points;
  std::vector<double> free_angles;  // exterior free arc at each point, radians
  double signed_area = 0.0;
};

// Incremental arrangement of convex tiles with vertex-junction bookkeeping and
// an undo stack. Tiles are stored counter-clockwise with a corner label per
// vertex.
class Arrangement {
 public:
  explicit Arrangement(ContactPolicy policy, double scale = 1.0);

  ContactPolicy policy() const { return policy_; }
  double scale() const { return scale_; }

  // `ccw_tile` must be counter-clockwise; `labels` gives the corner label of
  // each vertex (empty means 0..n-1). Nothing is modified unless kOk.
  AddResult add_tile(const ConvexPolygon& ccw_tile, std::span<const int> labels = {});
  // Removes the most recently added tile.
  void pop_tile();

  std::size_t tile_count() const { return tiles_.size(); }
  const ConvexPolygon& tile(std::size_t i) const { return tiles_[i].poly; }
  std::span<const int> tile_labels(std::size_t i) const { return tiles_[i].labels; }
  // Junction indices of the tile's vertices.
  std::span<const int> tile_points(std::size_t i) const { return tiles_[i].corner_points; }

  std::size_t point_count() const { return points_.size(); }
  const Junction& point(std::size_t i) const { return points_[i]; }
  double gap(std::size_t i) const { return kTwoPi - points_[i].covered; }
  bool is_closed(std::size_t i) const { return gap(i) <= kAngleTol; }
  std::vector<FreeArc> free_arcs(std::size_t i) const;
  // Junctions created or touched by the most recent successful add_tile.
  std::span<const int> last_touched() const { return journal_.back().touched; }

  // Junction at `p`, or -1.
  int find_point(Point p) const;
  // Nearest junction from `from` along heading `dir` within `max_len`, or -1.
  int next_along_ray(int from, double dir, double max_len) const;

  // All boundary loops. Throws GeometryError on an inconsistent walk.
  std::vector<BoundaryLoop> boundary_loops() const;

 private:
  struct TileRec {
    ConvexPolygon poly;
    std::vector<int> labels;
    std::vector<int> corner_points;
    BBox box;
  };
  struct JournalEntry {
    std::size_t points_before = 0;
    std::vector<int> touched;  // junctions that received a wedge
  };
  struct PendingWedge {
    int point;  // -1 means a new point at `pos`
    Point pos;
    Wedge wedge;
  };

  bool wedge_fits(const Junction& j, const Wedge& w) const;

  ContactPolicy policy_;
  double scale_;
  std::vector<TileRec> tiles_;
  std::vector<Junction> points_;
  std::vector<JournalEntry> journal_;
};

// Raw and collapsed boundary of a patch of tiles.
struct BoundaryVertex {
  Point pos;
  std::vector<int> tiles;       // tiles with a corner or edge at this vertex
  double gap_deg = 0.0;         // 360 - interior angles, or 180 - angles on a straight run
  bool flat = false;            // the boundary runs straight through
};

struct PatchBoundary {
  std::vector<BoundaryVertex> walk;  // every junction visited, patch on the left
  std::vector<BoundaryVertex> corners() const;  // walk with flat vertices removed
};

class HoleDetected : public GeometryError {
 public:
  using GeometryError::GeometryError;
};
class NotConnected : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Traces the outer boundary of a patch of non-overlapping convex tiles.
// Vertices may meet at corners or in the interior of edges.
PatchBoundary trace_boundary(std::span<const ConvexPolygon> tiles);

}  // namespace pentaheesch
