#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pentaheesch/catalog.hpp"
#include "pentaheesch/geom.hpp"

namespace pentaheesch {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NoSolution : public SolverError {
 public:
  using SolverError::SolverError;
};

// Convex pentagon with corners A..E counter-clockwise. angles[k] is the
// interior angle at corner k (radians); edges[k] is the length of edge k
// (a = EA, b = AB, c = BC, d = CD, e = DE).
struct Pentagon {
  int category = 0;
  Params params;
  std::array<double, 5> angles{};
  std::array<double, 5> edges{};

  std::array<double, 5> angles_deg() const;
  double edge_between(int corner_from, int corner_to) const;
  // Throws SolverError unless angles lie in (0, pi), sum to 3*pi, edges are
  // positive, and the boundary closes.
  void validate() const;
  ConvexPolygon polygon() const;
  std::array<Point, 5> vertices() const;
  double longest_edge() const;
};

// Corner positions: A at the origin, edge b along +x, counter-clockwise.
std::array<Point, 5> build_coordinates(const std::array<double, 5>& angles, const std::array<double, 5>& edges);
// Distance between the walked end point and A.
double closure_residual(const std::array<double, 5>& angles, const std::array<double, 5>& edges);

struct SolverTrace {
  std::string method;                                  // "generic" or the closed-form route used
  std::vector<std::pair<std::string, double>> aux;     // auxiliary angles in degrees
  std::vector<double> relation_residuals_deg;
  double closure_residual = 0.0;
  double ratio_from_x = 0.0;  // unknown edge ratio from the x closure equation alone
  double ratio_from_y = 0.0;  // ... and from the y equation alone
  int free_parameters = 0;
  int roots_found = 0;
  double cross_check_deg = 0.0;  // max angle difference between routes
};

struct Solution {
  Pentagon pentagon;
  SolverTrace trace;
};

struct SolveOptions {
  bool check_domain = true;
  bool use_closed_forms = true;
  // Shifts the start of the root scan by this fraction of a step, which
  // exercises bracket independence.
  double scan_offset = 0.0;
};

Solution solve(int category, const Params& params, const SolveOptions& options = {});

// Generic route on explicit data. Returns every admissible root: angles in
// (0, pi), positive edges, distinct class lengths.
std::vector<Solution> solve_relations(const std::vector<AngleRelation>& relations,
                                      const std::vector<std::vector<int>>& edge_classes,
                                      const SolveOptions& options = {});

struct FamilyParameter {
  std::string name;  // "lambda", "mu" or "alpha"
  double value_deg = 0.0;
};

// Auxiliary angle of the closed-form families: lambda (category 1),
// mu (category 3), alpha (category 4). Throws NoSolution outside the bracket.
FamilyParameter family_parameter(int category, const Params& params);
// Angles built from a family parameter (degrees in, radians out).
std::array<double, 5> family_angles(int category, const Params& params, double value_deg);

struct Type7Sample {
  double alpha_deg = 0.0;
  double beta_deg = 0.0;
  double n = 0.0;  // (2 alpha + 2 beta) / E
};

struct Type7Report {
  std::vector<Type7Sample> samples;
  std::vector<int> integer_solutions;  // integers n in [1, 6] met by some sample
  bool only_two = false;
};

// Sweeps pentagons with A = 180 - 2*alpha, B = 90 + beta, C = 180 - 2*beta,
// D = 90 + alpha, E = alpha + beta and edges a = b = c = d, recording
// n = (360 - A - C) / E for each sample.
Type7Report type7_uniqueness_check();

}  // namespace pentaheesch
