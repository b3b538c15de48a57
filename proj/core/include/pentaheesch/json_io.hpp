#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pentaheesch/catalog.hpp"
#include "pentaheesch/corona.hpp"
#include "pentaheesch/solver.hpp"
#include "pentaheesch/spots.hpp"

namespace pentaheesch {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json params_json(const Params& p);
Params params_from_json(const Json& j);

// {category, params, angles_deg, edges, vertices, trace}
Json pentagon_json(const Solution& s);
Json pentagon_json(const Pentagon& p);
Json trace_json(const SolverTrace& t);

Json spot_json(const Spot& s);
Json remarks_json(const RemarksReport& r);
// Header "multiset,sum,class,witness-cycle", one line per spot.
std::string spots_csv(const std::vector<Spot>& spots);

Json placement_json(const Placement& pl);
// {kernel, layers, mode, tile}; `tile` carries the pentagon so the file is
// self-contained.
Json patch_json(const Pentagon& p, const Patch& patch);
// Throws FormatError on malformed input; the pentagon is re-solved from the
// tile's category and parameters.
std::pair<Pentagon, Patch> patch_from_json(const Json& j);

Json dead_spot_json(const DeadSpot& d);
Json heesch_json(const Pentagon& p, const HeeschReport& r);
std::string placement_model_name(PlacementModel m);  // "EEC_ONLY" | "EEC_PLUS_COLLINEAR"

// One object per category: relations, edge classes, domain and reference rows.
Json catalog_json();

// Stable text form: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace pentaheesch
