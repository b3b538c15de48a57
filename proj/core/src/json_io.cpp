#include "pentaheesch/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pentaheesch {

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json counts_array(const CornerCounts& c) { return Json(std::vector<int>(c.begin(), c.end())); }

std::string param_kind_name(ParamKind k) {
  switch (k) {
    case ParamKind::kNone: return "none";
    case ParamKind::kN: return "n";
    case ParamKind::kMN: return "m,n";
  }
  return "?";
}

Json witness_json(const std::vector<WedgeUse>& cycle) {
  Json out = Json::array();
  for (const WedgeUse& w : cycle) {
    out.push_back({{"corner", std::string(1, corner_letter(w.corner))}, {"reflected", w.reflected}});
  }
  return out;
}

Placement placement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("theta_rad")) {
    throw FormatError("placement needs x, y and theta_rad");
  }
  const bool refl = j.value("reflected", false);
  return Placement{Isometry::make(j.at("theta_rad").get<double>(), Point{j.at("x").get<double>(), j.at("y").get<double>()},
                                  refl)};
}

}  // namespace

Json params_json(const Params& p) {
  Json j = Json::object();
  if (p.m) j["m"] = *p.m;
  if (p.n) j["n"] = *p.n;
  return j;
}

Params params_from_json(const Json& j) {
  Params p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw FormatError("params must be an object");
  if (j.contains("m")) p.m = j.at("m").get<int>();
  if (j.contains("n")) p.n = j.at("n").get<int>();
  return p;
}

Json trace_json(const SolverTrace& t) {
  Json aux = Json::object();
  for (const auto& [name, value] : t.aux) aux[name] = value;
  return {
      {"method", t.method},
      {"aux", aux},
      {"residuals",
       {{"relations_deg", t.relation_residuals_deg}, {"closure", t.closure_residual}}},
      {"ratio_from_x", number_or_null(t.ratio_from_x)},
      {"ratio_from_y", number_or_null(t.ratio_from_y)},
      {"free_parameters", t.free_parameters},
      {"roots_found", t.roots_found},
      {"cross_check_deg", t.cross_check_deg},
  };
}

Json pentagon_json(const Pentagon& p) {
  Json verts = Json::array();
  for (const Point& v : p.vertices()) verts.push_back({v.x, v.y});
  const auto deg = p.angles_deg();
  return {
      {"category", p.category},
      {"params", params_json(p.params)},
      {"angles_deg", std::vector<double>(deg.begin(), deg.end())},
      {"edges", std::vector<double>(p.edges.begin(), p.edges.end())},
      {"vertices", verts},
  };
}

Json pentagon_json(const Solution& s) {
  Json j = pentagon_json(s.pentagon);
  j["trace"] = trace_json(s.trace);
  return j;
}

Json spot_json(const Spot& s) {
  Json mult = Json::object();
  for (int k = 0; k < 5; ++k) {
    if (s.counts[k]) mult[std::string(1, corner_letter(k))] = s.counts[k];
  }
  Json j = {{"multiset", format_counts(s.counts)}, {"multiplicity", mult}, {"angle_sum", s.angle_sum_deg}};
  j["classification"] = s.classification ? Json(to_string(*s.classification)) : Json(nullptr);
  j["witness"] = s.witness.empty() ? Json(nullptr) : witness_json(s.witness);
  return j;
}

Json remarks_json(const RemarksReport& r) {
  auto check = [](const SpotCheck& c) {
    Json j = {{"multiset", format_counts(c.counts)}, {"source", c.source}, {"sums_to_360", c.sums_to_360},
              {"agrees", c.agrees}};
    if (!c.word.empty()) j["word"] = c.word;
    j["stated"] = c.stated ? Json(to_string(*c.stated)) : Json(nullptr);
    j["computed"] = c.computed ? Json(to_string(*c.computed)) : Json(nullptr);
    return j;
  };
  Json matched = Json::array(), contra = Json::array(), unlisted = Json::array();
  for (const SpotCheck& c : r.matched) matched.push_back(check(c));
  for (const SpotCheck& c : r.contradicting) contra.push_back(check(c));
  for (const Spot& s : r.unlisted) unlisted.push_back(spot_json(s));
  return {{"category", r.category}, {"params", params_json(r.params)}, {"matched", matched},
          {"contradicting", contra}, {"unlisted", unlisted}, {"ok", r.ok()}};
}

std::string spots_csv(const std::vector<Spot>& spots) {
  std::ostringstream out;
  out << "multiset,sum,class,witness-cycle\n";
  char buf[32];
  for (const Spot& s : spots) {
    std::snprintf(buf, sizeof buf, "%.9f", s.angle_sum_deg);
    out << format_counts(s.counts) << ',' << buf << ',' << (s.classification ? to_string(*s.classification) : "")
        << ',' << format_witness(s.witness) << '\n';
  }
  return out.str();
}

Json placement_json(const Placement& pl) {
  return {{"x", pl.pose.translation.x}, {"y", pl.pose.translation.y}, {"theta_rad", pl.pose.rotation},
          {"reflected", pl.pose.reflected}};
}

std::string placement_model_name(PlacementModel m) {
  return m == PlacementModel::kEecOnly ? "EEC_ONLY" : "EEC_PLUS_COLLINEAR";
}

Json patch_json(const Pentagon& p, const Patch& patch) {
  Json kernel = Json::array();
  for (const Placement& pl : patch.kernel) kernel.push_back(placement_json(pl));
  Json layers = Json::array();
  for (const auto& layer : patch.layers) {
    Json l = Json::array();
    for (const Placement& pl : layer) l.push_back(placement_json(pl));
    layers.push_back(l);
  }
  Json tile = pentagon_json(p);
  return {{"kernel", kernel}, {"layers", layers}, {"mode", to_string(patch.mode)}, {"tile", tile}};
}

std::pair<Pentagon, Patch> patch_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("patch must be a JSON object");
  if (!j.contains("tile") || !j.at("tile").is_object() || !j.at("tile").contains("category")) {
    throw FormatError("patch needs a tile with a category");
  }
  if (!j.contains("kernel") || !j.at("kernel").is_array()) throw FormatError("patch needs a kernel array");
  Pentagon pent;
  Patch patch;
  try {
    const Json& tile = j.at("tile");
    pent = solve(tile.at("category").get<int>(), params_from_json(tile.value("params", Json::object()))).pentagon;
    for (const Json& pl : j.at("kernel")) patch.kernel.push_back(placement_from_json(pl));
    if (j.contains("layers")) {
      if (!j.at("layers").is_array()) throw FormatError("layers must be an array");
      for (const Json& layer : j.at("layers")) {
        if (!layer.is_array()) throw FormatError("each layer must be an array");
        patch.layers.emplace_back();
        for (const Json& pl : layer) patch.layers.back().push_back(placement_from_json(pl));
      }
    }
    patch.mode = parse_placement_model(j.value("mode", std::string("eec")));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed patch: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed patch: ") + e.what());
  } catch (const CatalogError& e) {
    throw FormatError(std::string("malformed patch tile: ") + e.what());
  } catch (const SolverError& e) {
    throw FormatError(std::string("malformed patch tile: ") + e.what());
  }
  if (patch.kernel.empty()) throw FormatError("patch has an empty kernel");
  return {pent, patch};
}

Json dead_spot_json(const DeadSpot& d) {
  return {
      {"position", {d.position.x, d.position.y}},
      {"gap_deg", d.gap_deg},
      {"corners", format_counts(d.corners)},
      {"corner_counts", counts_array(d.corners)},
      {"straight_contacts", d.straight_contacts},
      {"nearest_below_deg", d.nearest_below_deg},
      {"nearest_above_deg", d.nearest_above_deg},
  };
}

Json heesch_json(const Pentagon& p, const HeeschReport& r) {
  Json j = {
      {"layers_completed", r.layers_completed},
      {"status", to_string(r.status)},
      {"placement_model", placement_model_name(r.model)},
      {"caveat", r.caveat},
      {"nodes", r.nodes},
      {"patches_per_depth", r.patches_per_depth},
      {"refuted_by_dead_spot", r.refuted_by_dead_spot},
      {"refuted_by_search", r.refuted_by_search},
  };
  j["certificate"] = r.certificate ? dead_spot_json(*r.certificate) : Json(nullptr);
  j["witness"] = r.witness ? patch_json(p, *r.witness) : Json(nullptr);
  return j;
}

Json catalog_json() {
  Json cats = Json::array();
  for (int id : category_ids()) {
    const CategoryInfo& info = category_info(id);
    Json rows = Json::array();
    for (const ReferenceRow& r : reference_rows()) {
      if (r.category != id) continue;
      Json arr = Json::object();
      for (int k = 0; k < 5; ++k) {
        if (!r.arrangements[k].empty()) arr[std::string(1, corner_letter(k))] = r.arrangements[k];
      }
      rows.push_back({{"params", params_json(r.params)},
                      {"heesch", r.heesch == HeeschClass::kOne ? "1" : "infinity"},
                      {"angles_deg", std::vector<double>(r.angles_deg.begin(), r.angles_deg.end())},
                      {"arrangements", arr},
                      {"note", r.note}});
    }
    Json classes = Json::array();
    for (const auto& cls : info.edge_classes) {
      std::string s;
      for (int e : cls) s += edge_letter(e);
      classes.push_back(s);
    }
    cats.push_back({{"category", id},
                    {"parameters", param_kind_name(info.kind)},
                    {"angle_relations", info.angle_relations},
                    {"edge_relation", info.edge_relation},
                    {"edge_classes", classes},
                    {"domain", info.domain},
                    {"nonexistence", info.nonexistence},
                    {"reference_rows", rows}});
  }
  return {{"categories", cats}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pentaheesch
