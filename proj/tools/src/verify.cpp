#include "pentaheesch/tools/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pentaheesch/corona.hpp"

namespace pentaheesch::tools {

namespace {

std::string row_name(int category, const Params& p) {
  const std::string params = format_params(p);
  return "category " + std::to_string(category) + (params.empty() ? "" : " " + params);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double max_diff_deg(const std::array<double, 5>& angles_rad, const std::array<double, 5>& table_deg) {
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) worst = std::max(worst, std::abs(rad_to_deg(angles_rad[k]) - table_deg[k]));
  return worst;
}

CheckResult check_tables() {
  CheckResult r{"tables", true, {}, Json::array()};
  for (const ReferenceRow& row : reference_rows()) {
    const Pentagon p = solve(row.category, row.params).pentagon;
    const double d = max_diff_deg(p.angles, row.angles_deg);
    r.details.push_back({{"category", row.category}, {"params", params_json(row.params)}, {"max_diff_deg", fixed(d, 6)}});
    if (d > 0.01) r.failures.push_back(row_name(row.category, row.params) + " differs by " + fixed(d, 4) + " deg");
  }
  return r;
}

CheckResult check_closed_forms() {
  CheckResult r{"closed-forms", true, {}, Json::object()};
  const Solution s3 = solve(3, Params{std::nullopt, 1});
  double sigma = std::nan("");
  for (const auto& [name, value] : s3.trace.aux) {
    if (name == "sigma") sigma = value;
  }
  const double sigma_ref = rad_to_deg(std::asin((std::sqrt(17.0) - 1.0) / 4.0));
  const double lambda = deg_to_rad(family_parameter(1, {}).value_deg);
  r.details = {{"sigma_deg", fixed(sigma, 10)}, {"lambda_rad", fixed(lambda, 9)}};
  if (!(std::abs(sigma - sigma_ref) <= 1e-9)) r.failures.push_back("sigma is " + fixed(sigma, 12));
  if (!(std::abs(lambda - 0.4125742) <= 1e-6)) r.failures.push_back("lambda is " + fixed(lambda, 9) + " rad");
  return r;
}

CheckResult check_families() {
  CheckResult r{"families", true, {}, Json::array()};
  for (const ReferenceRow& row : reference_rows()) {
    if (row.category != 3 && row.category != 4) continue;
    const FamilyParameter fp = family_parameter(row.category, row.params);
    const double d = max_diff_deg(family_angles(row.category, row.params, fp.value_deg), row.angles_deg);
    r.details.push_back({{"category", row.category},
                         {"params", params_json(row.params)},
                         {fp.name + "_deg", fixed(fp.value_deg, 9)},
                         {"max_diff_deg", fixed(d, 6)}});
    if (d > 0.01) r.failures.push_back(row_name(row.category, row.params) + " family angles off by " + fixed(d, 4));
  }
  double prev = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const double mu = family_parameter(3, Params{std::nullopt, n}).value_deg;
    if (!(mu > prev && mu < 90.0)) r.failures.push_back("mu(" + std::to_string(n) + ") = " + fixed(mu, 6) + " breaks monotone approach to 90");
    prev = mu;
  }
  return r;
}

CheckResult check_spots(double tol) {
  CheckResult r{"spots", true, {}, Json::array()};
  for (const ReferenceRow& row : reference_rows()) {
    const Pentagon p = solve(row.category, row.params).pentagon;
    const RemarksReport rep = verify_remarks(p);
    const std::size_t enumerated = enumerate_spots(p, 0, 360.0, tol).size();
    r.details.push_back({{"category", row.category},
                         {"params", params_json(row.params)},
                         {"spots", enumerated},
                         {"matched", rep.matched.size()},
                         {"contradicting", rep.contradicting.size()},
                         {"unlisted", rep.unlisted.size()}});
    for (const SpotCheck& c : rep.contradicting) {
      std::string msg = row_name(row.category, row.params) + ": " + format_counts(c.counts) + " (" + c.source + ")";
      if (c.stated) msg += " stated " + to_string(*c.stated);
      msg += c.computed ? " computed " + to_string(*c.computed) : std::string(" does not sum to 360");
      r.failures.push_back(msg);
    }
  }
  return r;
}

CheckResult check_heesch(std::uint64_t budget) {
  CheckResult r{"heesch", true, {}, Json::array()};
  SearchOptions opt;
  opt.layer_limit = 2;
  opt.budget = budget;
  for (const ReferenceRow& row : reference_rows()) {
    const Pentagon p = solve(row.category, row.params).pentagon;
    const int expected = row.heesch == HeeschClass::kOne ? 1 : 2;
    Json d = {{"category", row.category}, {"params", params_json(row.params)}, {"expected_layers", expected}};
    try {
      const HeeschReport h = heesch_bound(p, opt);
      d["layers_completed"] = h.layers_completed;
      d["status"] = to_string(h.status);
      d["nodes"] = h.nodes;
      if (h.layers_completed != expected) {
        r.failures.push_back(row_name(row.category, row.params) + " completed " + std::to_string(h.layers_completed) +
                             " layers, expected " + std::to_string(expected));
      }
    } catch (const BudgetExceeded& e) {
      d["status"] = "BUDGET_EXCEEDED";
      r.failures.push_back(row_name(row.category, row.params) + ": " + e.what());
    }
    r.details.push_back(d);
  }
  return r;
}

CheckResult check_category1() {
  CheckResult r{"category-1", true, {}, Json::object()};
  const Pentagon p = solve(1, {}).pentagon;
  SearchOptions eec;
  SearchOptions col;
  col.mode = PlacementModel::kEecPlusCollinear;
  Patch lone;
  lone.kernel = {Placement{Isometry{}}};
  const std::size_t d_patterns = vertex_patterns(p, lone, p.vertices()[kD], eec).size();
  const auto eec_coronas = enumerate_coronas(p, lone.kernel, eec);
  const auto col_coronas = enumerate_coronas(p, lone.kernel, col);
  std::size_t with_2e = 0;
  for (const auto* set : {&eec_coronas, &col_coronas}) {
    for (const Patch& c : *set) {
      const auto dead = dead_spots(p, c);
      if (std::any_of(dead.begin(), dead.end(), [](const DeadSpot& d) {
            return d.corners == CornerCounts{0, 0, 0, 0, 2} && d.straight_contacts == 0;
          })) {
        ++with_2e;
      }
    }
  }
  const std::size_t total = eec_coronas.size() + col_coronas.size();
  r.details = {{"vertex_d_patterns", d_patterns},
               {"eec_coronas", eec_coronas.size()},
               {"collinear_coronas", col_coronas.size()},
               {"coronas_with_2e_dead_spot", with_2e}};
  if (d_patterns != 2) r.failures.push_back(std::to_string(d_patterns) + " patterns close vertex D, expected 2");
  if (eec_coronas.size() != 4) r.failures.push_back(std::to_string(eec_coronas.size()) + " edge-to-edge coronas, expected 4");
  if (col_coronas.size() < 6) r.failures.push_back(std::to_string(col_coronas.size()) + " collinear coronas, expected at least 6");
  if (with_2e != total) r.failures.push_back(std::to_string(total - with_2e) + " coronas lack a dead 2E vertex");
  return r;
}

CheckResult check_type7() {
  CheckResult r{"type-7", true, {}, Json::object()};
  const Type7Report rep = type7_uniqueness_check();
  r.details = {{"samples", rep.samples.size()}, {"integer_solutions", rep.integer_solutions}};
  if (!rep.only_two) r.failures.push_back("integer solutions other than n = 2 found");
  return r;
}

CheckResult check_clusters(std::uint64_t budget) {
  CheckResult r{"clusters", true, {}, Json::array()};
  SearchOptions opt;
  opt.budget = budget;
  const std::vector<std::pair<int, Params>> rows = {
      {8, Params{std::nullopt, 1}}, {9, {}}, {10, {}}, {11, Params{std::nullopt, 2}}};
  for (const auto& [cat, params] : rows) {
    const Pentagon p = solve(cat, params).pentagon;
    Json d = {{"category", cat}, {"params", params_json(params)}};
    try {
      const auto found = find_once_surroundable_cluster(p, opt);
      d["found"] = found.has_value();
      if (found) {
        d["clusters_tried"] = found->clusters_tried;
        d["status"] = to_string(found->report.status);
      } else {
        r.failures.push_back(row_name(cat, params) + ": no three-tile cluster is surrounded exactly once");
      }
    } catch (const BudgetExceeded& e) {
      d["found"] = false;
      r.failures.push_back(row_name(cat, params) + ": " + e.what());
    }
    r.details.push_back(d);
  }
  return r;
}

}  // namespace

std::vector<CheckResult> verify_all(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  out.push_back(check_tables());
  out.push_back(check_closed_forms());
  out.push_back(check_families());
  out.push_back(check_spots(options.spot_tolerance_deg));
  out.push_back(check_heesch(options.budget));
  out.push_back(check_category1());
  out.push_back(check_type7());
  out.push_back(check_clusters(options.budget));
  for (CheckResult& c : out) c.pass = c.failures.empty();
  return out;
}

Json verify_json(const std::vector<CheckResult>& checks) {
  Json arr = Json::array();
  bool all = true;
  for (const CheckResult& c : checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"failures", c.failures}, {"details", c.details}});
    all = all && c.pass;
  }
  return {{"checks", arr}, {"all_pass", all}};
}

}  // namespace pentaheesch::tools
