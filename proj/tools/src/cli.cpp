#include "pentaheesch/tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pentaheesch/json_io.hpp"
#include "pentaheesch/svg.hpp"
#include "pentaheesch/tools/verify.hpp"

namespace pentaheesch::tools {

namespace {

struct Args {
  int category = 0;
  std::optional<int> m, n;
  std::string mode = "eec";
  int layers = 0;  // 0: the subcommand's default
  std::uint64_t budget = 10'000'000;
  bool no_reflections = false;
  std::string out;
  double tolerance = kSpotTolDeg;
  std::size_t index = 0;
  std::string input;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Params params_of(const Args& a) { return Params{a.m, a.n}; }

SearchOptions search_options(const Args& a, int default_layers) {
  SearchOptions o;
  try {
    o.mode = parse_placement_model(a.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int layers = a.layers == 0 ? default_layers : a.layers;
  if (layers < 1) throw UsageError("--layers must be at least 1");
  o.layer_limit = layers;
  o.budget = a.budget;
  o.allow_reflections = !a.no_reflections;
  return o;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

int cmd_solve(const Args& a, std::ostream& out) {
  const Solution s = solve(a.category, params_of(a));
  const auto deg = s.pentagon.angles_deg();
  out << "A B C D E:";
  for (double d : deg) out << ' ' << fixed2(d);
  out << '\n';
  out << "a b c d e:";
  for (double e : s.pentagon.edges) out << ' ' << fixed2(e);
  out << '\n';
  if (!a.out.empty()) write_file(a.out, dump(pentagon_json(s)));
  return kExitOk;
}

int cmd_spots(const Args& a, std::ostream& out, std::ostream& err) {
  const Pentagon p = solve(a.category, params_of(a)).pentagon;
  if (!(a.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  const auto spots = classify_all(p, enumerate_spots(p, 0, 360.0, a.tolerance));
  const std::string csv = spots_csv(spots);
  if (a.out.empty()) out << csv;
  else write_file(a.out, csv);
  const RemarksReport rep = verify_remarks(p);
  err << "remarks: " << rep.matched.size() << " matched, " << rep.contradicting.size() << " contradicting, "
      << rep.unlisted.size() << " unlisted\n";
  for (const SpotCheck& c : rep.contradicting) {
    err << "  contradiction: " << format_counts(c.counts) << " (" << c.source << ")";
    if (c.stated) err << " stated " << to_string(*c.stated);
    if (c.computed) err << " computed " << to_string(*c.computed);
    else err << " does not sum to 360";
    err << '\n';
  }
  return rep.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_corona(const Args& a, std::ostream& out) {
  const Pentagon p = solve(a.category, params_of(a)).pentagon;
  const SearchOptions opt = search_options(a, 1);
  const auto coronas = enumerate_coronas(p, {Placement{Isometry{}}}, opt);
  out << coronas.size() << " first coronas (" << to_string(opt.mode) << ")\n";
  for (std::size_t i = 0; i < coronas.size(); ++i) {
    const auto dead = dead_spots(p, coronas[i]);
    out << "  #" << i << ": " << coronas[i].layers.front().size() << " copies, " << dead.size() << " dead spots\n";
  }
  if (!a.out.empty()) {
    if (a.index >= coronas.size()) throw UsageError("--index out of range");
    write_file(a.out, dump(patch_json(p, coronas[a.index])));
  }
  return coronas.empty() ? kExitVerificationFailed : kExitOk;
}

void print_report(const HeeschReport& r, std::ostream& out) {
  out << "layers completed: " << r.layers_completed << " (" << to_string(r.status) << ", "
      << to_string(r.model) << ")\n";
  out << "nodes: " << r.nodes << '\n';
  if (r.certificate) {
    out << "dead spot: " << format_counts(r.certificate->corners);
    if (r.certificate->straight_contacts) out << " + " << r.certificate->straight_contacts << " straight";
    out << ", gap " << fixed2(r.certificate->gap_deg) << " deg (nearest sums " << fixed2(r.certificate->nearest_below_deg)
        << " / " << fixed2(r.certificate->nearest_above_deg) << ")\n";
  }
  out << "caveat: " << r.caveat << '\n';
}

int cmd_heesch(const Args& a, std::ostream& out) {
  const Pentagon p = solve(a.category, params_of(a)).pentagon;
  const HeeschReport r = heesch_bound(p, search_options(a, 3));
  print_report(r, out);
  if (!a.out.empty()) write_file(a.out, dump(heesch_json(p, r)));
  return kExitOk;
}

int cmd_cluster(const Args& a, std::ostream& out) {
  const Pentagon p = solve(a.category, params_of(a)).pentagon;
  const auto found = find_once_surroundable_cluster(p, search_options(a, 2));
  if (!found) {
    out << "no three-tile cluster is surrounded exactly once\n";
    return kExitVerificationFailed;
  }
  out << "after " << found->clusters_tried << " candidate clusters: one is surrounded once, not twice\n";
  print_report(found->report, out);
  if (!a.out.empty()) {
    Json j = heesch_json(p, found->report);
    Patch cl;
    cl.kernel = found->cluster;
    cl.mode = found->report.model;
    j["cluster"] = patch_json(p, cl);
    write_file(a.out, dump(j));
  }
  return kExitOk;
}

int cmd_render(const Args& a, std::ostream& out) {
  std::ifstream f(a.input, std::ios::binary);
  if (!f) throw UsageError("cannot read " + a.input);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  // Heesch and cluster reports embed their patch under "witness".
  if (j.is_object() && !j.contains("kernel") && j.contains("witness") && j.at("witness").is_object()) {
    j = j.at("witness");
  }
  const auto [pent, patch] = patch_from_json(j);
  const std::string svg = render_svg(pent, patch);
  if (a.out.empty()) out << svg;
  else write_file(a.out, svg);
  return kExitOk;
}

int cmd_verify_all(const Args& a, std::ostream& out) {
  VerifyOptions vo;
  vo.budget = a.budget;
  vo.spot_tolerance_deg = a.tolerance;
  const auto checks = verify_all(vo);
  bool all = true;
  for (const CheckResult& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
    for (const std::string& f : c.failures) out << "  " << f << '\n';
    all = all && c.pass;
  }
  if (!a.out.empty()) write_file(a.out, dump(verify_json(checks)));
  return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex pentagon catalog, spot analysis and Heesch search", "pentaheesch"};
  app.require_subcommand(1);
  Args a;

  auto add_category = [&](CLI::App* sub) {
    sub->add_option("category", a.category, "category number 1..17")->required();
    sub->add_option("--n", a.n, "family parameter n");
    sub->add_option("--m", a.m, "family parameter m");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--mode", a.mode, "placement model: eec or eec+collinear")->check(CLI::IsMember({"eec", "eec+collinear"}));
    sub->add_option("--layers", a.layers, "layer limit (heesch 3, cluster 2)");
    sub->add_option("--budget", a.budget, "maximum number of placements");
    sub->add_flag("--no-reflections", a.no_reflections, "forbid mirror-image copies");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve a category for its angles and edges");
  add_category(solve_cmd);
  solve_cmd->add_option("--out", a.out, "write pentagon JSON here");

  CLI::App* spots_cmd = app.add_subcommand("spots", "classify every 360-degree vertex spot");
  add_category(spots_cmd);
  spots_cmd->add_option("--out", a.out, "write CSV here instead of stdout");
  spots_cmd->add_option("--tolerance", a.tolerance, "angle-sum tolerance in degrees");

  CLI::App* corona_cmd = app.add_subcommand("corona", "enumerate first coronas of a single tile");
  add_category(corona_cmd);
  add_search(corona_cmd);
  corona_cmd->add_option("--out", a.out, "write one corona as patch JSON");
  corona_cmd->add_option("--index", a.index, "which corona --out writes");

  CLI::App* heesch_cmd = app.add_subcommand("heesch", "bound the Heesch number by layered search");
  add_category(heesch_cmd);
  add_search(heesch_cmd);
  heesch_cmd->add_option("--out", a.out, "write the report JSON here");

  CLI::App* cluster_cmd = app.add_subcommand("cluster", "find a three-tile cluster surrounded exactly once");
  add_category(cluster_cmd);
  add_search(cluster_cmd);
  cluster_cmd->add_option("--out", a.out, "write the report JSON here");

  CLI::App* render_cmd = app.add_subcommand("render", "render a patch JSON file to SVG");
  render_cmd->add_option("patch", a.input, "patch JSON (or a heesch/cluster report)")->required();
  render_cmd->add_option("--out", a.out, "SVG output path (stdout if omitted)");

  CLI::App* verify_cmd = app.add_subcommand("verify-all", "run the full regression over the catalog");
  verify_cmd->add_option("--out", a.out, "write the pass/fail matrix JSON here");
  verify_cmd->add_option("--budget", a.budget, "search budget per Heesch run");
  verify_cmd->add_option("--tolerance", a.tolerance, "spot angle-sum tolerance in degrees");

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(a, out);
    if (spots_cmd->parsed()) return cmd_spots(a, out, err);
    if (corona_cmd->parsed()) return cmd_corona(a, out);
    if (heesch_cmd->parsed()) return cmd_heesch(a, out);
    if (cluster_cmd->parsed()) return cmd_cluster(a, out);
    if (render_cmd->parsed()) return cmd_render(a, out);
    if (verify_cmd->parsed()) return cmd_verify_all(a, out);
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kExitBudget;
  } catch (const CatalogError& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  } catch (const NoSolution& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  } catch (const FormatError& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  } catch (const GeometryError& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace pentaheesch::tools
