#include "pentaheesch/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>

namespace pentaheesch {

std::array<double, 5> Pentagon::angles_deg() const {
  std::array<double, 5> d{};
  for (int k = 0; k < 5; ++k) d[k] = rad_to_deg(angles[k]);
  return d;
}

double Pentagon::edge_between(int from, int to) const {
  if ((from + 1) % 5 == to) return edges[edge_after(from)];
  if ((to + 1) % 5 == from) return edges[edge_after(to)];
  throw SolverError("corners are not adjacent");
}

void Pentagon::validate() const {
  double sum = 0.0;
  for (double a : angles) {
    if (!(a > 0.0 && a < kPi)) throw SolverError("interior angle outside (0, 180) degrees");
    sum += a;
  }
  if (std::abs(sum - 3.0 * kPi) > 1e-9) throw SolverError("interior angles do not sum to 540 degrees");
  for (double e : edges) {
    if (!(e > 0.0)) throw SolverError("edge length must be positive");
  }
  if (closure_residual(angles, edges) > 1e-9 * longest_edge()) throw SolverError("pentagon does not close");
}

double Pentagon::longest_edge() const { return *std::max_element(edges.begin(), edges.end()); }

std::array<Point, 5> Pentagon::vertices() const { return build_coordinates(angles, edges); }

ConvexPolygon Pentagon::polygon() const {
  const auto v = vertices();
  return ConvexPolygon::from_vertices(std::vector<Point>(v.begin(), v.end()));
}

namespace {

// h[k] is the heading of edge k on the walk A -> B -> C -> D -> E -> A,
// starting along +x and turning left by (pi - angle) at each corner.
std::array<double, 5> edge_headings(const std::array<double, 5>& angles) {
  std::array<double, 5> h{};
  double cur = 0.0;
  for (int corner = 1; corner <= 5; ++corner) {
    h[corner % 5] = cur;
    cur += kPi - angles[corner % 5];
  }
  return h;
}

}  // namespace

std::array<Point, 5> build_coordinates(const std::array<double, 5>& angles, const std::array<double, 5>& edges) {
  const auto h = edge_headings(angles);
  std::array<Point, 5> v{};
  v[0] = {0.0, 0.0};
  for (int corner = 1; corner < 5; ++corner) {
    v[corner] = v[corner - 1] + edges[corner] * unit(h[corner]);
  }
  return v;
}

double closure_residual(const std::array<double, 5>& angles, const std::array<double, 5>& edges) {
  const auto h = edge_headings(angles);
  Point p{0.0, 0.0};
  for (int k = 0; k < 5; ++k) p = p + edges[k] * unit(h[k]);
  return norm(p);
}

namespace {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend Rational operator-(Rational a, Rational b) { return Rational(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
  friend Rational operator/(Rational a, Rational b) { return Rational(a.num * b.den, a.den * b.num); }
};

// Angles (degrees) as base + t * dir after eliminating the linear relations.
struct AffineAngles {
  std::array<double, 5> base{};
  std::array<double, 5> dir{};
  int free_parameters = 0;
};

AffineAngles eliminate(const std::vector<AngleRelation>& relations) {
  std::vector<std::array<Rational, 6>> rows;
  for (const AngleRelation& r : relations) {
    std::array<Rational, 6> row;
    for (int k = 0; k < 5; ++k) row[k] = Rational(r.coeffs[k]);
    row[5] = Rational(static_cast<std::int64_t>(std::llround(r.rhs_deg)));
    rows.push_back(row);
  }
  rows.push_back({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(540)});

  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < 5 && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c].zero()) continue;
      const Rational f = rows[q][c];
      for (int k = 0; k < 6; ++k) rows[q][k] = rows[q][k] - f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < rows.size(); ++q) {
    if (!rows[q][5].zero()) throw NoSolution("angle relations are inconsistent");
  }
  std::vector<int> free_cols;
  for (int c = 0; c < 5; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_cols.push_back(c);
  }
  if (free_cols.size() > 1) throw SolverError("angle relations leave more than one free parameter");

  AffineAngles out;
  out.free_parameters = static_cast<int>(free_cols.size());
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    out.base[pivot_col[i]] = rows[i][5].value();
    if (!free_cols.empty()) out.dir[pivot_col[i]] = -rows[i][free_cols[0]].value();
  }
  if (!free_cols.empty()) out.dir[free_cols[0]] = 1.0;
  return out;
}

// Largest class first; ties broken by the alphabetically first edge.
std::vector<std::vector<int>> order_classes(std::vector<std::vector<int>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::stable_sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x.front() < y.front();
  });
  return classes;
}

std::vector<Point> class_sums(const std::array<double, 5>& angles, const std::vector<std::vector<int>>& classes) {
  const auto h = edge_headings(angles);
  std::vector<Point> sums;
  for (const auto& c : classes) {
    Point s{0.0, 0.0};
    for (int e : c) s = s + unit(h[e]);
    sums.push_back(s);
  }
  return sums;
}

std::array<double, 5> to_radians(const std::array<double, 5>& deg) {
  std::array<double, 5> r{};
  for (int k = 0; k < 5; ++k) r[k] = deg_to_rad(deg[k]);
  return r;
}

std::array<double, 5> at(const AffineAngles& aff, double t) {
  std::array<double, 5> a{};
  for (int k = 0; k < 5; ++k) a[k] = aff.base[k] + t * aff.dir[k];
  return a;
}

// Closure residual used for root finding (two classes only).
double two_class_residual(const std::array<double, 5>& deg, const std::vector<std::vector<int>>& classes) {
  const auto v = class_sums(to_radians(deg), classes);
  return cross(v[0], v[1]);
}

struct EdgeFit {
  bool ok = false;
  std::array<double, 5> edges{};
  double ratio_x = std::numeric_limits<double>::quiet_NaN();
  double ratio_y = std::numeric_limits<double>::quiet_NaN();
};

EdgeFit fit_edges(const std::array<double, 5>& angles_rad, const std::vector<std::vector<int>>& classes) {
  EdgeFit fit;
  const auto v = class_sums(angles_rad, classes);
  std::vector<double> len(classes.size(), 1.0);
  if (classes.size() == 2) {
    const double n2 = dot(v[1], v[1]);
    if (n2 < 1e-18) return fit;
    len[1] = -dot(v[0], v[1]) / n2;
    if (std::abs(v[1].x) > 1e-6) fit.ratio_x = -v[0].x / v[1].x;
    if (std::abs(v[1].y) > 1e-6) fit.ratio_y = -v[0].y / v[1].y;
  } else if (classes.size() == 3) {
    const double det = cross(v[1], v[2]);
    if (std::abs(det) < 1e-12) return fit;
    len[1] = cross(-1.0 * v[0], v[2]) / det;
    len[2] = cross(v[1], -1.0 * v[0]) / det;
  } else if (classes.size() != 1) {
    return fit;
  }
  for (std::size_t i = 0; i < len.size(); ++i) {
    if (!(len[i] > 1e-9)) return fit;
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(len[i] - len[j]) <= 1e-6) return fit;
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (int e : classes[i]) fit.edges[e] = len[i];
  }
  fit.ok = true;
  return fit;
}

bool angles_admissible(const std::array<double, 5>& deg) {
  for (double a : deg) {
    if (!(a > 1e-9 && a < 180.0 - 1e-9)) return false;
  }
  return true;
}

template <class F>
double bisect(F&& f, double lo, double hi, double flo) {
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Newton polish with a central-difference derivative; keeps the best iterate.
template <class F>
double polish(F&& f, double t) {
  double best = t, best_f = std::abs(f(t));
  for (int it = 0; it < 8 && best_f > 1e-15; ++it) {
    const double h = 1e-7 * std::max(1.0, std::abs(best));
    const double d = (f(best + h) - f(best - h)) / (2.0 * h);
    if (d == 0.0) break;
    const double next = best - f(best) / d;
    const double fn = std::abs(f(next));
    if (!(fn < best_f)) break;
    best = next;
    best_f = fn;
  }
  return best;
}

// Sign-change roots of f on (lo, hi), scanned with the given step.
template <class F>
std::vector<double> scan_roots(F&& f, double lo, double hi, double step, double offset) {
  std::vector<double> roots;
  const double pad = 1e-9 * std::max(1.0, hi - lo);
  double a = lo + pad;
  const double end = hi - pad;
  if (!(end > a)) return roots;
  std::vector<double> grid{a};
  for (double t = lo + (1.0 + offset) * step; t < end; t += step) grid.push_back(t);
  grid.push_back(end);
  double fa = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double b = grid[i];
    const double fb = f(b);
    if (fa == 0.0) {
      roots.push_back(grid[i - 1]);
    } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
      roots.push_back(polish(f, bisect(f, grid[i - 1], b, fa)));
    }
    fa = fb;
  }
  if (fa == 0.0) roots.push_back(grid.back());
  return roots;
}

Solution make_solution(const std::array<double, 5>& deg, const EdgeFit& fit,
                       const std::vector<AngleRelation>& relations) {
  Solution s;
  s.pentagon.angles = to_radians(deg);
  s.pentagon.edges = fit.edges;
  s.trace.ratio_from_x = fit.ratio_x;
  s.trace.ratio_from_y = fit.ratio_y;
  for (const AngleRelation& r : relations) {
    double sum = 0.0;
    for (int k = 0; k < 5; ++k) sum += r.coeffs[k] * deg[k];
    s.trace.relation_residuals_deg.push_back(sum - r.rhs_deg);
  }
  s.trace.closure_residual = closure_residual(s.pentagon.angles, s.pentagon.edges);
  return s;
}

}  // namespace

std::vector<Solution> solve_relations(const std::vector<AngleRelation>& relations,
                                      const std::vector<std::vector<int>>& edge_classes,
                                      const SolveOptions& options) {
  const AffineAngles aff = eliminate(relations);
  const auto classes = order_classes(edge_classes);
  std::vector<Solution> out;

  auto accept = [&](const std::array<double, 5>& deg) {
    if (!angles_admissible(deg)) return;
    const EdgeFit fit = fit_edges(to_radians(deg), classes);
    if (!fit.ok) return;
    Solution s = make_solution(deg, fit, relations);
    if (s.trace.closure_residual > 1e-9 * *std::max_element(fit.edges.begin(), fit.edges.end())) return;
    s.trace.method = "generic";
    s.trace.free_parameters = aff.free_parameters;
    out.push_back(std::move(s));
  };

  if (aff.free_parameters == 0) {
    if (classes.size() == 2 && std::abs(two_class_residual(aff.base, classes)) > 1e-9) return out;
    accept(aff.base);
  } else {
    if (classes.size() != 2) throw SolverError("one free angle needs exactly two edge classes");
    // Open interval of t keeping every angle inside (0, 180).
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    double max_dir = 0.0;
    for (int k = 0; k < 5; ++k) {
      const double b = aff.base[k], d = aff.dir[k];
      max_dir = std::max(max_dir, std::abs(d));
      if (d == 0.0) {
        if (!(b > 0.0 && b < 180.0)) return out;
        continue;
      }
      const double t0 = (0.0 - b) / d, t1 = (180.0 - b) / d;
      lo = std::max(lo, std::min(t0, t1));
      hi = std::min(hi, std::max(t0, t1));
    }
    if (!(hi > lo)) return out;
    const double step = rad_to_deg(1e-3) / max_dir;
    auto f = [&](double t) { return two_class_residual(at(aff, t), classes); };
    for (double t : scan_roots(f, lo, hi, step, options.scan_offset)) accept(at(aff, t));
  }
  for (Solution& s : out) s.trace.roots_found = static_cast<int>(out.size());
  return out;
}

namespace {

double sigma_deg() { return rad_to_deg(std::asin((-1.0 + std::sqrt(17.0)) / 4.0)); }

double epsilon_deg(double lambda_deg) {
  const double l = deg_to_rad(lambda_deg);
  const double s2 = std::sin(2.0 * l), c2 = std::cos(2.0 * l);
  return rad_to_deg(std::atan2(s2 * s2, std::cos(l) - s2 * c2));
}

double beta_deg(double alpha_deg) {
  const double a = deg_to_rad(alpha_deg);
  return rad_to_deg(std::acos(std::clamp(std::cos(a) / std::sin(a), -1.0, 1.0)));
}

// Unique sign-change root of f on (lo, hi); throws NoSolution otherwise.
template <class F>
double bracketed_root(F&& f, double lo, double hi, const std::string& what) {
  const auto roots = scan_roots(f, lo, hi, (hi - lo) / 4000.0, 0.0);
  if (roots.empty()) throw NoSolution("no " + what + " in (" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
  if (roots.size() > 1) throw SolverError("several roots for " + what);
  return roots.front();
}

}  // namespace

std::array<double, 5> family_angles(int category, const Params& params, double v) {
  switch (category) {
    case 1: {
      const double e = epsilon_deg(v);
      return to_radians({90.0 + v, 180.0 - 2.0 * v, v + e, 270.0 - 4.0 * v - e, 4.0 * v});
    }
    case 3: {
      const double s = sigma_deg();
      return to_radians({90.0 + s, 180.0 - 2.0 * s, 90.0 + v, 180.0 - 2.0 * v, v + s});
    }
    case 4: {
      const double b = beta_deg(v);
      return to_radians({90.0 + b, 180.0 - 2.0 * b, v + b, 90.0 + v, 180.0 - 2.0 * v});
    }
    default:
      break;
  }
  (void)params;
  throw SolverError("category " + std::to_string(category) + " has no closed-form family");
}

FamilyParameter family_parameter(int category, const Params& params) {
  check_params(category, params);
  switch (category) {
    case 1: {
      // 2D + A = 360 with A = 90 + lambda, D = 270 - 4 lambda - epsilon.
      auto g = [](double l) { return 270.0 - 7.0 * l - 2.0 * epsilon_deg(l); };
      return {"lambda", bracketed_root(g, 15.64, 45.0, "lambda")};
    }
    case 3: {
      const int n = *params.n;
      const double mu = (180.0 * (n + 1) - 270.0 + sigma_deg()) / (2.0 * n);
      if (!(mu > 0.0 && mu < 90.0)) throw NoSolution("mu outside (0, 90) degrees");
      return {"mu", mu};
    }
    case 4: {
      const int m = *params.m, n = *params.n;
      auto g = [m, n](double a) {
        const double b = beta_deg(a);
        return m * (180.0 - 2.0 * b) + n * (180.0 - 2.0 * a) + 90.0 + b - 360.0;
      };
      return {"alpha", bracketed_root(g, 45.0, 90.0, "alpha")};
    }
    default:
      break;
  }
  throw SolverError("category " + std::to_string(category) + " has no closed-form family");
}

Solution solve(int category, const Params& params, const SolveOptions& options) {
  const std::vector<AngleRelation> relations = angle_relations(category, params, options.check_domain);
  const CategoryInfo& info = category_info(category);
  std::vector<Solution> roots = solve_relations(relations, info.edge_classes, options);
  if (roots.empty()) {
    throw NoSolution("category " + std::to_string(category) + " " + format_params(params) +
                     ": no convex pentagon satisfies the relations");
  }
  if (roots.size() > 1) {
    throw SolverError("category " + std::to_string(category) + " " + format_params(params) + ": " +
                      std::to_string(roots.size()) + " admissible roots");
  }
  Solution sol = std::move(roots.front());
  sol.pentagon.category = category;
  sol.pentagon.params = params;

  if (options.use_closed_forms && (category == 1 || category == 3 || category == 4) && in_domain(category, params)) {
    const FamilyParameter fp = family_parameter(category, params);
    const auto closed = family_angles(category, params, fp.value_deg);
    double delta = 0.0;
    for (int k = 0; k < 5; ++k) delta = std::max(delta, std::abs(closed[k] - sol.pentagon.angles[k]));
    if (delta > 1e-9) {
      throw SolverError("closed form and generic route disagree by " + std::to_string(rad_to_deg(delta)) + " degrees");
    }
    std::array<double, 5> deg{};
    for (int k = 0; k < 5; ++k) deg[k] = rad_to_deg(closed[k]);
    const EdgeFit fit = fit_edges(closed, order_classes(info.edge_classes));
    if (!fit.ok) throw SolverError("closed-form angles give no admissible edge lengths");
    SolverTrace generic = sol.trace;
    sol = make_solution(deg, fit, relations);
    sol.pentagon.category = category;
    sol.pentagon.params = params;
    sol.trace.method = "closed form (" + fp.name + ") checked against generic";
    sol.trace.free_parameters = generic.free_parameters;
    sol.trace.roots_found = generic.roots_found;
    sol.trace.cross_check_deg = rad_to_deg(delta);
    sol.trace.aux.emplace_back(fp.name, fp.value_deg);
    if (category == 1) {
      sol.trace.aux.emplace_back("epsilon", epsilon_deg(fp.value_deg));
      sol.trace.aux.emplace_back("gamma", (180.0 - deg[kE]) / 2.0);
    } else if (category == 3) {
      sol.trace.aux.emplace_back("sigma", sigma_deg());
    } else {
      sol.trace.aux.emplace_back("beta", beta_deg(fp.value_deg));
    }
  }
  sol.pentagon.validate();
  return sol;
}

Type7Report type7_uniqueness_check() {
  Type7Report report;
  const std::vector<std::vector<int>> classes = {{0, 1, 2, 3}, {4}};
  for (int step = 1; step < 180; ++step) {
    const double alpha = 0.5 * step;
    auto angles_at = [alpha](double beta) {
      return std::array<double, 5>{180.0 - 2.0 * alpha, 90.0 + beta, 180.0 - 2.0 * beta, 90.0 + alpha,
                                   alpha + beta};
    };
    auto f = [&](double beta) { return two_class_residual(angles_at(beta), classes); };
    for (double beta : scan_roots(f, 0.0, 90.0, 0.05, 0.0)) {
      const auto deg = angles_at(beta);
      if (!angles_admissible(deg)) continue;
      if (!fit_edges(to_radians(deg), classes).ok) continue;
      const double n = (360.0 - deg[kA] - deg[kC]) / deg[kE];
      report.samples.push_back({alpha, beta, n});
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (const Type7Sample& s : report.samples) {
      if (std::abs(s.n - n) < 1e-9) {
        report.integer_solutions.push_back(n);
        break;
      }
    }
  }
  report.only_two = !report.samples.empty() && report.integer_solutions == std::vector<int>{2};
  return report;
}

}  // namespace pentaheesch
