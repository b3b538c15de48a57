#include "pentaheesch/spots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace pentaheesch {

std::string to_string(SpotClass c) { return c == SpotClass::kEec ? "EEC" : "NEEC"; }

int start_flank(const WedgeUse& w) { return w.reflected ? edge_before(w.corner) : edge_after(w.corner); }
int end_flank(const WedgeUse& w) { return w.reflected ? edge_after(w.corner) : edge_before(w.corner); }

int default_max_corners(const Pentagon& p, double target_deg) {
  const auto deg = p.angles_deg();
  const double lo = *std::min_element(deg.begin(), deg.end());
  return std::max(1, static_cast<int>(std::ceil(target_deg / lo - 1e-9)));
}

double angle_sum_deg(const Pentagon& p, const CornerCounts& counts) {
  const auto deg = p.angles_deg();
  double s = 0.0;
  for (int k = 0; k < 5; ++k) s += counts[k] * deg[k];
  return s;
}

bool is_spot(const Pentagon& p, const CornerCounts& counts, double tol_deg) {
  return std::abs(angle_sum_deg(p, counts) - 360.0) <= tol_deg;
}

namespace {

void enumerate_rec(const std::array<double, 5>& deg, int corner, int left, double sum, double target, double tol,
                   CornerCounts& cur, std::vector<CornerCounts>& out) {
  if (std::abs(sum - target) <= tol) {
    out.push_back(cur);
    return;
  }
  if (corner == 5 || left == 0 || sum > target + tol) return;
  for (int k = 0; k <= left; ++k) {
    const double s = sum + k * deg[corner];
    if (s > target + tol) break;
    cur[corner] = k;
    enumerate_rec(deg, corner + 1, left - k, s, target, tol, cur, out);
  }
  cur[corner] = 0;
}

// Equal-length classes of the pentagon's edges (numeric, not taken from the
// catalog, so the rule only sees geometry).
std::array<int, 5> length_classes(const Pentagon& p) {
  std::array<int, 5> cls{};
  std::vector<double> reps;
  const double scale = p.longest_edge();
  for (int e = 0; e < 5; ++e) {
    int found = -1;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (std::abs(reps[r] - p.edges[e]) <= 1e-9 * scale) found = static_cast<int>(r);
    }
    if (found < 0) {
      found = static_cast<int>(reps.size());
      reps.push_back(p.edges[e]);
    }
    cls[e] = found;
  }
  return cls;
}

struct CycleSearch {
  std::array<int, 5> cls;
  WedgeUse first;
  std::vector<WedgeUse> path;
  std::set<std::pair<CornerCounts, int>> dead;

  bool run(CornerCounts& left, int remaining, int end_class) {
    if (remaining == 0) return end_class == cls[start_flank(first)];
    const std::pair<CornerCounts, int> key{left, end_class};
    if (dead.count(key)) return false;
    for (int c = 0; c < 5; ++c) {
      if (left[c] == 0) continue;
      for (bool refl : {false, true}) {
        const WedgeUse w{c, refl};
        if (cls[start_flank(w)] != end_class) continue;
        --left[c];
        path.push_back(w);
        if (run(left, remaining - 1, cls[end_flank(w)])) return true;
        path.pop_back();
        ++left[c];
      }
    }
    dead.insert(key);
    return false;
  }
};

}  // namespace

std::vector<Spot> enumerate_spots(const Pentagon& p, int max_corners, double target_deg, double tol_deg) {
  if (max_corners <= 0) max_corners = default_max_corners(p, target_deg);
  std::vector<CornerCounts> found;
  CornerCounts cur{};
  enumerate_rec(p.angles_deg(), 0, max_corners, 0.0, target_deg, tol_deg, cur, found);
  std::sort(found.begin(), found.end(), std::greater<>());
  std::vector<Spot> out;
  for (const CornerCounts& c : found) {
    if (total_corners(c) == 0) continue;
    Spot s;
    s.counts = c;
    s.angle_sum_deg = angle_sum_deg(p, c);
    out.push_back(s);
  }
  return out;
}

std::vector<Spot> enumerate_straight_spots(const Pentagon& p, int max_corners) {
  return enumerate_spots(p, max_corners > 0 ? max_corners : default_max_corners(p, 180.0), 180.0);
}

bool witness_valid(const Pentagon& p, const std::vector<WedgeUse>& cycle) {
  if (cycle.empty()) return false;
  const double tol = 1e-9 * p.longest_edge();
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const WedgeUse& a = cycle[i];
    const WedgeUse& b = cycle[(i + 1) % cycle.size()];
    if (std::abs(p.edges[end_flank(a)] - p.edges[start_flank(b)]) > tol) return false;
  }
  return true;
}

Spot classify_spot(const Pentagon& p, const CornerCounts& counts) {
  Spot s;
  s.counts = counts;
  s.angle_sum_deg = angle_sum_deg(p, counts);
  const int total = total_corners(counts);
  s.classification = SpotClass::kNeec;
  if (total == 0) return s;
  int first_corner = 0;
  while (counts[first_corner] == 0) ++first_corner;
  for (bool refl : {false, true}) {
    CycleSearch search;
    search.cls = length_classes(p);
    search.first = WedgeUse{first_corner, refl};
    search.path.push_back(search.first);
    CornerCounts left = counts;
    --left[first_corner];
    if (search.run(left, total - 1, search.cls[end_flank(search.first)])) {
      s.classification = SpotClass::kEec;
      s.witness = search.path;
      return s;
    }
  }
  return s;
}

std::vector<Spot> classify_all(const Pentagon& p, const std::vector<Spot>& spots) {
  std::vector<Spot> out;
  out.reserve(spots.size());
  for (const Spot& s : spots) out.push_back(classify_spot(p, s.counts));
  return out;
}

std::optional<std::vector<WedgeUse>> realize_word(const Pentagon& p, const std::string& word) {
  const std::size_t n = word.size();
  if (n == 0) return std::nullopt;
  std::vector<int> corners;
  for (char ch : word) {
    if (ch < 'A' || ch > 'E') throw std::invalid_argument("bad corner word: " + word);
    corners.push_back(ch - 'A');
  }
  const auto cls = length_classes(p);
  std::vector<WedgeUse> path;
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return cls[end_flank(path.back())] == cls[start_flank(path.front())];
    for (bool refl : {false, true}) {
      const WedgeUse w{corners[i], refl};
      if (i > 0 && cls[start_flank(w)] != cls[end_flank(path.back())]) continue;
      path.push_back(w);
      if (self(self, i + 1)) return true;
      path.pop_back();
    }
    return false;
  };
  if (extend(extend, 0)) return path;
  return std::nullopt;
}

std::string format_witness(const std::vector<WedgeUse>& cycle) {
  std::string out;
  for (const WedgeUse& w : cycle) {
    if (!out.empty()) out += ' ';
    out += corner_letter(w.corner);
    if (w.reflected) out += '\'';
  }
  return out;
}

namespace {

CornerCounts counts_of_word(const std::string& word) {
  CornerCounts c{};
  for (char ch : word) ++c[ch - 'A'];
  return c;
}

}  // namespace

RemarksReport verify_remarks(const Pentagon& p) {
  RemarksReport report;
  report.category = p.category;
  report.params = p.params;
  std::set<CornerCounts> mentioned;

  auto record = [&](SpotCheck check) {
    mentioned.insert(check.counts);
    (check.agrees ? report.matched : report.contradicting).push_back(std::move(check));
  };

  const StatedSpots stated = stated_spots(p.category, p.params);
  for (const auto& [list, cls] : {std::pair{&stated.eec, SpotClass::kEec}, std::pair{&stated.neec, SpotClass::kNeec}}) {
    for (const CornerCounts& c : *list) {
      SpotCheck ch;
      ch.counts = c;
      ch.source = "remarks";
      ch.stated = cls;
      ch.sums_to_360 = is_spot(p, c);
      if (ch.sums_to_360) ch.computed = classify_spot(p, c).classification;
      ch.agrees = ch.sums_to_360 && ch.computed == cls;
      record(std::move(ch));
    }
  }

  if (const auto row = reference_row(p.category, p.params)) {
    for (int k = 0; k < 5; ++k) {
      const std::string& word = row->arrangements[k];
      if (word.empty()) continue;
      SpotCheck ch;
      ch.counts = counts_of_word(word);
      ch.source = std::string("table vertex ") + corner_letter(k);
      ch.word = word;
      ch.stated = SpotClass::kEec;
      ch.sums_to_360 = is_spot(p, ch.counts);
      if (ch.sums_to_360) ch.computed = realize_word(p, word) ? SpotClass::kEec : SpotClass::kNeec;
      ch.agrees = ch.sums_to_360 && ch.computed == SpotClass::kEec;
      record(std::move(ch));
    }
  }

  for (const AngleRelation& r : angle_relations(p.category, p.params)) {
    SpotCheck ch;
    ch.counts = r.coeffs;
    ch.source = "angle relation";
    ch.sums_to_360 = is_spot(p, r.coeffs);
    if (ch.sums_to_360) ch.computed = classify_spot(p, r.coeffs).classification;
    ch.agrees = ch.sums_to_360;
    record(std::move(ch));
  }

  for (const Spot& s : enumerate_spots(p)) {
    if (!mentioned.count(s.counts)) report.unlisted.push_back(classify_spot(p, s.counts));
  }
  return report;
}

RemarksReport verify_remarks(int category, const Params& params) {
  return verify_remarks(solve(category, params).pentagon);
}

}  // namespace pentaheesch
