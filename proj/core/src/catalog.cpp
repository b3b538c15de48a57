#include "pentaheesch/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace pentaheesch {

char corner_letter(int corner) { return static_cast<char>('A' + corner); }
char edge_letter(int edge) { return static_cast<char>('a' + edge); }

std::string format_counts(const CornerCounts& counts) {
  std::string out;
  for (int k = 0; k < 5; ++k) {
    if (counts[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (counts[k] != 1) out += std::to_string(counts[k]);
    out += corner_letter(k);
  }
  return out.empty() ? "0" : out;
}

CornerCounts parse_counts(const std::string& text) {
  CornerCounts c{};
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    if (text[i] == '+' || std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    int coeff = 0;
    bool has_digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = coeff * 10 + (text[i] - '0');
      has_digits = true;
      ++i;
    }
    if (i < text.size() && text[i] == '*') ++i;
    if (i >= text.size() || text[i] < 'A' || text[i] > 'E') {
      throw std::invalid_argument("bad corner multiset: " + text);
    }
    c[text[i] - 'A'] += has_digits ? coeff : 1;
    any = true;
    ++i;
  }
  if (!any) throw std::invalid_argument("empty corner multiset");
  return c;
}

int total_corners(const CornerCounts& counts) {
  int t = 0;
  for (int v : counts) t += v;
  return t;
}

std::string format_params(const Params& p) {
  std::string out;
  if (p.m) out += "m=" + std::to_string(*p.m);
  if (p.n) {
    if (!out.empty()) out += ',';
    out += "n=" + std::to_string(*p.n);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> parse_classes(const std::string& spec) {
  std::vector<std::vector<int>> out(1);
  for (char ch : spec) {
    if (ch == '|') {
      out.emplace_back();
    } else {
      out.back().push_back(ch - 'a');
    }
  }
  return out;
}

CategoryInfo make_info(int id, ParamKind kind, std::vector<std::string> rel, std::string edge_rel,
                       const std::string& classes, std::string domain, std::string nonexistence) {
  CategoryInfo c;
  c.id = id;
  c.kind = kind;
  c.angle_relations = std::move(rel);
  c.edge_relation = std::move(edge_rel);
  c.edge_classes = parse_classes(classes);
  c.domain = std::move(domain);
  c.nonexistence = std::move(nonexistence);
  return c;
}

const std::vector<CategoryInfo>& infos() {
  static const std::vector<CategoryInfo> table = {
      make_info(1, ParamKind::kNone, {"2A+B", "2B+E", "2D+A", "2C+A+E"}, "a=b=c=e!=d", "abce|d", "", ""),
      make_info(2, ParamKind::kNone, {"2A+B", "2C+D", "2B+C+E", "2E+B+D"}, "a=b=c!=d=e", "abc|de", "", ""),
      make_info(3, ParamKind::kN, {"2A+B", "2C+D", "2E+B+D", "(n+1)D+C+E"}, "a=b=c!=d=e", "abc|de",
                "n >= 1", "n = 0 is geometrically impossible"),
      make_info(4, ParamKind::kMN, {"2A+B", "2D+E", "2C+B+E", "mB+nE+A"}, "a=b=c=e!=d", "abce|d",
                "m >= 0, n >= 1, m + n >= 3", "m + n < 3, m < 0 and n < 1 do not exist"),
      make_info(5, ParamKind::kN, {"2A+C", "2D+B", "2E+B+C", "(n+2)B"}, "a=b=c=d!=e", "abcd|e",
                "n = 1, 2, 3", "n = 0 and n >= 4 do not exist"),
      make_info(6, ParamKind::kNone, {"2A+C", "2D+B", "3B+A", "2E+B+C"}, "a=b=c=d!=e", "abcd|e", "", ""),
      make_info(7, ParamKind::kNone, {"2A+C", "2D+B", "3B+C", "2E+B+C"}, "a=b=c=d!=e", "abcd|e", "", ""),
      make_info(8, ParamKind::kN, {"2A+B", "3D", "(n+1)B+C+E"}, "a=b=c!=d=e", "abc|de", "n = 1, ..., 5",
                "n = 0 and n >= 6 do not exist"),
      make_info(9, ParamKind::kNone, {"2A+B", "3D", "2B+A", "2C+2E"}, "a=b=c!=d=e", "abc|de", "", ""),
      make_info(10, ParamKind::kNone, {"2A+B", "3D", "3E+B+C"}, "a=b=c!=d=e", "abc|de", "", ""),
      make_info(11, ParamKind::kN, {"2A+B", "3D", "nB+2E+C"}, "a!=b=c=d=e", "a|bcde", "n = 1, 2, 3",
                "n = 0 and n >= 4 do not exist"),
      make_info(12, ParamKind::kN, {"2A+B", "3E", "nB+2D+C"}, "a=e!=b=c=d", "ae|bcd", "n = 1, 2, 3",
                "n = 0 and n >= 4 do not exist"),
      make_info(13, ParamKind::kNone, {"2A+C", "3B", "5E+D"}, "a=b=c=d!=e", "abcd|e", "", ""),
      make_info(14, ParamKind::kNone, {"2A+C", "3B", "3D+B+E"}, "a=b=c=d!=e", "abcd|e", "", ""),
      make_info(15, ParamKind::kNone, {"2A+B", "2E+A", "3D+C+E", "10D"}, "a=b=c!=d!=e!=a", "abc|d|e", "", ""),
      make_info(16, ParamKind::kN, {"2A+B", "2D+B", "4C", "4E", "(n+1)B+nC"}, "a!=b=c=d!=e!=a", "bcd|a|e",
                "n = 1, 2", "n = 0 and n >= 3 do not exist"),
      make_info(17, ParamKind::kN, {"2A+B", "2D+B", "3C", "6E", "nC+3B"}, "a!=b=c=d!=e!=a", "bcd|a|e",
                "n = 1, 2", "n = 0 and n >= 3 do not exist"),
  };
  return table;
}

AngleRelation rel(const std::string& text) {
  AngleRelation r;
  r.coeffs = parse_counts(text);
  r.text = text + "=360";
  return r;
}

AngleRelation rel(CornerCounts c) {
  AngleRelation r;
  r.coeffs = c;
  r.text = format_counts(c) + "=360";
  return r;
}

}  // namespace

const CategoryInfo& category_info(int id) {
  if (id < 1 || id > 17) throw CatalogError("unknown category " + std::to_string(id) + " (expected 1..17)");
  return infos()[id - 1];
}

std::vector<int> category_ids() {
  std::vector<int> ids;
  for (int i = 1; i <= 17; ++i) ids.push_back(i);
  return ids;
}

void check_params(int id, const Params& p) {
  const CategoryInfo& info = category_info(id);
  const std::string cat = "category " + std::to_string(id);
  switch (info.kind) {
    case ParamKind::kNone:
      if (p.m || p.n) throw CatalogError(cat + " takes no parameters");
      return;
    case ParamKind::kN:
      if (p.m) throw CatalogError(cat + " takes only n");
      if (!p.n) throw CatalogError(cat + " requires n");
      break;
    case ParamKind::kMN:
      if (!p.m || !p.n) throw CatalogError(cat + " requires m and n");
      break;
  }
  const int n = *p.n;
  bool ok = true;
  switch (id) {
    case 3: ok = n >= 1; break;
    case 4: ok = *p.m >= 0 && n >= 1 && *p.m + n >= 3; break;
    case 5:
    case 11:
    case 12: ok = n >= 1 && n <= 3; break;
    case 8: ok = n >= 1 && n <= 5; break;
    case 16:
    case 17: ok = n >= 1 && n <= 2; break;
    default: break;
  }
  if (!ok) {
    throw ParamOutOfDomain(cat + ": " + format_params(p) + " is outside the domain (" + info.domain +
                           "); " + info.nonexistence);
  }
}

bool in_domain(int id, const Params& params) {
  try {
    check_params(id, params);
    return true;
  } catch (const CatalogError&) {
    return false;
  }
}

std::vector<AngleRelation> angle_relations(int id, const Params& p, bool check_domain) {
  if (check_domain) {
    check_params(id, p);
  } else {
    category_info(id);
  }
  const int n = p.n.value_or(0), m = p.m.value_or(0);
  switch (id) {
    case 1: return {rel("2A+B"), rel("2B+E"), rel("2D+A"), rel("2C+A+E")};
    case 2: return {rel("2A+B"), rel("2C+D"), rel("2B+C+E"), rel("2E+B+D")};
    case 3: return {rel("2A+B"), rel("2C+D"), rel("2E+B+D"), rel(CornerCounts{0, 0, 1, n + 1, 1})};
    case 4: return {rel("2A+B"), rel("2D+E"), rel("2C+B+E"), rel(CornerCounts{1, m, 0, 0, n})};
    case 5: return {rel("2A+C"), rel("2D+B"), rel("2E+B+C"), rel(CornerCounts{0, n + 2, 0, 0, 0})};
    case 6: return {rel("2A+C"), rel("2D+B"), rel("3B+A"), rel("2E+B+C")};
    case 7: return {rel("2A+C"), rel("2D+B"), rel("3B+C"), rel("2E+B+C")};
    case 8: return {rel("2A+B"), rel("3D"), rel(CornerCounts{0, n + 1, 1, 0, 1})};
    case 9: return {rel("2A+B"), rel("3D"), rel("2B+A"), rel("2C+2E")};
    case 10: return {rel("2A+B"), rel("3D"), rel("3E+B+C")};
    case 11: return {rel("2A+B"), rel("3D"), rel(CornerCounts{0, n, 1, 0, 2})};
    case 12: return {rel("2A+B"), rel("3E"), rel(CornerCounts{0, n, 1, 2, 0})};
    case 13: return {rel("2A+C"), rel("3B"), rel("5E+D")};
    case 14: return {rel("2A+C"), rel("3B"), rel("3D+B+E")};
    case 15: return {rel("2A+B"), rel("2E+A"), rel("3D+C+E"), rel("10D")};
    case 16: return {rel("2A+B"), rel("2D+B"), rel("4C"), rel("4E"), rel(CornerCounts{0, n + 1, n, 0, 0})};
    case 17: return {rel("2A+B"), rel("2D+B"), rel("3C"), rel("6E"), rel(CornerCounts{0, 3, n, 0, 0})};
    default: break;
  }
  throw CatalogError("unknown category");
}

HeeschClass heesch_class(int id, const Params& p) {
  check_params(id, p);
  const int n = p.n.value_or(0), m = p.m.value_or(0);
  if ((id == 3 && n == 1) || (id == 4 && m == 2 && n == 1) || (id == 11 && n == 1) ||
      (id == 12 && n == 1)) {
    return HeeschClass::kInfinite;
  }
  return HeeschClass::kOne;
}

std::vector<std::string> known_types(int id, const Params& p) {
  check_params(id, p);
  const int n = p.n.value_or(0), m = p.m.value_or(0);
  if (id == 3 && n == 1) return {"Type 6"};
  if (id == 4 && m == 2 && n == 1) return {"Type 9"};
  if (id == 11 && n == 1) return {"Type 8"};
  if (id == 12 && n == 1) return {"Type 1", "Type 5"};
  return {};
}

std::vector<Params> tabulated_params(int id) {
  std::vector<Params> out;
  for (const ReferenceRow& r : reference_rows()) {
    if (r.category == id) out.push_back(r.params);
  }
  return out;
}

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
    {1, {std::nullopt, std::nullopt}, HeeschClass::kOne, {113.64, 132.72, 75.90, 123.18, 94.56}, {"AAB", "BAA", "CEAC", "DDA", "EBB"}, ""},
    {2, {std::nullopt, std::nullopt}, HeeschClass::kOne, {141.33, 77.34, 122.00, 116.00, 83.33}, {"AAB", "BCEB", "CCD", "DEBE", "EDEB"}, ""},
    {3, {std::nullopt, 1}, HeeschClass::kInfinite, {141.33, 77.34, 160.67, 38.67, 122.00}, {"", "", "", "", ""}, "Type 6"},
    {3, {std::nullopt, 2}, HeeschClass::kOne, {141.33, 77.34, 170.33, 19.33, 131.66}, {"AAB", "BAA", "CEDDD", "DCC", "EDEB"}, ""},
    {3, {std::nullopt, 3}, HeeschClass::kOne, {141.33, 77.34, 173.56, 12.89, 134.89}, {"AAB", "BAA", "CEDDDD", "DCC", "EDEB"}, ""},
    {3, {std::nullopt, 4}, HeeschClass::kOne, {141.33, 77.34, 175.17, 9.67, 136.50}, {"AAB", "BAA", "CEDDDDD", "DCC", "EDEB"}, ""},
    {4, {0, 3}, HeeschClass::kOne, {125.86, 108.28, 86.83, 140.98, 78.05}, {"AEEE", "BAA", "CBEC", "DDE", "EDD"}, ""},
    {4, {1, 2}, HeeschClass::kOne, {137.06, 85.88, 102.79, 145.74, 68.53}, {"AEEB", "BAA", "CEBC", "DDE", "EDD"}, ""},
    {4, {2, 1}, HeeschClass::kInfinite, {141.33, 77.34, 109.33, 148.00, 64.00}, {"", "", "", "", ""}, "Type 9"},
    {4, {0, 4}, HeeschClass::kOne, {150.55, 58.90, 124.37, 153.82, 52.36}, {"AEEEE", "BAA", "CBEC", "DDE", "EDD"}, ""},
    {4, {1, 3}, HeeschClass::kOne, {151.79, 56.42, 126.49, 154.70, 50.60}, {"AEEBE", "BAA", "CEBC", "DDE", "EDD"}, ""},
    {4, {2, 2}, HeeschClass::kOne, {152.78, 54.45, 128.19, 155.42, 49.16}, {"AEBBE", "BAA", "CBEC", "DDE", "EDD"}, ""},
    {4, {3, 1}, HeeschClass::kOne, {153.59, 52.82, 129.61, 156.02, 47.96}, {"AEBBB", "BAA", "CBEC", "DDE", "EDD"}, ""},
    {4, {0, 5}, HeeschClass::kOne, {158.47, 43.06, 138.32, 159.85, 40.31}, {"AEEEEE", "BAA", "CBEC", "DDE", "EDD"}, ""},
    {4, {1, 4}, HeeschClass::kOne, {158.83, 42.33, 138.98, 160.15, 39.71}, {"AEBEEE", "BAA", "CBEC", "DDE", "EDD"}, ""},
    {4, {2, 3}, HeeschClass::kOne, {159.16, 41.67, 139.58, 160.42, 39.16}, {"AEBBEE", "BAA", "CBEC", "DDE", "EDD"}, ""},
    {4, {3, 2}, HeeschClass::kOne, {159.46, 41.07, 140.13, 160.67, 38.66}, {"AEBBBE", "BAA", "CBEC", "DDE", "EDD"}, ""},
    {4, {4, 1}, HeeschClass::kOne, {159.74, 40.52, 140.64, 160.90, 38.20}, {"AEBBBB", "BAA", "CBEC", "DDE", "EDD"}, ""},
    {5, {std::nullopt, 1}, HeeschClass::kOne, {133.47, 120, 93.07, 120, 73.47}, {"ACA", "BBB", "CAA", "DBD", "EECB"}, ""},
    {5, {std::nullopt, 2}, HeeschClass::kOne, {129.13, 90, 101.74, 135, 84.13}, {"ACA", "BBBB", "CAA", "DBD", "EECB"}, ""},
    {5, {std::nullopt, 3}, HeeschClass::kOne, {124.74, 72, 110.51, 144, 88.74}, {"ACA", "BBBBB", "CAA", "DBD", "EECB"}, ""},
    {6, {std::nullopt, std::nullopt}, HeeschClass::kOne, {126.42, 77.86, 107.15, 141.07, 87.49}, {"ACA", "BBAB", "CAA", "DBD", "EECB"}, ""},
    {7, {std::nullopt, std::nullopt}, HeeschClass::kOne, {128.22, 85.48, 103.56, 137.26, 85.48}, {"ACA", "BBCB", "CAA", "DBD", "EECB"}, ""},
    {8, {std::nullopt, 1}, HeeschClass::kOne, {140, 80, 117.88, 120, 82.12}, {"AAB", "BAA", "CBBE", "DDD", "ECBB"}, ""},
    {8, {std::nullopt, 2}, HeeschClass::kOne, {156, 48, 146.87, 120, 69.13}, {"AAB", "BAA", "CBBBE", "DDD", "ECBBB"}, ""},
    {8, {std::nullopt, 3}, HeeschClass::kOne, {162.86, 34.29, 162.34, 120, 60.52}, {"AAB", "BAA", "CBBBBE", "DDD", "ECBBBB"}, ""},
    {8, {std::nullopt, 4}, HeeschClass::kOne, {166.67, 26.67, 171.91, 120, 54.76}, {"AAB", "BAA", "CBBBBBE", "DDD", "ECBBBBB"}, ""},
    {8, {std::nullopt, 5}, HeeschClass::kOne, {169.09, 21.82, 178.36, 120, 50.73}, {"AAB", "BAA", "CBBBBBBE", "DDD", "ECBBBBBB"}, ""},
    {9, {std::nullopt, std::nullopt}, HeeschClass::kOne, {120, 120, 90, 120, 90}, {"ABB", "BAA", "CECE", "DDD", "ECEC"}, ""},
    {10, {std::nullopt, std::nullopt}, HeeschClass::kOne, {167.34, 25.32, 173.67, 120, 53.67}, {"AAB", "BAA", "CBEEE", "DDD", "ECEEB"}, ""},
    {11, {std::nullopt, 1}, HeeschClass::kInfinite, {139.11, 81.78, 120, 120, 79.11}, {"", "", "", "", ""}, "Type 8"},
    {11, {std::nullopt, 2}, HeeschClass::kOne, {158.39, 43.22, 163.22, 120, 55.17}, {"AAB", "BAA", "CBBEE", "DDD", "ECBBE"}, ""},
    {11, {std::nullopt, 3}, HeeschClass::kOne, {165.39, 29.23, 178.45, 120, 46.94}, {"AAB", "BAA", "CBBBEE", "DDD", "ECBBBE"}, ""},
    {12, {std::nullopt, 1}, HeeschClass::kInfinite, {150, 60, 120, 90, 120}, {"", "", "", "", ""}, "Types 1 and 5"},
    {12, {std::nullopt, 2}, HeeschClass::kOne, {161.27, 37.47, 157.47, 63.80, 120}, {"AAB", "BAA", "CBDDB", "DCBBD", "EEE"}, ""},
    {12, {std::nullopt, 3}, HeeschClass::kOne, {166.70, 26.61, 173.21, 53.49, 120}, {"AAB", "BAA", "CBBDDB", "DCBBBD", "EEE"}, ""},
    {13, {std::nullopt, std::nullopt}, HeeschClass::kOne, {154.68, 120, 50.64, 178.35, 36.33}, {"AAC", "BBB", "CAA", "DEEEEE", "EDEEEE"}, ""},
    {14, {std::nullopt, std::nullopt}, HeeschClass::kOne, {92.61, 120, 174.78, 43.69, 108.92}, {"ACA", "BBB", "CAA", "DBDDE", "EDDDB"}, ""},
    {15, {std::nullopt, std::nullopt}, HeeschClass::kOne, {108, 144, 126, 36, 126}, {"AEE", "BAA", "CEDDD", "DCEDD", "EEA"}, ""},
    {16, {std::nullopt, 1}, HeeschClass::kOne, {112.5, 135, 90, 112.5, 90}, {"AAB", "BCB", "CCCC", "DBD", "EEEE"}, ""},
    {16, {std::nullopt, 2}, HeeschClass::kOne, {150, 60, 90, 150, 90}, {"AAB", "BCCBB", "CCCC", "DBD", "EEEE"}, ""},
    {17, {std::nullopt, 1}, HeeschClass::kOne, {140, 80, 120, 140, 60}, {"AAB", "BCBB", "CCC", "DBD", "EEEEEE"}, ""},
    {17, {std::nullopt, 2}, HeeschClass::kOne, {160, 40, 120, 160, 60}, {"AAB", "BCCBB", "CCC", "DBD", "EEEEEE"}, ""},
  };
  return rows;
}

std::optional<ReferenceRow> reference_row(int id, const Params& params) {
  for (const ReferenceRow& r : reference_rows()) {
    if (r.category == id && r.params == params) return r;
  }
  return std::nullopt;
}

namespace {

std::vector<CornerCounts> list(std::initializer_list<const char*> items) {
  std::vector<CornerCounts> out;
  for (const char* s : items) out.push_back(parse_counts(s));
  return out;
}

}  // namespace

StatedSpots stated_spots(int id, const Params& p) {
  check_params(id, p);
  const int n = p.n.value_or(0), m = p.m.value_or(0);
  StatedSpots s;
  switch (id) {
    case 3:
      if (n == 1) s.eec.push_back(parse_counts("B+C+E"));
      s.eec.push_back(CornerCounts{0, 0, 0, 2 * n + 1, 2});
      s.neec.push_back(CornerCounts{2, 0, 0, 2 * n, 0});
      break;
    case 4:
      if (m != 0) s.eec.push_back(CornerCounts{0, 2 * m - 1, 0, 0, 2 * n});
      break;
    case 5:
      if (n == 1) s.neec = list({"2B+D", "3D", "2E+C+D"});
      if (n == 3) s.neec = list({"3B+D"});
      break;
    case 7:
      s.neec = list({"2D+E", "2B+C+E", "3E+C"});
      break;
    case 8:
      s.neec.push_back(CornerCounts{0, 2 * n + 1, 0, 1, 0});
      break;
    case 9:
      s.eec = list({"3A", "3B", "4C", "3C+E", "3E+C", "4E"});
      s.neec = list({"A+B+D", "2A+D", "2D+A", "2B+D", "2D+B"});
      break;
    case 10:
      s.eec = list({"4E+B+D"});
      break;
    case 11:
      if (n == 1) s.eec = list({"3C", "2C+D", "2D+C", "2E+B+D"});
      s.eec.push_back(CornerCounts{0, 2 * n - 1, 0, 1, 2});
      break;
    case 12:
      if (n == 1) {
        s.eec = list({"A+C+D", "A+D+E", "3C", "2B+A+D", "2B+2C", "2D+B+E", "4D", "4B+C", "3B+2D", "6B"});
        s.neec = list({"2C+E", "2B+C+E", "2B+2E", "4B+E"});
      }
      s.eec.push_back(CornerCounts{0, 2 * n - 1, 0, 2, 1});
      break;
    case 14:
      s.neec = list({"4D+2A"});
      break;
    case 15:
      s.eec = list({"2C+A", "10D"});
      s.neec = list({"A+C+E", "3A+D", "2B+2D", "3D+A+B", "3D+2C", "3D+2E", "4D+2A", "6D+B", "7D+A"});
      break;
    case 16:
      if (n == 1) {
        s.neec = list({"A+B+D", "2B+E", "3C+E", "2C+2E", "3E+C"});
      } else {
        s.eec = list({"6B"});
        s.neec = list({"A+B+D", "2B+A+C", "2B+A+E", "2B+C+D", "2B+D+E", "3C+E", "2C+2E", "3E+C", "3B+C+E",
                       "3B+2E"});
      }
      break;
    case 17:
      if (n == 1) {
        s.neec = list({"A+B+D", "2B+A+E", "2B+D+E", "2C+2E", "3B+2E", "4E+C"});
      } else {
        s.eec = list({"6B+C", "9B"});
        s.neec = list({"A+B+D", "2B+A+C", "2B+C+D", "2C+2E", "2B+2E+A", "2B+2E+D", "4E+C", "5B+A", "5B+D",
                       "3B+2E+C", "6B+2E"});
      }
      break;
    default:
      break;
  }
  // Duplicates appear when a general formula coincides with a listed case.
  auto dedupe = [](std::vector<CornerCounts>& v) {
    std::vector<CornerCounts> out;
    for (const CornerCounts& c : v) {
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    v = std::move(out);
  };
  dedupe(s.eec);
  dedupe(s.neec);
  return s;
}

}  // namespace pentaheesch
