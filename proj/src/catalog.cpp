#include "fanforge/catalog.hpp"

#include <algorithm>

#include "fanforge/wheel_glue.hpp"

namespace fanforge {

namespace {

ReprMatroid from_columns(int p, int rows, std::vector<std::string> labels,
                         std::vector<Vec> cols) {
  return ReprMatroid(PrimeField(p), rows, std::move(labels), std::move(cols));
}

std::vector<std::string> elem_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

ReprMatroid fano_repr() {
  std::vector<Vec> cols;
  for (int i = 1; i <= 7; ++i)
    cols.push_back({static_cast<std::uint8_t>(i & 1),
                    static_cast<std::uint8_t>((i >> 1) & 1),
                    static_cast<std::uint8_t>((i >> 2) & 1)});
  return from_columns(2, 3, elem_labels(7), cols);
}

CatalogEntry make_repr_entry(std::string name, std::string note,
                             ReprMatroid r) {
  CatalogEntry e;
  e.name = std::move(name);
  e.note = std::move(note);
  e.matroid = r.to_matroid();
  e.repr = std::move(r);
  return e;
}

CatalogEntry build_n12() {
  // Glue three rank-3 wheels to the Fano plane along its three lines
  // through e1, then delete those lines' points except the line
  // {e2, e4, e6}, which avoids e1. Elements are renamed so the three
  // canonical 4-element fans read u1..u4, v1..v4, w1..w4.
  Blueprint bp;
  bp.base_repr = fano_repr();
  bp.attachments.push_back({{"e2", "e3", "e1"}, 3});
  bp.attachments.push_back({{"e4", "e5", "e1"}, 3});
  bp.attachments.push_back({{"e6", "e7", "e1"}, 3});
  bp.remove = {"e1", "e3", "e5", "e7"};
  GlueResult g = glue_wheels(bp);

  std::vector<std::string> new_labels = g.matroid.labels();
  const char* stems[3] = {"u", "v", "w"};
  for (int i = 0; i < 3; ++i) {
    const Fan& f = g.canonical_fans.fans[i];
    // Canonical storage may have reversed the sequence; rebuild the
    // glue orientation (attachment end first) from the full label run.
    std::vector<int> seq = f.seq;
    if (g.matroid.label(seq.front()) != bp.attachments[i].triangle[0])
      std::reverse(seq.begin(), seq.end());
    for (int k = 0; k < 4; ++k)
      new_labels[seq[k]] = stems[i] + std::to_string(k + 1);
  }
  CatalogEntry e;
  e.name = "N12";
  e.note = "three rank-3 wheels glued to the Fano plane along the lines "
           "through a common point, intersection points deleted except a "
           "line avoiding it";
  e.repr = g.repr->relabeled(new_labels);
  e.matroid = e.repr->to_matroid();
  FanFamily fans;
  for (int i = 0; i < 3; ++i) {
    std::vector<std::string> names;
    for (int k = 1; k <= 4; ++k)
      names.push_back(stems[i] + std::to_string(k));
    fans.fans.push_back(*is_fan(e.matroid, names));
  }
  e.fans = std::move(fans);
  return e;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "U24", "U25",    "U35",    "U26",    "U36",    "U46",    "P6",
      "F7",  "F7dual", "MK4",    "N12",    "wheel2", "wheel3", "wheel4",
      "wheel5", "wheel6", "whirl2", "whirl3", "whirl4", "whirl5", "whirl6"};
  return names;
}

bool catalog_has(const std::string& name) {
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return true;
  for (const char* stem : {"wheel", "whirl"}) {
    const std::string s(stem);
    if (name.size() > s.size() && name.substr(0, s.size()) == s &&
        std::all_of(name.begin() + s.size(), name.end(),
                    [](char c) { return c >= '0' && c <= '9'; }))
      return true;
  }
  return false;
}

CatalogEntry catalog_get(const std::string& name) {
  if (name == "U24")
    return make_repr_entry(
        "U24", "four projective points of the GF(3) line",
        from_columns(3, 2, elem_labels(4), {{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  if (name == "U25")
    return make_repr_entry("U25", "five projective points of the GF(5) line",
                           from_columns(5, 2, elem_labels(5),
                                        {{1, 0}, {0, 1}, {1, 1}, {1, 2},
                                         {1, 3}}));
  if (name == "U35") {
    CatalogEntry u25 = catalog_get("U25");
    return make_repr_entry("U35", "dual of the U25 representation",
                           u25.repr->dual());
  }
  if (name == "U26")
    return make_repr_entry("U26", "all six projective points of the GF(5) "
                                  "line",
                           from_columns(5, 2, elem_labels(6),
                                        {{1, 0}, {0, 1}, {1, 1}, {1, 2},
                                         {1, 3}, {1, 4}}));
  if (name == "U36")
    return make_repr_entry(
        "U36", "six points of a conic over GF(5), no three collinear",
        from_columns(5, 3, elem_labels(6),
                     {{1, 0, 0}, {1, 1, 1}, {1, 2, 4}, {1, 3, 4}, {1, 4, 1},
                      {0, 0, 1}}));
  if (name == "U46") {
    CatalogEntry u26 = catalog_get("U26");
    return make_repr_entry("U46", "dual of the U26 representation",
                           u26.repr->dual());
  }
  if (name == "P6")
    return make_repr_entry(
        "P6",
        "rank-3 six-point matroid with exactly one 3-point line, over GF(5); "
        "non-binary and excluded from GF(2) certification runs",
        from_columns(5, 3, elem_labels(6),
                     {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 1},
                      {1, 3, 3}}));
  if (name == "F7")
    return make_repr_entry(
        "F7", "binary columns 1..7 (element ei carries the digits of i)",
        fano_repr());
  if (name == "F7dual") {
    CatalogEntry f7 = catalog_get("F7");
    return make_repr_entry("F7dual", "dual of the F7 representation",
                           f7.repr->dual());
  }
  if (name == "MK4") {
    Graph k4;
    k4.vertices = 4;
    int id = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v)
        k4.edges.push_back({u, v, "e" + std::to_string(++id)});
    return make_repr_entry("MK4", "cycle matroid of the complete graph K4",
                           graphic_matroid(k4));
  }
  if (name == "N12") {
    static const CatalogEntry n12 = build_n12();
    return n12;
  }
  for (const char* stem : {"wheel", "whirl"}) {
    const std::string s(stem);
    if (name.size() > s.size() && name.substr(0, s.size()) == s &&
        std::all_of(name.begin() + s.size(), name.end(),
                    [](char c) { return c >= '0' && c <= '9'; })) {
      int r = std::stoi(name.substr(s.size()));
      if (r < 2 || 2 * r > kMaxElements)
        throw input_error("wheel/whirl rank out of range: " + name);
      CatalogEntry e;
      e.name = name;
      if (s == "wheel") {
        e.note = "cycle matroid of the rank-" + std::to_string(r) +
                 " wheel graph";
        e.repr = wheel_repr(r, 2);
        e.matroid = e.repr->to_matroid();
      } else {
        e.note = "rank-" + std::to_string(r) +
                 " wheel with the rim circuit relaxed to a basis";
        e.matroid = whirl_matroid(r);
      }
      return e;
    }
  }
  throw input_error("unknown catalog name: " + name);
}

}  // namespace fanforge
