#include "fanforge/wheel_glue.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "fanforge/fan_extension.hpp"
#include "fanforge/isomorphism.hpp"

namespace fanforge {

namespace {

Graph wheel_graph(int r) {
  // Hub is the last vertex (its incidence row is the dropped one).
  Graph g;
  g.vertices = r + 1;
  const int hub = r;
  for (int i = 0; i < r; ++i) {
    g.edges.push_back({hub, i, "x" + std::to_string(i + 1)});
    g.edges.push_back({i, (i + 1) % r, "y" + std::to_string(i + 1)});
  }
  // Reorder edges to the fan order x1, y1, x2, y2, ..., xr, yr.
  return g;
}

}  // namespace

ReprMatroid wheel_repr(int r, int p) {
  if (r < 2) throw input_error("wheels need rank >= 2");
  return graphic_matroid(wheel_graph(r), p);
}

Matroid wheel_matroid(int r) { return wheel_repr(r, 2).to_matroid(); }

Matroid whirl_matroid(int r) {
  Matroid w = wheel_matroid(r);
  Subset rim = 0;
  for (int i = 1; i <= r; ++i) rim |= bit(w.index("y" + std::to_string(i)));
  std::vector<Subset> bases = w.bases();
  bases.push_back(rim);
  std::sort(bases.begin(), bases.end());
  return Matroid::trusted(w.labels(), std::move(bases));
}

bool is_wheel_or_whirl(const Matroid& m) {
  const int n = m.size();
  if (n < 4 || n % 2 != 0) return false;
  const int r = n / 2;
  if (m.rank() != r) return false;
  static std::mutex mu;
  static std::map<int, std::pair<Matroid, Matroid>> cache;
  const Matroid *wheel_ref, *whirl_ref;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it == cache.end())
      it = cache.emplace(r, std::make_pair(wheel_matroid(r), whirl_matroid(r)))
               .first;
    wheel_ref = &it->second.first;
    whirl_ref = &it->second.second;
  }
  return are_isomorphic(m, *wheel_ref) || are_isomorphic(m, *whirl_ref);
}

int pi(const Matroid& m, Subset x, Subset y) { return m.pi_of(x, y); }

bool is_modular_flat(const Matroid& m, Subset flat) {
  if (!m.is_flat(flat)) return false;
  const Subset all = m.full_set();
  int rf = m.rank_of(flat);
  for (Subset g = 0;; ++g) {
    if (m.is_flat(g)) {
      if (m.rank_of(flat) + m.rank_of(g) !=
          m.rank_of(flat | g) + m.rank_of(flat & g))
        return false;
    }
    if (g == all) break;
  }
  (void)rf;
  return true;
}

namespace {

// Restriction to a label set, ground ordered by ascending label.
Matroid restriction_sorted(const Matroid& m, const std::vector<std::string>& t) {
  Subset keep = m.subset(t);
  return m.deletion(m.full_set() & ~keep).reordered_by_labels();
}

void check_gpc_preconditions(const Matroid& a1, const Matroid& a2,
                             const std::vector<std::string>& t) {
  std::set<std::string> tset(t.begin(), t.end());
  if (tset.size() != t.size()) throw input_error("repeated labels in T");
  for (const auto& l : a1.labels()) {
    bool in2 = a2.has_label(l);
    bool in_t = tset.count(l) > 0;
    if (in2 != in_t)
      throw input_error("E(M1) and E(M2) must intersect exactly in T");
  }
  for (const auto& l : t)
    if (!a1.has_label(l) || !a2.has_label(l))
      throw input_error("T must be contained in both ground sets");
  if (restriction_sorted(a1, t) != restriction_sorted(a2, t))
    throw structural_error("restrictions to T disagree");
  if (!is_modular_flat(a2, a2.subset(t)))
    throw structural_error("T is not a modular flat of the second matroid");
}

}  // namespace

Matroid gpc(const Matroid& m1, const Matroid& m2,
            const std::vector<std::string>& t) {
  check_gpc_preconditions(m1, m2, t);
  // Combined ground set: E(M1) then E(M2) - T.
  std::vector<std::string> labels = m1.labels();
  for (const auto& l : m2.labels())
    if (std::find(t.begin(), t.end(), l) == t.end()) labels.push_back(l);
  const int n = static_cast<int>(labels.size());
  if (n > kMaxElements) throw input_error("glued ground set too large");

  // Index maps into m1 and m2 (-1 when absent).
  std::vector<int> to1(n, -1), to2(n, -1);
  for (int i = 0; i < n; ++i) {
    if (m1.has_label(labels[i])) to1[i] = m1.index(labels[i]);
    if (m2.has_label(labels[i])) to2[i] = m2.index(labels[i]);
  }

  // Flats of the connection are exactly the sets whose traces are
  // flats on both sides.
  auto trace = [&](Subset f, const std::vector<int>& to) {
    Subset s = 0;
    for (int i : set_elements(f))
      if (to[i] >= 0) s |= bit(to[i]);
    return s;
  };
  std::vector<Subset> flats;
  const Subset all = n == 32 ? ~Subset{0} : (bit(n) - 1);
  for (Subset f = 0;; ++f) {
    if (m1.is_flat(trace(f, to1)) && m2.is_flat(trace(f, to2)))
      flats.push_back(f);
    if (f == all) break;
  }
  std::sort(flats.begin(), flats.end(), [](Subset a, Subset b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  // Heights in the flat lattice give the rank function.
  std::vector<int> height(flats.size(), 0);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    int h = 0;
    for (std::size_t j = 0; j < i; ++j)
      if ((flats[j] & flats[i]) == flats[j] && flats[j] != flats[i])
        h = std::max(h, height[j] + 1);
    height[i] = h;
  }
  const int rank = height.empty() ? 0 : height.back();  // E is the last flat
  auto closure_rank = [&](Subset x) {
    for (std::size_t i = 0; i < flats.size(); ++i)
      if ((flats[i] & x) == x) return height[i];
    throw structural_error("no flat contains the set");  // unreachable: E does
  };
  std::vector<Subset> bases;
  // Bases are the rank-sized sets whose closure is everything.
  std::function<void(int, int, Subset)> pick = [&](int start, int need,
                                                   Subset acc) {
    if (need == 0) {
      if (closure_rank(acc) == rank && popcount(acc) == rank)
        bases.push_back(acc);
      return;
    }
    for (int i = start; i <= n - need; ++i) pick(i + 1, need - 1, acc | bit(i));
  };
  pick(0, rank, 0);
  std::vector<Subset> spanning;
  for (Subset b : bases)
    if (closure_rank(b) == rank) spanning.push_back(b);
  return Matroid::trusted(std::move(labels), std::move(spanning));
}

namespace {

// Row transform sending the two given (independent) columns to the
// first two unit vectors; applied in place to all columns.
void normalize_pair_to_units(const PrimeField& f, std::vector<Vec>& cols,
                             int rows, int c0, int c1) {
  // Gaussian elimination pivoting on columns c0 then c1.
  std::vector<Vec> m(rows, Vec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  int pr = 0;
  for (int oc : {c0, c1}) {
    int sel = -1;
    for (int r = pr; r < rows; ++r)
      if (m[r][oc] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) throw structural_error("attachment columns are dependent");
    std::swap(m[pr], m[sel]);
    std::uint8_t scale = f.inv(m[pr][oc]);
    for (auto& d : m[pr]) d = f.mul(d, scale);
    for (int r = 0; r < rows; ++r) {
      if (r == pr) continue;
      std::uint8_t factor = m[r][oc];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < cols.size(); ++c)
        m[r][c] = f.sub(m[r][c], f.mul(factor, m[pr][c]));
    }
    ++pr;
  }
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rows; ++i) cols[j][i] = m[i][j];
}

void verify_flats_law(const Matroid& glued, const Matroid& m1,
                      const Matroid& m2) {
  const int n = glued.size();
  std::vector<int> to1(n, -1), to2(n, -1);
  for (int i = 0; i < n; ++i) {
    if (m1.has_label(glued.label(i))) to1[i] = m1.index(glued.label(i));
    if (m2.has_label(glued.label(i))) to2[i] = m2.index(glued.label(i));
  }
  auto trace = [&](Subset f, const std::vector<int>& to) {
    Subset s = 0;
    for (int i : set_elements(f))
      if (to[i] >= 0) s |= bit(to[i]);
    return s;
  };
  const Subset all = glued.full_set();
  for (Subset f = 0;; ++f) {
    bool lhs = glued.is_flat(f);
    bool rhs = m1.is_flat(trace(f, to1)) && m2.is_flat(trace(f, to2));
    if (lhs != rhs)
      throw structural_error("flats law fails for the amalgamated matrix");
    if (f == all) break;
  }
}

}  // namespace

ReprMatroid gpc(const ReprMatroid& r1, const ReprMatroid& r2,
                const std::vector<std::string>& t) {
  if (r1.field() != r2.field())
    throw input_error("gpc requires a common field");
  if (t.size() != 3)
    throw input_error("represented gpc supports triangle flats only");
  Matroid a1 = r1.to_matroid();
  Matroid a2 = r2.to_matroid();
  check_gpc_preconditions(a1, a2, t);
  const PrimeField& f = r1.field();

  std::vector<std::string> ts = t;
  std::sort(ts.begin(), ts.end());
  // Put both representations in coordinates where ts[0], ts[1] are the
  // first two unit vectors.
  std::vector<Vec> cols1 = r1.columns();
  std::vector<Vec> cols2 = r2.columns();
  normalize_pair_to_units(f, cols1, r1.rows(), r1.index(ts[0]),
                          r1.index(ts[1]));
  normalize_pair_to_units(f, cols2, r2.rows(), r2.index(ts[0]),
                          r2.index(ts[1]));
  // Align the third point projectively by scaling the two shared rows
  // of the second matrix.
  const Vec& u1 = cols1[r1.index(ts[2])];
  const Vec& u2 = cols2[r2.index(ts[2])];
  if (u1[0] == 0 || u1[1] == 0 || u2[0] == 0 || u2[1] == 0)
    throw structural_error("attachment set is not a triangle");
  std::uint8_t s0 = f.mul(u1[0], f.inv(u2[0]));
  std::uint8_t s1 = f.mul(u1[1], f.inv(u2[1]));
  for (auto& c : cols2) {
    c[0] = f.mul(c[0], s0);
    c[1] = f.mul(c[1], s1);
  }

  // Assemble the amalgam: 2 shared rows, then M1's extras, then M2's.
  const int rows = 2 + (r1.rows() - 2) + (r2.rows() - 2);
  std::vector<std::string> labels = r1.labels();
  std::vector<Vec> cols;
  for (int j = 0; j < r1.size(); ++j) {
    Vec c(rows, 0);
    c[0] = cols1[j][0];
    c[1] = cols1[j][1];
    for (int i = 2; i < r1.rows(); ++i) c[i] = cols1[j][i];
    cols.push_back(std::move(c));
  }
  for (int j = 0; j < r2.size(); ++j) {
    const std::string& l = r2.label(j);
    if (std::find(t.begin(), t.end(), l) != t.end()) continue;
    labels.push_back(l);
    Vec c(rows, 0);
    c[0] = cols2[j][0];
    c[1] = cols2[j][1];
    for (int i = 2; i < r2.rows(); ++i) c[2 + (r1.rows() - 2) + i - 2] = cols2[j][i];
    cols.push_back(std::move(c));
  }
  ReprMatroid glued(f, rows, std::move(labels), std::move(cols));
  verify_flats_law(glued.to_matroid(), a1, a2);
  return glued;
}

const Matroid Blueprint::base_matroid() const {
  if (base_repr) return base_repr->to_matroid();
  if (base) return *base;
  throw input_error("blueprint has no base matroid");
}

namespace {

void validate_blueprint(const Blueprint& bp, const Matroid& base) {
  std::set<std::string> ends;  // all a_i and c_i
  std::set<std::string> union_t;
  for (const auto& at : bp.attachments) {
    if (at.rank < 2) throw input_error("wheel ranks must be at least 2");
    const auto& tri = at.triangle;
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw input_error("attachment triangle has repeated labels");
    Subset tset = base.subset({tri[0], tri[1], tri[2]});
    if (!base.is_triangle(tset))
      throw input_error("attachment is not a triangle of the base");
    ends.insert(tri[0]);
    ends.insert(tri[2]);
    for (const auto& l : tri) union_t.insert(l);
  }
  for (const auto& l : bp.remove)
    if (!union_t.count(l))
      throw input_error("deletion set reaches outside the attachments");
  std::set<std::string> removed(bp.remove.begin(), bp.remove.end());
  for (const auto& at : bp.attachments) {
    const std::string& b = at.triangle[1];
    if (!removed.count(b) && !ends.count(b))
      throw input_error("kept middle point must be an end of another "
                        "attachment");
  }
}

}  // namespace

GlueResult glue_wheels(const Blueprint& bp) {
  Matroid base = bp.base_matroid();
  validate_blueprint(bp, base);

  std::optional<ReprMatroid> cur_repr = bp.base_repr;
  std::optional<Matroid> cur_abs;
  if (!cur_repr) cur_abs = base;

  std::vector<std::vector<std::string>> full_fans;
  for (std::size_t i = 0; i < bp.attachments.size(); ++i) {
    const auto& at = bp.attachments[i];
    const int r = at.rank;
    const std::string prefix = "_w" + std::to_string(i + 1);
    // Wheel labels: x1 -> a, xr -> c, yr -> b; interior fresh.
    std::vector<std::string> wheel_names(2 * r);
    auto xname = [&](int k) -> std::string {
      if (k == 1) return at.triangle[0];
      if (k == r) return at.triangle[2];
      return prefix + "x" + std::to_string(k);
    };
    auto yname = [&](int k) -> std::string {
      if (k == r) return at.triangle[1];
      return prefix + "y" + std::to_string(k);
    };
    std::vector<std::string> t = {at.triangle[0], at.triangle[1],
                                  at.triangle[2]};
    std::vector<std::string> fan_labels;
    for (int k = 1; k <= r; ++k) {
      fan_labels.push_back(xname(k));
      if (k < r) fan_labels.push_back(yname(k));
    }
    full_fans.push_back(fan_labels);

    if (cur_repr) {
      ReprMatroid wheel = wheel_repr(r, cur_repr->field().p());
      std::vector<std::string> nl;
      for (const auto& l : wheel.labels()) {
        if (l[0] == 'x')
          nl.push_back(xname(std::stoi(l.substr(1))));
        else
          nl.push_back(yname(std::stoi(l.substr(1))));
      }
      cur_repr = gpc(*cur_repr, wheel.relabeled(nl), t);
    } else {
      Matroid wheel = wheel_matroid(r);
      std::vector<std::string> nl;
      for (const auto& l : wheel.labels()) {
        if (l[0] == 'x')
          nl.push_back(xname(std::stoi(l.substr(1))));
        else
          nl.push_back(yname(std::stoi(l.substr(1))));
      }
      cur_abs = gpc(*cur_abs, wheel.relabeled(nl), t);
    }
  }

  GlueResult out;
  std::set<std::string> removed(bp.remove.begin(), bp.remove.end());
  if (cur_repr) {
    Subset x = 0;
    for (const auto& l : bp.remove) x |= bit(cur_repr->index(l));
    ReprMatroid final_repr = cur_repr->deletion(x);
    out.repr = final_repr;
    out.matroid = final_repr.to_matroid();
  } else {
    Subset x = 0;
    for (const auto& l : bp.remove) x |= bit(cur_abs->index(l));
    out.matroid = cur_abs->deletion(x);
  }
  for (const auto& fl : full_fans) {
    std::vector<int> seq;
    for (const auto& l : fl)
      if (!removed.count(l)) seq.push_back(out.matroid.index(l));
    auto fan = is_fan(out.matroid, seq);
    if (!fan)
      throw structural_error("canonical sequence is not a fan of the gluing");
    out.canonical_fans.fans.push_back(*fan);
  }
  out.full_fan_labels = full_fans;
  return out;
}

namespace {

// Projective points of the span of two columns lying in the span of a
// column set; exactly-one expected under the fan hypotheses.
std::optional<Vec> line_meets_span(const PrimeField& f, const Vec& u,
                                   const Vec& v,
                                   const std::vector<Vec>& span_cols) {
  std::vector<Vec> found;
  const int h = static_cast<int>(u.size());
  int base_rank = column_rank(f, span_cols);
  for (int a = 0; a < f.p(); ++a)
    for (int b = 0; b < f.p(); ++b) {
      if (a == 0 && b == 0) continue;
      Vec w(h);
      for (int i = 0; i < h; ++i)
        w[i] = f.add(f.mul(static_cast<std::uint8_t>(a), u[i]),
                     f.mul(static_cast<std::uint8_t>(b), v[i]));
      std::vector<Vec> ext = span_cols;
      ext.push_back(w);
      if (column_rank(f, ext) != base_rank) continue;
      Vec norm = projective_normalize(f, w);
      if (std::find(found.begin(), found.end(), norm) == found.end())
        found.push_back(norm);
    }
  if (found.size() != 1) return std::nullopt;
  return found[0];
}

}  // namespace

FanPlusResult fan_plus(const ReprMatroid& n, const Fan& f,
                       const std::string& a_label,
                       const std::string& c_label) {
  Matroid nm = n.to_matroid();
  auto checked = is_fan(nm, f.seq);
  if (!checked) throw input_error("sequence is not a fan of the host");
  FanClassification cls = classify(nm, *checked);
  const PrimeField& field = n.field();

  Subset fset = f.element_set();
  std::vector<Vec> complement_cols;
  for (int e = 0; e < n.size(); ++e)
    if (!contains(fset, e)) complement_cols.push_back(n.column(e));

  FanPlusResult out;
  const int len = f.length();
  // a end.
  if (cls.roles.front() == FanRole::spoke) {
    out.a = n.column(f.seq.front());
    out.a_fresh = false;
  } else {
    auto pt = line_meets_span(field, n.column(f.seq[0]), n.column(f.seq[1]),
                              complement_cols);
    if (!pt)
      throw structural_error(
          "line of the first two fan elements does not meet the complement "
          "span in a single point");
    out.a = *pt;
    out.a_fresh = true;
  }
  // c end.
  if (cls.roles.back() == FanRole::spoke) {
    out.c = n.column(f.seq.back());
    out.c_fresh = false;
  } else {
    auto pt = line_meets_span(field, n.column(f.seq[len - 1]),
                              n.column(f.seq[len - 2]), complement_cols);
    if (!pt)
      throw structural_error(
          "line of the last two fan elements does not meet the complement "
          "span in a single point");
    out.c = *pt;
    out.c_fresh = true;
  }
  // b: the point common to the rim span and the complement span.
  std::vector<Vec> rim_cols;
  for (int i = 0; i < len; ++i)
    if (cls.roles[i] == FanRole::rim) rim_cols.push_back(n.column(f.seq[i]));
  {
    std::vector<Vec> combined = rim_cols;
    for (const Vec& c : complement_cols) combined.push_back(c);
    std::vector<Vec> null = nullspace(field, combined, n.rows());
    std::vector<Vec> meet;
    for (const Vec& nv : null) {
      Vec v(n.rows(), 0);
      for (std::size_t j = 0; j < rim_cols.size(); ++j)
        for (int i = 0; i < n.rows(); ++i)
          v[i] = field.add(v[i], field.mul(nv[j], rim_cols[j][i]));
      bool zero = std::all_of(v.begin(), v.end(),
                              [](std::uint8_t d) { return d == 0; });
      if (!zero) meet.push_back(projective_normalize(field, v));
    }
    std::sort(meet.begin(), meet.end());
    meet.erase(std::unique(meet.begin(), meet.end()), meet.end());
    if (column_rank(field, meet) != 1)
      throw structural_error("rim span does not meet the complement span in "
                             "a single point");
    out.b = meet.front();
  }
  // F+ sequence.
  if (cls.roles.front() == FanRole::rim) out.fplus.push_back(a_label);
  for (int e : f.seq) out.fplus.push_back(nm.label(e));
  if (cls.roles.back() == FanRole::rim) out.fplus.push_back(c_label);
  return out;
}

CoreResult core(const ReprMatroid& n, const FanFamily& fans) {
  if (!fans.pairwise_disjoint())
    throw input_error("fans must be pairwise disjoint");
  Matroid nm = n.to_matroid();
  for (const Fan& f : fans.fans) {
    if (!is_fan(nm, f.seq)) throw input_error("family contains a non-fan");
    if (nm.size() - f.length() < 2)
      throw input_error("fan complement must contain at least two elements");
  }

  std::vector<std::string> labels = n.labels();
  std::vector<Vec> cols = n.columns();
  CoreResult out{n, n, {}, {}, {}};
  std::vector<Vec> ac_points;
  for (std::size_t i = 0; i < fans.fans.size(); ++i) {
    std::string ai = "_a" + std::to_string(i + 1);
    std::string bi = "_b" + std::to_string(i + 1);
    std::string ci = "_c" + std::to_string(i + 1);
    FanPlusResult fp = fan_plus(n, fans.fans[i], ai, ci);
    labels.push_back(ai);
    cols.push_back(fp.a);
    labels.push_back(bi);
    cols.push_back(fp.b);
    labels.push_back(ci);
    cols.push_back(fp.c);
    ac_points.push_back(projective_normalize(n.field(), fp.a));
    ac_points.push_back(projective_normalize(n.field(), fp.c));
    out.triangles.push_back({ai, bi, ci});
    out.fplus.push_back(fp.fplus);
  }
  ReprMatroid nplus(n.field(), n.rows(), labels, cols);
  Matroid nplus_m = nplus.to_matroid();
  for (const auto& tri : out.triangles)
    if (!nplus_m.is_triangle(nplus_m.subset({tri[0], tri[1], tri[2]})))
      throw structural_error("distinguished points do not form a triangle");

  // Core: drop the fans and every original element parallel to an a/c
  // point.
  Subset drop = 0;
  for (const Fan& f : fans.fans)
    for (int e : f.seq) drop |= bit(nplus.index(nm.label(e)));
  for (int e = 0; e < n.size(); ++e) {
    if (contains(drop, e)) continue;
    Vec norm = projective_normalize(n.field(), n.column(e));
    if (std::find(ac_points.begin(), ac_points.end(), norm) !=
        ac_points.end()) {
      drop |= bit(e);
      out.parallel_removed.push_back(n.label(e));
    }
  }
  out.augmented = nplus;
  out.core = nplus.deletion(drop);
  return out;
}

}  // namespace fanforge
