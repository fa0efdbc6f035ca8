#include "fanforge/repr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace fanforge {

ReprMatroid::ReprMatroid(PrimeField field, int rows,
                         std::vector<std::string> labels,
                         std::vector<Vec> columns)
    : field_(field),
      rows_(rows),
      labels_(std::move(labels)),
      columns_(std::move(columns)) {
  if (labels_.size() != columns_.size())
    throw input_error("labels/columns arity mismatch");
  if (static_cast<int>(labels_.size()) > kMaxElements)
    throw input_error("ground set larger than " +
                      std::to_string(kMaxElements) + " elements");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw input_error("duplicate element label: " + labels_[i]);
  for (auto& c : columns_) {
    if (static_cast<int>(c.size()) != rows_)
      throw input_error("column height mismatch");
    for (auto& d : c) d = static_cast<std::uint8_t>(d % field_.p());
  }
}

int ReprMatroid::index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw input_error("unknown element label: " + label);
}

int ReprMatroid::rank_of(Subset x) const {
  std::vector<Vec> cols;
  for (int i : set_elements(x)) cols.push_back(columns_[i]);
  return column_rank(field_, cols);
}

Matroid ReprMatroid::to_matroid() const {
  const int n = size();
  const int rk = rank();
  std::vector<Subset> bases;
  // DFS over columns keeping an echelon of the chosen prefix; visits
  // only independent partial selections.
  std::vector<Vec> echelon;  // reduced rows of chosen columns
  std::vector<int> chosen;
  auto reduce = [&](Vec v) -> Vec {
    for (const Vec& row : echelon) {
      // Find pivot position of row.
      int pcol = -1;
      for (int i = 0; i < rows_; ++i)
        if (row[i] != 0) {
          pcol = i;
          break;
        }
      if (pcol >= 0 && v[pcol] != 0) {
        std::uint8_t factor = v[pcol];
        for (int i = 0; i < rows_; ++i)
          v[i] = field_.sub(v[i], field_.mul(factor, row[i]));
      }
    }
    return v;
  };
  std::function<void(int)> dfs = [&](int start) {
    if (static_cast<int>(chosen.size()) == rk) {
      Subset b = 0;
      for (int i : chosen) b |= bit(i);
      bases.push_back(b);
      return;
    }
    for (int i = start; i < n; ++i) {
      Vec red = reduce(columns_[i]);
      bool zero = std::all_of(red.begin(), red.end(),
                              [](std::uint8_t d) { return d == 0; });
      if (zero) continue;
      // Normalize leading entry to 1.
      int pcol = 0;
      while (red[pcol] == 0) ++pcol;
      std::uint8_t scale = field_.inv(red[pcol]);
      for (auto& d : red) d = field_.mul(d, scale);
      echelon.push_back(red);
      chosen.push_back(i);
      dfs(i + 1);
      chosen.pop_back();
      echelon.pop_back();
    }
  };
  dfs(0);
  std::sort(bases.begin(), bases.end());
  return Matroid::trusted(labels_, std::move(bases));
}

ReprMatroid ReprMatroid::deletion(Subset x) const {
  std::vector<std::string> nl;
  std::vector<Vec> nc;
  for (int i = 0; i < size(); ++i) {
    if (contains(x, i)) continue;
    nl.push_back(labels_[i]);
    nc.push_back(columns_[i]);
  }
  return ReprMatroid(field_, rows_, std::move(nl), std::move(nc));
}

ReprMatroid ReprMatroid::contraction(Subset x) const {
  if (rank_of(x) != popcount(x))
    throw input_error("contraction of a dependent set is not supported here");
  if (x == 0) return *this;
  // Row-reduce so the contracted columns become unit vectors on the
  // first |x| coordinates, then drop those coordinates.
  std::vector<Vec> rows(rows_, Vec(size()));
  for (int j = 0; j < size(); ++j)
    for (int i = 0; i < rows_; ++i) rows[i][j] = columns_[j][i];
  // Gaussian elimination pivoting on the columns of x first.
  int pr = 0;
  std::vector<int> order = set_elements(x);
  for (int j = 0; j < size(); ++j)
    if (!contains(x, j)) order.push_back(j);
  for (int oc : order) {
    int sel = -1;
    for (int r = pr; r < rows_; ++r)
      if (rows[r][oc] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[pr], rows[sel]);
    std::uint8_t scale = field_.inv(rows[pr][oc]);
    for (auto& d : rows[pr]) d = field_.mul(d, scale);
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      std::uint8_t factor = rows[r][oc];
      if (factor == 0) continue;
      for (int c2 = 0; c2 < size(); ++c2)
        rows[r][c2] = field_.sub(rows[r][c2], field_.mul(factor, rows[pr][c2]));
    }
    ++pr;
    if (pr == rows_) break;
  }
  const int k = popcount(x);
  std::vector<std::string> nl;
  std::vector<Vec> nc;
  for (int j = 0; j < size(); ++j) {
    if (contains(x, j)) continue;
    Vec col(rows_ - k);
    for (int i = k; i < rows_; ++i) col[i - k] = rows[i][j];
    nl.push_back(labels_[j]);
    nc.push_back(std::move(col));
  }
  return ReprMatroid(field_, rows_ - k, std::move(nl), std::move(nc));
}

ReprMatroid ReprMatroid::dual() const {
  const int n = size();
  const int rk = rank();
  // Standard form [I | A] w.r.t. the first lexicographic basis B, then
  // the dual is [-A^T | I] with labels aligned.
  Subset basis = 0;
  {
    std::vector<Vec> cols;
    for (int i = 0; i < n && popcount(basis) < rk; ++i) {
      cols.push_back(columns_[i]);
      if (column_rank(field_, cols) == static_cast<int>(cols.size()))
        basis |= bit(i);
      else
        cols.pop_back();
    }
  }
  // Row-reduce so basis columns are identity.
  std::vector<Vec> rows(rows_, Vec(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < rows_; ++i) rows[i][j] = columns_[j][i];
  int pr = 0;
  for (int j : set_elements(basis)) {
    int sel = -1;
    for (int r = pr; r < rows_; ++r)
      if (rows[r][j] != 0) {
        sel = r;
        break;
      }
    std::swap(rows[pr], rows[sel]);
    std::uint8_t scale = field_.inv(rows[pr][j]);
    for (auto& d : rows[pr]) d = field_.mul(d, scale);
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      std::uint8_t factor = rows[r][j];
      if (factor == 0) continue;
      for (int c = 0; c < n; ++c)
        rows[r][c] = field_.sub(rows[r][c], field_.mul(factor, rows[pr][c]));
    }
    ++pr;
  }
  // A has one row per basis element (pivot order) and one column per
  // non-basis element.
  std::vector<int> basis_elems = set_elements(basis);
  std::vector<int> cobasis_elems;
  for (int j = 0; j < n; ++j)
    if (!contains(basis, j)) cobasis_elems.push_back(j);
  const int crk = n - rk;
  std::vector<Vec> dual_cols(n, Vec(crk, 0));
  for (int bi = 0; bi < rk; ++bi) {
    for (int cj = 0; cj < crk; ++cj)
      dual_cols[basis_elems[bi]][cj] = field_.neg(rows[bi][cobasis_elems[cj]]);
  }
  for (int cj = 0; cj < crk; ++cj) dual_cols[cobasis_elems[cj]][cj] = 1;
  return ReprMatroid(field_, crk, labels_, std::move(dual_cols));
}

ReprMatroid ReprMatroid::relabeled(
    const std::vector<std::string>& new_labels) const {
  return ReprMatroid(field_, rows_, new_labels, columns_);
}

std::string ReprMatroid::rref_signature() const {
  std::vector<Vec> rows(rows_, Vec(size()));
  for (int j = 0; j < size(); ++j)
    for (int i = 0; i < rows_; ++i) rows[i][j] = columns_[j][i];
  int rk = rref(field_, rows);
  std::string sig;
  sig.reserve(static_cast<std::size_t>(rk) * size() + 8);
  sig += std::to_string(field_.p());
  sig += ':';
  for (int r = 0; r < rk; ++r)
    for (int c = 0; c < size(); ++c)
      sig += static_cast<char>('0' + rows[r][c]);
  return sig;
}

std::string ReprMatroid::fresh_label() const {
  int next = 1;
  for (const auto& l : labels_) {
    if (l.size() > 2 && l[0] == '_' && l[1] == 'x') {
      int v = 0;
      bool num = true;
      for (std::size_t i = 2; i < l.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(l[i]))) {
          num = false;
          break;
        }
        v = v * 10 + (l[i] - '0');
      }
      if (num) next = std::max(next, v + 1);
    }
  }
  return "_x" + std::to_string(next);
}

std::vector<ReprMatroid> ReprMatroid::extensions() const {
  std::vector<ReprMatroid> out;
  const std::string label = fresh_label();
  for (const Vec& pt : projective_points(field_, rows_)) {
    std::vector<std::string> nl = labels_;
    std::vector<Vec> nc = columns_;
    nl.push_back(label);
    nc.push_back(pt);
    ReprMatroid r(field_, rows_, std::move(nl), std::move(nc));
    r.last_added_ = label;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ReprMatroid> ReprMatroid::coextensions() const {
  std::vector<ReprMatroid> out;
  ReprMatroid d = dual();
  for (ReprMatroid& ext : d.extensions()) {
    std::string added = ext.last_added();
    ReprMatroid back = ext.dual();
    back.last_added_ = added;
    out.push_back(std::move(back));
  }
  return out;
}

bool Graph::connected() const {
  if (vertices <= 1) return true;
  std::vector<int> comp(vertices);
  for (int i = 0; i < vertices; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& e : edges) comp[find(e.u)] = find(e.v);
  for (int i = 1; i < vertices; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

ReprMatroid graphic_matroid(const Graph& g, int p) {
  if (!g.connected()) throw structural_error("graph is disconnected");
  PrimeField f(p);
  const int rows = std::max(0, g.vertices - 1);
  std::vector<std::string> labels;
  std::vector<Vec> cols;
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= g.vertices || e.v < 0 || e.v >= g.vertices)
      throw input_error("edge endpoint out of range");
    Vec col(rows, 0);
    // Signed incidence with the last vertex row dropped.
    if (e.u != e.v) {
      if (e.u < rows) col[e.u] = 1;
      if (e.v < rows) col[e.v] = f.neg(1);
    }
    labels.push_back(e.label);
    cols.push_back(std::move(col));
  }
  return ReprMatroid(f, rows, std::move(labels), std::move(cols));
}

ReprMatroid graft_matroid(const Graft& g) {
  if (!g.graph.connected()) throw structural_error("graph is disconnected");
  PrimeField f(2);
  const int nv = g.graph.vertices;
  for (int v : g.gamma)
    if (v < 0 || v >= nv) throw input_error("gamma vertex out of range");
  std::set<int> gamma_set(g.gamma.begin(), g.gamma.end());
  if (gamma_set.size() != g.gamma.size())
    throw input_error("gamma lists a vertex twice");
  // Full incidence matrix plus the gamma column, then reduce to full
  // row rank so the representation height equals the matroid rank.
  std::vector<Vec> rows(nv, Vec(g.graph.edges.size() + 1, 0));
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < g.graph.edges.size(); ++j) {
    const auto& e = g.graph.edges[j];
    if (e.u != e.v) {
      rows[e.u][j] ^= 1;
      rows[e.v][j] ^= 1;
    }
    labels.push_back(e.label);
  }
  for (int v : gamma_set) rows[v].back() = 1;
  labels.push_back(g.gamma_label);
  int rk = rref(f, rows);
  rows.resize(rk);
  std::vector<Vec> cols(labels.size(), Vec(rk));
  for (std::size_t j = 0; j < labels.size(); ++j)
    for (int i = 0; i < rk; ++i) cols[j][i] = rows[i][j];
  return ReprMatroid(f, rk, std::move(labels), std::move(cols));
}

}  // namespace fanforge
