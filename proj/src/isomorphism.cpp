#include "fanforge/isomorphism.hpp"

#include <algorithm>
#include <array>

namespace fanforge {

namespace {

struct Profile {
  // Per-element invariants, refined by neighborhood colors.
  std::vector<std::uint64_t> color;
  std::vector<Subset> triangles;
  std::vector<Subset> triads;
};

Profile build_profile(const Matroid& m) {
  Profile p;
  const int n = m.size();
  p.triangles = m.triangles();
  p.triads = m.triads();
  std::vector<int> tri_deg(n, 0), tria_deg(n, 0), basis_deg(n, 0);
  for (Subset t : p.triangles)
    for (int e : set_elements(t)) tri_deg[e]++;
  for (Subset t : p.triads)
    for (int e : set_elements(t)) tria_deg[e]++;
  for (Subset b : m.bases())
    for (int e : set_elements(b)) basis_deg[e]++;
  p.color.resize(n);
  for (int e = 0; e < n; ++e) {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    h = hash_mix(h, tri_deg[e]);
    h = hash_mix(h, tria_deg[e]);
    h = hash_mix(h, basis_deg[e]);
    h = hash_mix(h, m.rank_of(bit(e)));
    h = hash_mix(h, m.corank_of(bit(e)));
    p.color[e] = h;
  }
  // Two refinement rounds over triangle/triad neighborhoods.
  for (int round = 0; round < 2; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int e = 0; e < n; ++e) {
      std::vector<std::uint64_t> nb;
      auto commutative_pair = [&](Subset t, std::uint64_t tag) {
        std::uint64_t c[2];
        int k = 0;
        for (int f : set_elements(t & ~bit(e))) c[k++] = p.color[f];
        if (c[0] > c[1]) std::swap(c[0], c[1]);
        return hash_mix(hash_mix(tag, c[0]), c[1]);
      };
      for (Subset t : p.triangles)
        if (contains(t, e)) nb.push_back(commutative_pair(t, 0x100));
      for (Subset t : p.triads)
        if (contains(t, e)) nb.push_back(commutative_pair(t, 0x200));
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = p.color[e];
      for (std::uint64_t v : nb) h = hash_mix(h, v);
      next[e] = h;
    }
    p.color = std::move(next);
  }
  return p;
}

struct Searcher {
  const Matroid& a;
  const Matroid& b;
  const Profile& pa;
  const Profile& pb;
  std::vector<int> order;    // order in which elements of a are mapped
  std::vector<int> phi;      // a-index -> b-index, -1 unassigned
  std::vector<bool> used;    // b-index used
  const std::function<bool(const std::vector<int>&)>* cb;
  bool stopped = false;

  bool consistent(int depth) {
    // Newly mapped element x = order[depth]; check all triples through
    // x inside the mapped prefix for triangle/triad agreement, and pair
    // ranks for parallel/series structure.
    int x = order[depth];
    Subset mapped = 0;
    for (int k = 0; k <= depth; ++k) mapped |= bit(order[k]);
    for (int k = 0; k < depth; ++k) {
      int u = order[k];
      Subset pr = bit(x) | bit(u);
      Subset prb = bit(phi[x]) | bit(phi[u]);
      if (a.rank_of(pr) != b.rank_of(prb)) return false;
      if (a.corank_of(pr) != b.corank_of(prb)) return false;
    }
    for (int k1 = 0; k1 < depth; ++k1)
      for (int k2 = k1 + 1; k2 < depth; ++k2) {
        Subset t = bit(x) | bit(order[k1]) | bit(order[k2]);
        Subset tb = bit(phi[x]) | bit(phi[order[k1]]) | bit(phi[order[k2]]);
        if (a.is_triangle(t) != b.is_triangle(tb)) return false;
        if (a.is_triad(t) != b.is_triad(tb)) return false;
      }
    return true;
  }

  bool full_check() {
    // Verify the basis families correspond exactly.
    if (a.bases().size() != b.bases().size()) return false;
    for (Subset ba : a.bases()) {
      Subset img = 0;
      for (int e : set_elements(ba)) img |= bit(phi[e]);
      if (!b.is_basis(img)) return false;
    }
    return true;
  }

  void run(int depth) {
    if (stopped) return;
    const int n = a.size();
    if (depth == n) {
      if (full_check()) {
        if (!(*cb)(phi)) stopped = true;
      }
      return;
    }
    int x = order[depth];
    for (int y = 0; y < n; ++y) {
      if (used[y] || pa.color[x] != pb.color[y]) continue;
      phi[x] = y;
      used[y] = true;
      if (consistent(depth)) run(depth + 1);
      used[y] = false;
      phi[x] = -1;
      if (stopped) return;
    }
  }
};

bool quick_reject(const Matroid& a, const Matroid& b, const Profile& pa,
                  const Profile& pb) {
  if (a.size() != b.size() || a.rank() != b.rank()) return true;
  if (a.bases().size() != b.bases().size()) return true;
  if (pa.triangles.size() != pb.triangles.size()) return true;
  if (pa.triads.size() != pb.triads.size()) return true;
  auto ca = pa.color, cb2 = pb.color;
  std::sort(ca.begin(), ca.end());
  std::sort(cb2.begin(), cb2.end());
  return ca != cb2;
}

}  // namespace

void for_each_isomorphism(
    const Matroid& a, const Matroid& b,
    const std::function<bool(const std::vector<int>&)>& cb) {
  Profile pa = build_profile(a), pb = build_profile(b);
  if (quick_reject(a, b, pa, pb)) return;
  const int n = a.size();
  Searcher s{a, b, pa, pb, {}, std::vector<int>(n, -1),
             std::vector<bool>(n, false), &cb};
  // Map rare colors first; ties by index keep the image order lexicographic
  // in a stable way.
  std::vector<int> count(n, 0);
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f)
      if (pa.color[e] == pa.color[f]) count[e]++;
  s.order.resize(n);
  for (int i = 0; i < n; ++i) s.order[i] = i;
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int x, int y) { return count[x] < count[y]; });
  s.run(0);
}

std::optional<std::vector<int>> find_isomorphism(const Matroid& a,
                                                 const Matroid& b) {
  std::optional<std::vector<int>> out;
  for_each_isomorphism(a, b, [&](const std::vector<int>& phi) {
    out = phi;
    return false;
  });
  return out;
}

bool are_isomorphic(const Matroid& a, const Matroid& b) {
  return find_isomorphism(a, b).has_value();
}

std::uint64_t iso_invariant_hash(const Matroid& m) {
  Profile p = build_profile(m);
  std::vector<std::uint64_t> colors = p.color;
  std::sort(colors.begin(), colors.end());
  std::uint64_t h = 0xb5297a4d61297a4dull;
  h = hash_mix(h, m.size());
  h = hash_mix(h, m.rank());
  h = hash_mix(h, m.bases().size());
  h = hash_mix(h, p.triangles.size());
  h = hash_mix(h, p.triads.size());
  for (std::uint64_t c : colors) h = hash_mix(h, c);
  return h;
}

}  // namespace fanforge
