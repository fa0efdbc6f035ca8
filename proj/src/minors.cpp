#include "fanforge/minors.hpp"

#include <algorithm>

#include "fanforge/isomorphism.hpp"

namespace fanforge {

namespace {

// Enumerate k-subsets of the set `pool` (as masks) in ascending mask
// order, invoking f; f returns false to stop. Returns false if stopped.
bool for_each_ksubset(Subset pool, int k,
                      const std::function<bool(Subset)>& f) {
  std::vector<int> elems = set_elements(pool);
  const int n = static_cast<int>(elems.size());
  if (k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s = 0;
    for (int i : idx) s |= bit(elems[i]);
    if (!f(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void for_each_minor_witness(
    const Matroid& m, const Matroid& n,
    const std::function<bool(const MinorWitness&)>& cb) {
  const int extra = m.size() - n.size();
  const int k = m.rank() - n.rank();       // contraction size
  const int d = extra - k;                 // deletion size
  if (extra < 0 || k < 0 || d < 0) return;

  const std::size_t target_bases = n.bases().size();
  bool stopped = false;

  for_each_ksubset(m.full_set(), k, [&](Subset c) {
    if (!m.independent(c)) return true;
    Matroid mc = m.contraction(c);
    // Index translation: mc keeps m's labels in order.
    std::vector<int> mc_to_m(mc.size());
    {
      int j = 0;
      for (int e = 0; e < m.size(); ++e)
        if (!contains(c, e)) mc_to_m[j++] = e;
    }
    for_each_ksubset(mc.full_set(), d, [&](Subset dd) {
      // For coindependent dd the bases of mc\dd are exactly the bases
      // avoiding dd; count them before building anything.
      std::size_t avoiding = 0;
      for (Subset b : mc.bases())
        if ((b & dd) == 0) ++avoiding;
      if (avoiding != target_bases) return true;
      if (!mc.coindependent(dd)) return true;
      Matroid cand = mc.deletion(dd);
      std::vector<int> cand_to_m;
      for (int e = 0; e < mc.size(); ++e)
        if (!contains(dd, e)) cand_to_m.push_back(mc_to_m[e]);
      bool keep_going = true;
      for_each_isomorphism(n, cand, [&](const std::vector<int>& phi) {
        MinorWitness w;
        w.contract = c;
        for (int e : set_elements(dd)) w.remove |= bit(mc_to_m[e]);
        w.map.resize(n.size());
        for (int i = 0; i < n.size(); ++i) w.map[i] = cand_to_m[phi[i]];
        keep_going = cb(w);
        return keep_going;
      });
      if (!keep_going) stopped = true;
      return keep_going;
    });
    return !stopped;
  });
}

std::optional<MinorWitness> find_minor(const Matroid& m, const Matroid& n) {
  std::optional<MinorWitness> out;
  for_each_minor_witness(m, n, [&](const MinorWitness& w) {
    out = w;
    return false;
  });
  return out;
}

bool has_minor(const Matroid& m, const Matroid& n) {
  return find_minor(m, n).has_value();
}

}  // namespace fanforge
