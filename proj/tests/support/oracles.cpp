#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace fanforge::oracle {

int matrix_rank(int p, const std::vector<Vec>& cols) {
  const int n = static_cast<int>(cols.size());
  // A set is independent iff no nonzero coefficient vector kills it.
  auto independent = [&](const std::vector<int>& pick) {
    const int k = static_cast<int>(pick.size());
    if (k == 0) return true;
    std::vector<int> coef(k, 0);
    while (true) {
      int i = 0;
      while (i < k && coef[i] == p - 1) coef[i++] = 0;
      if (i == k) break;
      ++coef[i];
      if (!cols.empty()) {
        const int h = static_cast<int>(cols[0].size());
        bool zero = true;
        for (int row = 0; row < h && zero; ++row) {
          int s = 0;
          for (int j = 0; j < k; ++j) s += coef[j] * cols[pick[j]][row];
          if (s % p != 0) zero = false;
        }
        if (zero) return false;
      }
    }
    return true;
  };
  int best = 0;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    std::vector<int> pick = set_elements(s);
    if (static_cast<int>(pick.size()) <= best) continue;
    if (independent(pick)) best = static_cast<int>(pick.size());
  }
  return best;
}

int rank_from_bases(const std::vector<Subset>& bases, Subset x) {
  int r = 0;
  for (Subset b : bases) r = std::max(r, popcount(b & x));
  return r;
}

bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  if (a.bases().size() != b.bases().size()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Subset ba : a.bases()) {
      Subset img = 0;
      for (int e : set_elements(ba)) img |= bit(perm[e]);
      if (!b.is_basis(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool has_minor_unpruned(const Matroid& m, const Matroid& n) {
  const int extra = m.size() - n.size();
  if (extra < 0) return false;
  const Subset all = m.full_set();
  for (Subset c = 0; c <= all; ++c) {
    if (popcount(c) > extra) {
      if (all == 0) break;
      continue;
    }
    Subset rest = all & ~c;
    // Choose the delete set among the remaining elements.
    for (Subset d = rest;; d = (d - 1) & rest) {
      if (popcount(c) + popcount(d) == extra) {
        Matroid cand = m.minor(c, d);
        if (cand.rank() == n.rank() && isomorphic(cand, n)) return true;
      }
      if (d == 0) break;
    }
    if (all == 0) break;
  }
  return false;
}

std::vector<Matroid> extensions_by_linear_subclass(const Matroid& m,
                                                   const std::string& label) {
  // Extensions of M by e correspond to linear subclasses: sets H of
  // hyperplanes such that whenever two members form a modular pair,
  // every hyperplane through their intersection is a member. In the
  // extension, e lies on exactly the hyperplanes in H.
  const int r = m.rank();
  std::vector<Subset> hyperplanes;
  for (Subset x = 0; x <= m.full_set(); ++x) {
    if (m.is_flat(x) && m.rank_of(x) == r - 1) hyperplanes.push_back(x);
    if (m.full_set() == 0) break;
  }
  const int h = static_cast<int>(hyperplanes.size());
  std::vector<Matroid> out;
  if (h > 20) throw std::runtime_error("oracle limited to 2^20 subclasses");
  for (Subset pick = 0; pick < (Subset{1} << h); ++pick) {
    bool linear = true;
    for (int i = 0; i < h && linear; ++i)
      for (int j = i + 1; j < h && linear; ++j) {
        if (!contains(pick, i) || !contains(pick, j)) continue;
        Subset meet = hyperplanes[i] & hyperplanes[j];
        if (m.rank_of(meet) != r - 2) continue;  // not a modular pair
        for (int k = 0; k < h; ++k) {
          if (contains(pick, k)) continue;
          if ((hyperplanes[k] & meet) == meet) {
            linear = false;
            break;
          }
        }
      }
    if (!linear) continue;
    // Build the extension: bases stay bases; X u e is a basis iff X is
    // independent of size r-1 and cl(X) is not a chosen hyperplane.
    std::vector<std::string> labels = m.labels();
    labels.push_back(label);
    const int epos = m.size();
    std::vector<Subset> bases = m.bases();
    for (Subset x = 0; x <= m.full_set(); ++x) {
      if (popcount(x) == r - 1 && m.independent(x)) {
        Subset cl = m.closure_of(x);
        bool on_chosen = false;
        for (int i = 0; i < h; ++i)
          if (contains(pick, i) && hyperplanes[i] == cl) {
            on_chosen = true;
            break;
          }
        if (!on_chosen) bases.push_back(x | bit(epos));
      }
      if (m.full_set() == 0) break;
    }
    try {
      out.push_back(Matroid::from_bases(labels, bases));
    } catch (const structural_error&) {
      // A non-linear family slipping through would fail the axioms;
      // the theory says this cannot happen, and from_bases re-checks.
      throw;
    }
  }
  return out;
}

bool representable_over(const Matroid& m, int p) {
  PrimeField f(p);
  const int r = m.rank();
  std::vector<Vec> points = projective_points(f, r);
  Vec zero(r, 0);
  const int n = m.size();
  std::vector<Vec> assigned;
  // Check that the partial assignment agrees with the rank function on
  // every subset of the assigned prefix.
  auto consistent = [&](int k) {
    for (Subset s = 0; s < (Subset{1} << k); ++s) {
      std::vector<Vec> cols;
      for (int i : set_elements(s)) cols.push_back(assigned[i]);
      if (matrix_rank(p, cols) != m.rank_of(s)) return false;
    }
    return true;
  };
  std::function<bool(int)> assign = [&](int k) {
    if (k == n) return true;
    std::vector<Vec> candidates;
    if (m.is_loop(k)) {
      candidates.push_back(zero);
    } else {
      candidates = points;
    }
    for (const Vec& pt : candidates) {
      assigned.push_back(pt);
      if (consistent(k + 1) && assign(k + 1)) return true;
      assigned.pop_back();
    }
    return false;
  };
  return assign(0);
}

}  // namespace fanforge::oracle

#include "fanforge/fan_extension.hpp"
#include "fanforge/isomorphism.hpp"

namespace fanforge::oracle {

namespace {

struct ForwardState {
  ReprMatroid repr;
  Matroid matroid;
  int added = 0;
};

EmbeddedTarget identity_target(const Matroid& host, const Matroid& n,
                               const FanFamily& f_n) {
  EmbeddedTarget t;
  for (const auto& l : n.labels()) t.image |= bit(host.index(l));
  for (const Fan& f : f_n.fans) {
    std::vector<int> seq;
    for (int e : f.seq) seq.push_back(host.index(n.label(e)));
    t.fans.push_back(std::move(seq));
  }
  return t;
}

// Fans (canonical sequences) that belong to at least one covering
// family of the host.
std::vector<Fan> covered_member_fans(const Matroid& host,
                                     const EmbeddedTarget& target) {
  std::vector<Fan> members;
  for (const CoveringFamily& fam : covering_families(host, target))
    for (const Fan& f : fam.fans) {
      bool seen = false;
      for (const Fan& g : members)
        if (g.seq == f.seq) seen = true;
      if (!seen) members.push_back(f);
    }
  return members;
}

}  // namespace

// Isomorphism fixing the embedded copy of N pointwise (fresh elements
// may permute). Sound for deduplicating forward states: futures
// transport along such maps. With at most three fresh elements this is
// a tiny permutation check.
bool iso_fixing_embedding(const Matroid& a, const Matroid& b,
                          const Matroid& n) {
  if (a.size() != b.size() || a.bases().size() != b.bases().size())
    return false;
  std::vector<int> fresh_a, fresh_b;
  std::vector<int> map(a.size(), -1);
  for (int i = 0; i < a.size(); ++i) {
    if (n.has_label(a.label(i)))
      map[i] = b.index(a.label(i));
    else
      fresh_a.push_back(i);
  }
  for (int i = 0; i < b.size(); ++i)
    if (!n.has_label(b.label(i))) fresh_b.push_back(i);
  if (fresh_a.size() != fresh_b.size()) return false;
  std::vector<int> perm(fresh_b.begin(), fresh_b.end());
  std::sort(perm.begin(), perm.end());
  do {
    for (std::size_t k = 0; k < fresh_a.size(); ++k) map[fresh_a[k]] = perm[k];
    bool ok = true;
    for (Subset ba : a.bases()) {
      Subset img = 0;
      for (int e : set_elements(ba)) img |= bit(map[e]);
      if (!b.is_basis(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool in_class_list(const Matroid& m, const std::vector<Matroid>& list) {
  for (const Matroid& o : list)
    if (are_isomorphic(m, o)) return true;
  return false;
}

std::vector<Matroid> forward_fan_extensions(const ReprMatroid& n,
                                            const FanFamily& f_n,
                                            int max_added) {
  Matroid n_matroid = n.to_matroid();
  std::vector<Matroid> classes = {n_matroid};
  // Buckets by number of added elements; a class is explored at its
  // least added count only.
  std::vector<std::vector<ForwardState>> buckets(max_added + 1);
  buckets[0].push_back({n, n_matroid, 0});

  auto emit = [&](ReprMatroid&& repr, int added) {
    if (added > max_added) return;
    Matroid m = repr.to_matroid();
    if (!m.is_3connected()) return;
    for (const ForwardState& st : buckets[added])
      if (st.matroid.size() == m.size() &&
          iso_fixing_embedding(st.matroid, m, n_matroid))
        return;  // an embedding-equivalent state is already queued
    if (!in_class_list(m, classes)) classes.push_back(m);
    buckets[added].push_back({std::move(repr), std::move(m), added});
  };

  for (int level = 0; level < max_added; ++level) {
    for (std::size_t si = 0; si < buckets[level].size(); ++si) {
      // Copy: emit() appends to buckets and can reallocate.
      ForwardState st = buckets[level][si];
      EmbeddedTarget target = identity_target(st.matroid, n_matroid, f_n);
      std::vector<Fan> members = covered_member_fans(st.matroid, target);
      std::vector<ReprMatroid> exts = st.repr.extensions();
      std::vector<ReprMatroid> coexts = st.repr.coextensions();
      for (const Fan& f : members) {
        std::vector<std::string> fl;
        for (int e : f.seq) fl.push_back(st.matroid.label(e));
        // Terminal spoke additions: extensions whose new element makes
        // a triangle window at either end (the move needs |F| >= 3 so
        // the result has length >= 4).
        for (const ReprMatroid& ext : exts) {
          Matroid m = ext.to_matroid();
          const std::string& z = ext.last_added();
          for (bool front : {true, false}) {
            std::vector<std::string> seq = fl;
            if (front)
              seq.insert(seq.begin(), z);
            else
              seq.push_back(z);
            auto fan = is_fan(m, seq);
            if (!fan) continue;
            int a = front ? 0 : fan->length() - 3;
            Subset w = bit(fan->seq[a]) | bit(fan->seq[a + 1]) |
                       bit(fan->seq[a + 2]);
            if (!m.is_triangle(w)) continue;
            emit(ReprMatroid(ext), st.added + 1);
          }
        }
        // Terminal rim additions: coextensions with a triad window at
        // either end.
        for (const ReprMatroid& coext : coexts) {
          Matroid m = coext.to_matroid();
          const std::string& z = coext.last_added();
          for (bool front : {true, false}) {
            std::vector<std::string> seq = fl;
            if (front)
              seq.insert(seq.begin(), z);
            else
              seq.push_back(z);
            auto fan = is_fan(m, seq);
            if (!fan) continue;
            int a = front ? 0 : fan->length() - 3;
            Subset w = bit(fan->seq[a]) | bit(fan->seq[a + 1]) |
                       bit(fan->seq[a + 2]);
            if (!m.is_triad(w)) continue;
            emit(ReprMatroid(coext), st.added + 1);
          }
        }
        // Internal rim+spoke pair: coextension (rim y) then extension
        // (spoke x), inserted adjacently; the fan must have >= 3
        // elements already so the result has >= 5.
        if (st.added + 2 <= max_added) {
          for (const ReprMatroid& coext : coexts) {
            const std::string y = coext.last_added();
            for (const ReprMatroid& both : coext.extensions()) {
              Matroid m = both.to_matroid();
              if (!m.is_3connected()) continue;
              const std::string x = both.last_added();
              for (std::size_t j = 0; j <= fl.size(); ++j) {
                for (bool yfirst : {true, false}) {
                  std::vector<std::string> seq = fl;
                  seq.insert(seq.begin() + j, yfirst ? x : y);
                  seq.insert(seq.begin() + j, yfirst ? y : x);
                  auto fan = is_fan(m, seq);
                  if (!fan) continue;
                  std::vector<FanRole> roles = fan_roles(*fan);
                  int ypos = static_cast<int>(j) + (yfirst ? 0 : 1);
                  if (roles[ypos] != FanRole::rim) continue;
                  emit(ReprMatroid(both), st.added + 2);
                }
              }
            }
          }
        }
      }
    }
  }
  return classes;
}

}  // namespace fanforge::oracle
