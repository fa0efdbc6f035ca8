#include "fanforge/matroid.hpp"

#include <algorithm>
#include <map>

namespace fanforge {

namespace {

void sort_unique(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Matroid::Matroid(std::vector<std::string> labels, std::vector<Subset> bases)
    : labels_(std::move(labels)),
      bases_(std::move(bases)),
      cache_(std::make_shared<Cache>()) {
  sort_unique(bases_);
  rank_ = bases_.empty() ? 0 : popcount(bases_.front());
}

Matroid Matroid::from_bases(std::vector<std::string> labels,
                            std::vector<Subset> bases) {
  if (static_cast<int>(labels.size()) > kMaxElements)
    throw input_error("ground set larger than " +
                      std::to_string(kMaxElements) + " elements");
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw input_error("duplicate element label: " + labels[i]);
  Matroid m(std::move(labels), std::move(bases));
  for (Subset b : m.bases_)
    if ((b & ~m.full_set()) != 0)
      throw input_error("basis mentions an element outside the ground set");
  m.validate();
  return m;
}

Matroid Matroid::trusted(std::vector<std::string> labels,
                         std::vector<Subset> bases) {
  return Matroid(std::move(labels), std::move(bases));
}

void Matroid::validate() const {
  if (bases_.empty()) throw structural_error("matroid has no bases");
  for (Subset b : bases_)
    if (popcount(b) != rank_)
      throw structural_error("bases of unequal size");
  // Basis exchange: for B1, B2 and x in B1-B2 there is y in B2-B1 with
  // B1-x+y a basis.
  for (Subset b1 : bases_) {
    for (Subset b2 : bases_) {
      if (b1 == b2) continue;
      Subset only1 = b1 & ~b2;
      for (int x : set_elements(only1)) {
        bool found = false;
        for (int y : set_elements(b2 & ~b1)) {
          Subset cand = (b1 & ~bit(x)) | bit(y);
          if (std::binary_search(bases_.begin(), bases_.end(), cand)) {
            found = true;
            break;
          }
        }
        if (!found)
          throw structural_error("basis-exchange axiom fails");
      }
    }
  }
}

int Matroid::index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw input_error("unknown element label: " + label);
}

bool Matroid::has_label(const std::string& label) const {
  for (const auto& l : labels_)
    if (l == label) return true;
  return false;
}

Subset Matroid::subset(const std::vector<std::string>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) s |= bit(index(l));
  return s;
}

std::vector<std::string> Matroid::label_set(Subset s) const {
  std::vector<std::string> out;
  for (int i : set_elements(s)) out.push_back(labels_[i]);
  return out;
}

const std::vector<std::uint8_t>& Matroid::rank_table() const {
  std::call_once(cache_->once, [this] {
    const int n = size();
    std::vector<std::uint8_t>& table = cache_->rank_table;
    table.assign(std::size_t{1} << n, 0);
    // Mark independent sets: all subsets of bases. 0xff = independent.
    for (Subset b : bases_) {
      Subset sub = b;
      while (true) {
        if (table[sub] != 0xff)
          table[sub] = 0xff;
        if (sub == 0) break;
        sub = (sub - 1) & b;
      }
    }
    // r(X) = |X| for independent X, else max over e of r(X - e).
    for (Subset x = 0; x < (Subset{1} << n); ++x) {
      if (table[x] == 0xff) {
        table[x] = static_cast<std::uint8_t>(popcount(x));
      } else {
        std::uint8_t best = 0;
        Subset rest = x;
        while (rest != 0) {
          Subset lb = rest & (~rest + 1);
          best = std::max(best, table[x ^ lb]);
          rest ^= lb;
        }
        table[x] = best;
      }
    }
  });
  return cache_->rank_table;
}

int Matroid::rank_of(Subset x) const {
  if ((x & ~full_set()) != 0)
    throw input_error("subset mentions an element outside the ground set");
  if (size() > 20) {
    // Table would be too large; scan the basis family.
    int r = 0;
    for (Subset b : bases_) r = std::max(r, popcount(b & x));
    return r;
  }
  return rank_table()[x];
}

int Matroid::corank_of(Subset x) const {
  return popcount(x) + rank_of(full_set() & ~x) - rank_;
}

bool Matroid::is_basis(Subset x) const {
  return std::binary_search(bases_.begin(), bases_.end(), x);
}

Subset Matroid::closure_of(Subset x) const {
  int rx = rank_of(x);
  Subset cl = x;
  for (int e = 0; e < size(); ++e)
    if (!contains(x, e) && rank_of(x | bit(e)) == rx) cl |= bit(e);
  return cl;
}

Subset Matroid::coclosure_of(Subset x) const {
  Subset cl = x;
  for (int e = 0; e < size(); ++e)
    if (!contains(x, e) && corank_of(x | bit(e)) == corank_of(x)) cl |= bit(e);
  return cl;
}

int Matroid::lambda_of(Subset x) const {
  return rank_of(x) + rank_of(full_set() & ~x) - rank_;
}

int Matroid::pi_of(Subset x, Subset y) const {
  if ((x & y) != 0) throw input_error("pi requires disjoint subsets");
  return rank_of(x) + rank_of(y) - rank_of(x | y);
}

Subset Matroid::loops() const {
  Subset l = 0;
  for (int e = 0; e < size(); ++e)
    if (is_loop(e)) l |= bit(e);
  return l;
}

Subset Matroid::coloops() const {
  Subset l = 0;
  for (int e = 0; e < size(); ++e)
    if (is_coloop(e)) l |= bit(e);
  return l;
}

bool Matroid::is_circuit(Subset x) const {
  if (x == 0) return false;
  if (independent(x)) return false;
  for (int e : set_elements(x))
    if (!independent(x & ~bit(e))) return false;
  return true;
}

bool Matroid::is_cocircuit(Subset x) const {
  if (x == 0) return false;
  if (coindependent(x)) return false;
  for (int e : set_elements(x))
    if (!coindependent(x & ~bit(e))) return false;
  return true;
}

bool Matroid::is_triangle(Subset x) const {
  return popcount(x) == 3 && is_circuit(x);
}

bool Matroid::is_triad(Subset x) const {
  return popcount(x) == 3 && is_cocircuit(x);
}

std::vector<Subset> Matroid::triangles() const {
  std::vector<Subset> out;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Subset t = bit(a) | bit(b) | bit(c);
        if (is_triangle(t)) out.push_back(t);
      }
  return out;
}

std::vector<Subset> Matroid::triads() const {
  std::vector<Subset> out;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Subset t = bit(a) | bit(b) | bit(c);
        if (is_triad(t)) out.push_back(t);
      }
  return out;
}

std::vector<Subset> Matroid::circuits() const {
  std::vector<Subset> out;
  const Subset all = full_set();
  for (Subset x = 1; x <= all && all != 0; ++x)
    if (is_circuit(x)) out.push_back(x);
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

Matroid Matroid::dual() const {
  std::vector<Subset> db;
  db.reserve(bases_.size());
  const Subset all = full_set();
  for (Subset b : bases_) db.push_back(all & ~b);
  return Matroid(labels_, std::move(db));
}

Matroid Matroid::deletion(Subset x) const {
  if ((x & ~full_set()) != 0)
    throw input_error("deletion set mentions unknown elements");
  if (x == 0) return *this;
  const Subset keep = full_set() & ~x;
  // Bases of M\X are the maximum-size traces of bases on E-X.
  int r = 0;
  for (Subset b : bases_) r = std::max(r, popcount(b & keep));
  std::vector<Subset> nb;
  for (Subset b : bases_)
    if (popcount(b & keep) == r) nb.push_back(b & keep);
  sort_unique(nb);
  // Compress indices.
  std::vector<int> old_ids = set_elements(keep);
  std::vector<int> pos(size(), -1);
  std::vector<std::string> nl;
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    pos[old_ids[i]] = static_cast<int>(i);
    nl.push_back(labels_[old_ids[i]]);
  }
  for (Subset& b : nb) {
    Subset c = 0;
    for (int e : set_elements(b)) c |= bit(pos[e]);
    b = c;
  }
  sort_unique(nb);
  return Matroid(std::move(nl), std::move(nb));
}

Matroid Matroid::contraction(Subset x) const {
  if ((x & ~full_set()) != 0)
    throw input_error("contraction set mentions unknown elements");
  if (x == 0) return *this;
  // Fix one maximal independent subset of X; bases of M/X are B - X
  // for bases B containing it.
  Subset bx = 0;
  for (int e : set_elements(x))
    if (rank_of(bx | bit(e)) > popcount(bx)) bx |= bit(e);
  std::vector<Subset> nb;
  for (Subset b : bases_)
    if ((b & bx) == bx) nb.push_back(b & ~x);
  sort_unique(nb);
  const Subset keep = full_set() & ~x;
  std::vector<int> old_ids = set_elements(keep);
  std::vector<int> pos(size(), -1);
  std::vector<std::string> nl;
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    pos[old_ids[i]] = static_cast<int>(i);
    nl.push_back(labels_[old_ids[i]]);
  }
  for (Subset& b : nb) {
    Subset c = 0;
    for (int e : set_elements(b)) c |= bit(pos[e]);
    b = c;
  }
  sort_unique(nb);
  return Matroid(std::move(nl), std::move(nb));
}

Matroid Matroid::minor(Subset c, Subset d) const {
  if ((c & d) != 0)
    throw input_error("contract and delete sets must be disjoint");
  Matroid after = contraction(c);
  Subset dd = 0;
  for (int e : set_elements(d)) dd |= bit(after.index(labels_[e]));
  return after.deletion(dd);
}

Matroid Matroid::relabeled(const std::vector<std::string>& new_labels) const {
  if (new_labels.size() != labels_.size())
    throw input_error("relabeling has wrong arity");
  return Matroid(new_labels, bases_);
}

Matroid Matroid::reordered_by_labels() const {
  std::vector<int> order(size());
  for (int i = 0; i < size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return labels_[a] < labels_[b]; });
  std::vector<int> pos(size());
  for (int i = 0; i < size(); ++i) pos[order[i]] = i;
  std::vector<std::string> nl(size());
  for (int i = 0; i < size(); ++i) nl[pos[i]] = labels_[i];
  std::vector<Subset> nb;
  nb.reserve(bases_.size());
  for (Subset b : bases_) {
    Subset c = 0;
    for (int e : set_elements(b)) c |= bit(pos[e]);
    nb.push_back(c);
  }
  sort_unique(nb);
  return Matroid(std::move(nl), std::move(nb));
}

bool Matroid::connected() const {
  if (size() <= 1) return true;
  const Subset all = full_set();
  // lambda(X) = 0 for a proper nonempty X iff M is disconnected.
  for (Subset x = 1; x < all; ++x) {
    if (!contains(x, 0)) continue;  // fix element 0 on one side
    if (x == all) continue;
    if (lambda_of(x) == 0) return false;
  }
  return true;
}

bool Matroid::is_3connected() const {
  const Subset all = full_set();
  if (size() <= 1) return true;
  for (Subset x = 1; x < all; ++x) {
    if (!contains(x, 0)) continue;
    Subset y = all & ~x;
    if (y == 0) continue;
    int l = lambda_of(x);
    if (l == 0) return false;  // 1-separation (either side size >= 1)
    if (l <= 1 && popcount(x) >= 2 && popcount(y) >= 2) return false;
  }
  return true;
}

bool Matroid::is_3connected_up_to_sp() const {
  const Subset all = full_set();
  if (size() <= 1) return true;
  for (Subset x = 1; x < all; ++x) {
    if (!contains(x, 0)) continue;
    Subset y = all & ~x;
    if (y == 0) continue;
    int l = lambda_of(x);
    if (l == 0) return false;
    if (l <= 1 && popcount(x) >= 2 && popcount(y) >= 2) {
      int rx = rank_of(x), ry = rank_of(y);
      int cx = corank_of(x), cy = corank_of(y);
      if (std::min(rx, ry) != 1 && std::min(cx, cy) != 1) return false;
    }
  }
  return true;
}

std::vector<Subset> Matroid::parallel_classes() const {
  if (!connected()) throw structural_error("matroid is disconnected");
  std::vector<Subset> classes;
  Subset seen = loops();
  for (int e = 0; e < size(); ++e) {
    if (contains(seen, e)) continue;
    Subset cls = bit(e);
    for (int f = e + 1; f < size(); ++f) {
      if (contains(seen, f) || is_loop(f)) continue;
      if (rank_of(bit(e) | bit(f)) == 1) cls |= bit(f);
    }
    seen |= cls;
    classes.push_back(cls);
  }
  return classes;
}

std::vector<Subset> Matroid::series_classes() const {
  return dual().parallel_classes();
}

Matroid Matroid::simplify() const {
  Subset drop = loops();
  for (int e = 0; e < size(); ++e) {
    if (contains(drop, e) || is_loop(e)) continue;
    for (int f = e + 1; f < size(); ++f) {
      if (is_loop(f)) continue;
      if (rank_of(bit(e) | bit(f)) == 1) drop |= bit(f);
    }
  }
  return deletion(drop);
}

Matroid Matroid::cosimplify() const { return dual().simplify().dual(); }

std::uint64_t Matroid::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& l : labels_) {
    h = hash_bytes(l.data(), l.size(), h);
    h = hash_mix(h, 0x1f);
  }
  for (Subset b : bases_) h = hash_mix(h, b);
  return h;
}

std::uint64_t Matroid::bases_hash() const {
  std::uint64_t h = 0x9ddfea08eb382d69ull;
  h = hash_mix(h, static_cast<std::uint64_t>(size()));
  for (Subset b : bases_) h = hash_mix(h, b);
  return h;
}

Matroid uniform_matroid(int r, int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return uniform_matroid(r, std::move(labels));
}

Matroid uniform_matroid(int r, std::vector<std::string> labels) {
  const int n = static_cast<int>(labels.size());
  if (r < 0 || r > n) throw input_error("uniform matroid needs 0 <= r <= n");
  std::vector<Subset> bases;
  const Subset all = n == 0 ? 0 : (bit(n) - 1);
  for (Subset x = 0; x <= all; ++x) {
    if (popcount(x) == r) bases.push_back(x);
    if (all == 0) break;
  }
  return Matroid::trusted(std::move(labels), std::move(bases));
}

}  // namespace fanforge
