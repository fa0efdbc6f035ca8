#include "fanforge/fan.hpp"

#include <algorithm>
#include <set>

#include "fanforge/wheel_glue.hpp"

namespace fanforge {

Fan Fan::reversed() const {
  Fan r;
  r.seq.assign(seq.rbegin(), seq.rend());
  const int n = length();
  // Window k of the reversal is window n-3-k of the original; the
  // parity flips when n is even.
  r.starts_with_triangle =
      (n % 2 == 0) ? !starts_with_triangle : starts_with_triangle;
  return r;
}

Fan Fan::canonical() const {
  if (seq.front() <= seq.back()) return *this;
  return reversed();
}

namespace {

bool window_matches(const Matroid& m, int a, int b, int c, bool triangle) {
  Subset w = bit(a) | bit(b) | bit(c);
  return triangle ? m.is_triangle(w) : m.is_triad(w);
}

bool check_windows(const Matroid& m, const std::vector<int>& seq,
                   bool first_triangle) {
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
    bool want_triangle = (i % 2 == 0) == first_triangle;
    if (!window_matches(m, seq[i], seq[i + 1], seq[i + 2], want_triangle))
      return false;
  }
  return true;
}

}  // namespace

std::optional<Fan> is_fan(const Matroid& m, const std::vector<int>& seq) {
  if (seq.size() < 3) return std::nullopt;
  Subset seen = 0;
  for (int e : seq) {
    if (e < 0 || e >= m.size())
      throw input_error("fan element outside the ground set");
    if (contains(seen, e)) return std::nullopt;  // repeated element
    seen |= bit(e);
  }
  for (bool first_triangle : {true, false}) {
    if (check_windows(m, seq, first_triangle)) {
      Fan f;
      f.seq = seq;
      f.starts_with_triangle = first_triangle;
      return f;
    }
  }
  return std::nullopt;
}

std::optional<Fan> is_fan(const Matroid& m,
                          const std::vector<std::string>& labels) {
  std::vector<int> seq;
  for (const auto& l : labels) seq.push_back(m.index(l));
  return is_fan(m, seq);
}

std::vector<FanRole> fan_roles(const Fan& f) {
  std::vector<FanRole> roles(f.seq.size());
  for (std::size_t i = 0; i < f.seq.size(); ++i) {
    bool odd_position = (i % 2 == 0);  // 1-based odd
    bool spoke = (odd_position == f.starts_with_triangle);
    roles[i] = spoke ? FanRole::spoke : FanRole::rim;
  }
  return roles;
}

FanClassification classify(const Matroid& m, const Fan& f) {
  if (!m.is_3connected() || m.size() < 4)
    throw structural_error("fan classification needs a 3-connected host "
                           "with at least 4 elements");
  if (is_wheel_or_whirl(m))
    throw structural_error("spoke/rim labels are ambiguous in wheels and "
                           "whirls");
  // A window that is both a triangle and a triad would also make the
  // labels ambiguous.
  for (std::size_t i = 0; i + 2 < f.seq.size(); ++i) {
    Subset w = bit(f.seq[i]) | bit(f.seq[i + 1]) | bit(f.seq[i + 2]);
    if (m.is_triangle(w) && m.is_triad(w))
      throw structural_error("fan window is both a triangle and a triad");
  }
  FanClassification out;
  out.roles = fan_roles(f);
  out.terminal.assign(f.seq.size(), false);
  if (!f.seq.empty()) {
    out.terminal.front() = true;
    out.terminal.back() = true;
  }
  return out;
}

std::vector<EnumeratedFan> enumerate_fans(const Matroid& m, int min_len) {
  min_len = std::max(min_len, 3);
  const int n = m.size();
  std::set<std::vector<int>> seen;
  std::vector<Fan> found;

  struct State {
    std::vector<int> seq;
    bool first_triangle;
  };

  auto emit = [&](const std::vector<int>& seq, bool first_triangle) {
    if (static_cast<int>(seq.size()) < min_len) return;
    Fan f;
    f.seq = seq;
    f.starts_with_triangle = first_triangle;
    Fan canon = f.canonical();
    if (seen.insert(canon.seq).second) found.push_back(canon);
  };

  std::function<void(State&)> extend = [&](State& s) {
    emit(s.seq, s.first_triangle);
    const std::size_t k = s.seq.size();
    bool want_triangle = ((k - 2) % 2 == 0) == s.first_triangle;
    Subset used = subset_from(s.seq);
    for (int e = 0; e < n; ++e) {
      if (contains(used, e)) continue;
      if (!window_matches(m, s.seq[k - 2], s.seq[k - 1], e, want_triangle))
        continue;
      s.seq.push_back(e);
      extend(s);
      s.seq.pop_back();
    }
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        for (bool first_triangle : {true, false}) {
          if (!window_matches(m, a, b, c, first_triangle)) continue;
          State s{{a, b, c}, first_triangle};
          extend(s);
          // A triple that is both triangle and triad would be walked
          // twice; the `seen` set handles the duplicate.
        }
      }

  std::sort(found.begin(), found.end(), [](const Fan& x, const Fan& y) {
    if (x.seq.size() != y.seq.size()) return x.seq.size() < y.seq.size();
    return x.seq < y.seq;
  });

  std::vector<EnumeratedFan> out;
  for (const Fan& f : found) {
    EnumeratedFan ef;
    ef.fan = f;
    ef.maximal = true;
    Subset fs = f.element_set();
    for (const Fan& g : found) {
      Subset gs = g.element_set();
      if (gs != fs && (gs & fs) == fs) {
        ef.maximal = false;
        break;
      }
    }
    out.push_back(std::move(ef));
  }
  return out;
}

bool is_subsequence(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j)
    if (a[i] == b[j]) ++i;
  return i == a.size();
}

bool is_consistent(const std::vector<int>& a, const std::vector<int>& b) {
  if (is_subsequence(a, b)) return true;
  std::vector<int> rb(b.rbegin(), b.rend());
  return is_subsequence(a, rb);
}

bool is_enclosed(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() > b.size()) return false;
  std::vector<int> ra(a.rbegin(), a.rend());
  for (std::size_t s = 0; s + a.size() <= b.size(); ++s) {
    bool fwd = true, rev = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b[s + i] != a[i]) fwd = false;
      if (b[s + i] != ra[i]) rev = false;
    }
    if (fwd || rev) return true;
  }
  return false;
}

bool is_contiguous(const std::vector<int>& a, const std::vector<int>& b) {
  // a is a window of b or of reversed b, which is the same relation as
  // enclosure read from the other side.
  return is_enclosed(a, b);
}

bool FanFamily::pairwise_disjoint() const {
  Subset seen = 0;
  for (const Fan& f : fans) {
    Subset s = f.element_set();
    if ((seen & s) != 0) return false;
    seen |= s;
  }
  return true;
}

}  // namespace fanforge
