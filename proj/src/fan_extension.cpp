#include "fanforge/fan_extension.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "fanforge/isomorphism.hpp"
#include "fanforge/wheel_glue.hpp"

namespace fanforge {

namespace {

// DFS over the fan pool choosing family members by ascending pool
// index. `forced` (if >= 0) must be among the chosen.
void search_families(const Matroid& m, const EmbeddedTarget& target,
                     const std::vector<Fan>& pool, int forced,
                     const std::function<bool(const std::vector<int>&)>& emit) {
  const Subset uncovered_goal = m.full_set() & ~target.image;
  const int want = static_cast<int>(target.fans.size());
  if (want == 0) {
    if (uncovered_goal == 0) {
      std::vector<int> none;
      if (forced < 0) emit(none);
    }
    return;
  }
  const int pool_n = static_cast<int>(pool.size());
  // Suffix unions for coverage pruning.
  std::vector<Subset> suffix_union(pool_n + 1, 0);
  for (int i = pool_n - 1; i >= 0; --i)
    suffix_union[i] = suffix_union[i + 1] | pool[i].element_set();

  std::vector<int> chosen;
  Subset used = 0;
  bool stop = false;

  std::function<void(int)> dfs = [&](int start) {
    if (stop) return;
    const int have = static_cast<int>(chosen.size());
    if (have == want) {
      if ((uncovered_goal & ~used) != 0) return;
      if (forced >= 0 &&
          std::find(chosen.begin(), chosen.end(), forced) == chosen.end())
        return;
      // Condition (iii): each target fan consistent with a member.
      for (const auto& tf : target.fans) {
        bool ok = false;
        for (int idx : chosen)
          if (is_consistent(tf, pool[idx].seq)) {
            ok = true;
            break;
          }
        if (!ok) return;
      }
      if (!emit(chosen)) stop = true;
      return;
    }
    for (int i = start; i < pool_n; ++i) {
      if (forced >= 0 && i > forced &&
          std::find(chosen.begin(), chosen.end(), forced) == chosen.end())
        break;  // indices ascend, so the forced fan is out of reach
      Subset s = pool[i].element_set();
      if ((s & used) != 0) continue;
      // Coverage still feasible with the remaining pool?
      if ((uncovered_goal & ~(used | s | suffix_union[i + 1])) != 0) continue;
      chosen.push_back(i);
      used |= s;
      dfs(i + 1);
      used &= ~s;
      chosen.pop_back();
      if (stop) return;
    }
  };
  // Feasibility of coverage at all.
  if ((uncovered_goal & ~suffix_union[0]) != 0 && want > 0) return;
  dfs(0);
}

std::vector<Fan> fan_pool(const Matroid& m) {
  std::vector<Fan> pool;
  for (auto& ef : enumerate_fans(m, 3)) pool.push_back(ef.fan);
  return pool;
}

}  // namespace

std::vector<CoveringFamily> covering_families(const Matroid& m,
                                              const EmbeddedTarget& target) {
  std::vector<Fan> pool = fan_pool(m);
  std::vector<CoveringFamily> out;
  search_families(m, target, pool, -1, [&](const std::vector<int>& chosen) {
    CoveringFamily fam;
    for (int i : chosen) fam.fans.push_back(pool[i]);
    out.push_back(std::move(fam));
    return true;
  });
  return out;
}

bool has_covering_family(const Matroid& m, const EmbeddedTarget& target) {
  std::vector<Fan> pool = fan_pool(m);
  bool found = false;
  search_families(m, target, pool, -1, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<CoveringFamily> covering_family_containing(
    const Matroid& m, const EmbeddedTarget& target, const Fan& forced) {
  std::vector<Fan> pool = fan_pool(m);
  Fan canon = forced.canonical();
  int forced_idx = -1;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (pool[i].seq == canon.seq) {
      forced_idx = static_cast<int>(i);
      break;
    }
  if (forced_idx < 0) return std::nullopt;
  std::optional<CoveringFamily> out;
  search_families(m, target, pool, forced_idx,
                  [&](const std::vector<int>& chosen) {
                    CoveringFamily fam;
                    for (int i : chosen) fam.fans.push_back(pool[i]);
                    out = std::move(fam);
                    return false;
                  });
  return out;
}

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::terminal_spoke: return "terminal-spoke";
    case MoveKind::terminal_rim: return "terminal-rim";
    case MoveKind::internal_pair: return "internal-pair";
  }
  return "?";
}

std::string format_move(const Move& mv) {
  std::string line = "lengthen ";
  line += move_kind_name(mv.kind);
  for (const auto& l : mv.added_labels) {
    line += ' ';
    line += l;
  }
  line += " at ";
  line += std::to_string(mv.fan_index);
  return line;
}

namespace {

struct Removal {
  MoveKind kind;
  Subset removed;        // host indices removed
  Subset contracted;     // subset of removed that is contracted
};

// All candidate inverse moves on fan f of m, in deterministic order.
// Caller filters by 3-connectivity / target retention.
std::vector<Removal> candidate_removals(const Matroid& m, const Fan& f) {
  std::vector<Removal> out;
  const int n = f.length();
  std::vector<FanRole> roles = fan_roles(f);
  (void)m;
  if (n >= 4) {
    for (int end : {0, n - 1}) {
      int e = f.seq[end];
      if (roles[end] == FanRole::spoke)
        out.push_back({MoveKind::terminal_spoke, bit(e), 0});
      else
        out.push_back({MoveKind::terminal_rim, bit(e), bit(e)});
    }
  }
  if (n >= 5) {
    for (int i = 0; i + 1 < n; ++i) {
      if (roles[i] != FanRole::rim) continue;
      Subset rem = bit(f.seq[i]) | bit(f.seq[i + 1]);
      out.push_back({MoveKind::internal_pair, rem, bit(f.seq[i])});
    }
  }
  return out;
}

Fan fan_minus(const Matroid& smaller, const Matroid& host, const Fan& f,
              Subset removed) {
  std::vector<int> seq;
  for (int e : f.seq) {
    if (contains(removed, e)) continue;
    seq.push_back(smaller.index(host.label(e)));
  }
  auto fan = is_fan(smaller, seq);
  if (!fan)
    throw structural_error("shortened sequence is not a fan of the minor");
  return *fan;
}

}  // namespace

std::vector<Shortening> shortenings(const Matroid& m, const Fan& f,
                                    const Matroid& n) {
  if (!m.is_3connected())
    throw input_error("shortenings requires a 3-connected host");
  std::vector<Shortening> out;
  for (const Removal& r : candidate_removals(m, f)) {
    Matroid smaller = m.minor(r.contracted, r.removed & ~r.contracted);
    if (!smaller.is_3connected()) continue;
    if (!has_minor(smaller, n)) continue;
    Shortening s{smaller, fan_minus(smaller, m, f, r.removed), r.kind, {}};
    for (int e : set_elements(r.removed)) s.removed_labels.push_back(m.label(e));
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

struct BackwardSearch {
  const Matroid& host;          // the original M; states carry its labels
  const Matroid& n_w;           // embedded copy of N inside M
  Subset w_mask;                // image of E(N) as host indices
  std::vector<std::vector<int>> target_fans_host;  // in host index space
  std::uint64_t node_cap = 0;
  std::uint64_t nodes = 0;
  std::map<std::pair<Subset, std::string>, bool> memo{};

  struct Step {
    Move move;
  };
  std::vector<Move> trace{};  // filled on success, top-down then reversed

  Subset host_mask(const Matroid& state) const {
    Subset s = 0;
    for (const auto& l : state.labels()) s |= bit(host.index(l));
    return s;
  }

  EmbeddedTarget embed_in(const Matroid& state) const {
    EmbeddedTarget t;
    for (int i : set_elements(w_mask)) t.image |= bit(state.index(host.label(i)));
    for (const auto& tf : target_fans_host) {
      std::vector<int> seq;
      for (int e : tf) seq.push_back(state.index(host.label(e)));
      t.fans.push_back(std::move(seq));
    }
    return t;
  }

  std::string bases_key(const Matroid& state) const {
    std::string key;
    key.reserve(state.bases().size() * 4);
    for (Subset b : state.bases()) {
      key.push_back(static_cast<char>(b & 0xff));
      key.push_back(static_cast<char>((b >> 8) & 0xff));
      key.push_back(static_cast<char>((b >> 16) & 0xff));
    }
    return key;
  }

  bool search(const Matroid& state) {
    if (++nodes > node_cap)
      throw resource_limit_error("fan-extension search exceeded node cap");
    Subset mask = host_mask(state);
    if (mask == w_mask) return state == n_w;
    auto key = std::make_pair(mask, bases_key(state));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo.emplace(key, false);  // guards cycles; overwritten on success

    EmbeddedTarget my_target = embed_in(state);
    Subset removable = state.full_set() & ~my_target.image;

    for (auto& ef : enumerate_fans(state, 4)) {
      const Fan& f = ef.fan;
      for (const Removal& r : candidate_removals(state, f)) {
        if ((r.removed & ~removable) != 0) continue;
        Matroid smaller =
            state.minor(r.contracted, r.removed & ~r.contracted);
        if (!smaller.is_3connected()) continue;
        Fan f_after = fan_minus(smaller, state, f, r.removed);
        EmbeddedTarget sub_target;
        {
          for (int i : set_elements(w_mask))
            sub_target.image |= bit(smaller.index(host.label(i)));
          for (const auto& tf : target_fans_host) {
            std::vector<int> seq;
            for (int e : tf) seq.push_back(smaller.index(host.label(e)));
            sub_target.fans.push_back(std::move(seq));
          }
        }
        auto fam = covering_family_containing(smaller, sub_target, f_after);
        if (!fam) continue;
        if (search(smaller)) {
          memo[key] = true;
          Move mv;
          mv.kind = r.kind;
          for (int e : set_elements(r.removed))
            mv.added_labels.push_back(state.label(e));
          int idx = 0;
          Fan canon = f_after.canonical();
          for (std::size_t i = 0; i < fam->fans.size(); ++i)
            if (fam->fans[i].seq == canon.seq) idx = static_cast<int>(i);
          mv.fan_index = idx;
          for (int e : f.seq) mv.fan_after.push_back(state.label(e));
          trace.push_back(std::move(mv));
          return true;
        }
      }
    }
    return false;
  }
};

void check_recognizer_hypotheses(const Matroid& n) {
  if (n.size() < 4)
    throw input_error("target must have at least four elements");
  if (!n.is_3connected()) throw input_error("target must be 3-connected");
  if (is_wheel_or_whirl(n))
    throw input_error("target must be neither a wheel nor a whirl");
}

}  // namespace

FanExtensionResult is_fan_extension(const Matroid& m, const Matroid& n,
                                    const FanFamily& f_n,
                                    std::uint64_t node_cap) {
  check_recognizer_hypotheses(n);
  if (!f_n.pairwise_disjoint())
    throw input_error("target fans must be pairwise disjoint");
  for (const Fan& f : f_n.fans)
    if (!is_fan(n, f.seq))
      throw input_error("target fan family contains a non-fan");

  FanExtensionResult res;
  if (!m.is_3connected()) return res;  // fan-extensions are 3-connected

  std::uint64_t nodes_total = 0;
  bool done = false;
  for_each_minor_witness(m, n, [&](const MinorWitness& w) {
    if (nodes_total >= node_cap)
      throw resource_limit_error("fan-extension search exceeded node cap");
    Matroid n_w = m.minor(w.contract, w.remove);
    BackwardSearch bs{m, n_w, 0, {}, node_cap - nodes_total, 0, {}, {}};
    for (int i : w.map) bs.w_mask |= bit(i);
    for (const Fan& f : f_n.fans) {
      std::vector<int> seq;
      for (int e : f.seq) seq.push_back(w.map[e]);
      bs.target_fans_host.push_back(std::move(seq));
    }
    bool ok = bs.search(m);
    nodes_total += bs.nodes;
    if (ok) {
      res.is_extension = true;
      res.witness = w;
      std::reverse(bs.trace.begin(), bs.trace.end());
      res.trace = std::move(bs.trace);
      done = true;
    }
    return !done;
  });
  res.nodes = nodes_total;
  return res;
}

std::optional<bool> court_fast_path(const Matroid& m, const Matroid& n,
                                    const FanFamily& f_n,
                                    bool class_hereditary_guarantee) {
  check_recognizer_hypotheses(n);
  // No fan of N may contain two target fans as unordered sets.
  for (auto& ef : enumerate_fans(n, 3)) {
    Subset fs = ef.fan.element_set();
    int inside = 0;
    for (const Fan& f : f_n.fans)
      if ((f.element_set() & fs) == f.element_set()) ++inside;
    if (inside >= 2) return std::nullopt;
  }
  if (!m.is_3connected()) return std::nullopt;
  if (!class_hereditary_guarantee) {
    // Desk-scale exhaustive check: every minor of M with an N-minor is
    // 3-connected up to series and parallel sets.
    const int extra = m.size() - n.size();
    if (extra < 0 || extra > 4) return std::nullopt;
    std::function<bool(const Matroid&, int)> walk = [&](const Matroid& cur,
                                                        int depth) -> bool {
      if (!has_minor(cur, n)) return true;  // irrelevant branch
      if (!cur.is_3connected_up_to_sp()) return false;
      if (depth == 0) return true;
      for (int e = 0; e < cur.size(); ++e) {
        if (!walk(cur.deletion(bit(e)), depth - 1)) return false;
        if (!walk(cur.contraction(bit(e)), depth - 1)) return false;
      }
      return true;
    };
    if (!walk(m, extra)) return std::nullopt;
  }
  // Covering family relative to any witness certifies the extension.
  bool found = false;
  for_each_minor_witness(m, n, [&](const MinorWitness& w) {
    EmbeddedTarget t;
    for (int i : w.map) t.image |= bit(i);
    for (const Fan& f : f_n.fans) {
      std::vector<int> seq;
      for (int e : f.seq) seq.push_back(w.map[e]);
      t.fans.push_back(std::move(seq));
    }
    if (has_covering_family(m, t)) {
      found = true;
      return false;
    }
    return true;
  });
  if (found) return true;
  return std::nullopt;
}

}  // namespace fanforge
