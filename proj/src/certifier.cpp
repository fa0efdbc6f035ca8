#include "fanforge/certifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "fanforge/io.hpp"
#include "fanforge/isomorphism.hpp"
#include "fanforge/minors.hpp"

namespace fanforge {

namespace {

struct RawRep {
  ReprMatroid repr;
  Subset added_contract = 0;  // masks over the rep's own index space
  Subset added_delete = 0;
  int parent = -1;  // index into the previous level's pool
};

// One generation step: all extensions then all coextensions, in
// lexicographic column order.
void generate_children(const RawRep& parent, int parent_index,
                       std::vector<RawRep>& out) {
  for (ReprMatroid& ext : parent.repr.extensions()) {
    RawRep r{std::move(ext), parent.added_contract, parent.added_delete,
             parent_index};
    r.added_delete |= bit(r.repr.size() - 1);
    out.push_back(std::move(r));
  }
  for (ReprMatroid& coext : parent.repr.coextensions()) {
    // The fresh element's index: coextension preserves label order and
    // appends the new label last.
    RawRep r{std::move(coext), parent.added_contract, parent.added_delete,
             parent_index};
    r.added_contract |= bit(r.repr.size() - 1);
    out.push_back(std::move(r));
  }
}

}  // namespace

std::vector<Candidate> enumerate_candidates(const CertTask& task) {
  const Matroid n_matroid = task.n.to_matroid();
  if (task.depth < 0) throw input_error("depth must be nonnegative");

  std::vector<Candidate> out;
  {
    Candidate base;
    base.repr = task.n;
    base.matroid = n_matroid;
    base.level = 0;
    out.push_back(std::move(base));
  }

  // Pool of representation-distinct reachable reps per level; children
  // of every pool member are generated regardless of 3-connectivity,
  // since a 3-connected grandchild may have only degenerate parents.
  std::vector<RawRep> pool;
  pool.push_back({task.n, 0, 0, -1});

  std::uint64_t raw_budget = task.candidate_cap;
  std::vector<int> pool_level_start = {0, 1};

  for (int level = 1; level <= task.depth; ++level) {
    std::vector<RawRep> next;
    std::set<std::string> seen;
    int lo = pool_level_start[level - 1];
    int hi = pool_level_start[level];
    for (int pi = lo; pi < hi; ++pi) {
      std::vector<RawRep> kids;
      generate_children(pool[pi], pi, kids);
      for (RawRep& kid : kids) {
        if (raw_budget-- == 0)
          throw resource_limit_error("candidate budget exhausted");
        if (!seen.insert(kid.repr.rref_signature()).second) continue;
        next.push_back(std::move(kid));
      }
    }
    // Emit the 3-connected candidates with an N-minor, one per
    // isomorphism class.
    std::vector<std::pair<std::uint64_t, int>> emitted;  // hash, out-index
    for (RawRep& r : next) {
      Matroid m = r.repr.to_matroid();
      if (!m.is_3connected()) {
        pool.push_back(std::move(r));
        continue;
      }
      // Constructive N-minor witness: contract/delete the added
      // elements (exact equality of labeled matroids).
      Matroid back = m.minor(r.added_contract, r.added_delete);
      if (back.reordered_by_labels() != n_matroid.reordered_by_labels())
        throw structural_error("construction witness failed to recover N");
      std::uint64_t h = iso_invariant_hash(m);
      bool dup = false;
      for (auto& [oh, oi] : emitted)
        if (oh == h && are_isomorphic(out[oi].matroid, m)) {
          dup = true;
          break;
        }
      if (!dup) {
        Candidate c;
        c.repr = r.repr;
        c.matroid = std::move(m);
        c.level = level;
        c.added_contract = r.added_contract;
        c.added_delete = r.added_delete;
        out.push_back(std::move(c));
        emitted.push_back({h, static_cast<int>(out.size()) - 1});
      }
      pool.push_back(std::move(r));
    }
    pool_level_start.push_back(static_cast<int>(pool.size()));
  }
  return out;
}

namespace {

// Fragility results memoized by isomorphism class; hash buckets are
// confirmed by a full isomorphism test, so a collision can never flip
// a verdict. Heredity: a child of a non-fragile minor is non-fragile.
struct MemberCache {
  std::map<std::uint64_t, std::vector<std::pair<Matroid, bool>>> buckets;

  const bool* lookup(const Matroid& m, std::uint64_t h) const {
    auto it = buckets.find(h);
    if (it == buckets.end()) return nullptr;
    for (const auto& [other, member] : it->second)
      if (are_isomorphic(m, other)) return &member;
    return nullptr;
  }
  void store(Matroid m, std::uint64_t h, bool member) {
    buckets[h].emplace_back(std::move(m), member);
  }
};

}  // namespace

CertResult certify(const CertTask& task) {
  const Matroid n_matroid = task.n.to_matroid();

  // Hypothesis gate.
  std::vector<Matroid> sample = {n_matroid};
  MinorSet s_or_empty = task.class_pred.s.value_or(MinorSet{});
  HypothesisReport rep = check_hypotheses(n_matroid, s_or_empty, sample);
  if (!rep.pass)
    throw input_error("theorem hypotheses fail:\n" + rep.text());
  for (const Fan& f : task.fans.fans)
    if (!is_fan(n_matroid, f.seq))
      throw input_error("target fan family contains a non-fan");
  if (!task.fans.pairwise_disjoint())
    throw input_error("target fans must be pairwise disjoint");
  if (task.class_pred.s && !has_S_minor(n_matroid, *task.class_pred.s))
    throw input_error("N itself has no S-minor; the class hypotheses are "
                      "vacuous");
  if (task.class_pred.field != task.n.field())
    throw input_error("class field disagrees with N's representation field");

  std::vector<Candidate> candidates = enumerate_candidates(task);

  CertResult result;
  result.examined_per_level.assign(task.depth + 1, 0);
  result.members_per_level.assign(task.depth + 1, 0);
  for (const Candidate& c : candidates)
    result.examined_per_level[c.level]++;

  // Class membership, with the heredity shortcut: if some single
  // removal of an added element lands on a known non-member minor, the
  // candidate is not a member either.
  MemberCache cache;
  auto membership = [&](const Candidate& c) -> bool {
    if (!task.class_pred.s) return true;
    Subset added = c.added_contract | c.added_delete;
    for (int e : set_elements(added)) {
      Matroid parent = contains(c.added_contract, e)
                           ? c.matroid.contraction(bit(e))
                           : c.matroid.deletion(bit(e));
      const bool* known = cache.lookup(parent, iso_invariant_hash(parent));
      if (known && !*known) return false;
    }
    std::uint64_t h = iso_invariant_hash(c.matroid);
    if (const bool* known = cache.lookup(c.matroid, h)) return *known;
    bool member = is_S_fragile(c.matroid, *task.class_pred.s).fragile;
    cache.store(c.matroid, h, member);
    return member;
  };

  // Evaluate in deterministic order; the least failing index wins.
  struct Eval {
    bool member = false;
    bool extension = true;
    std::uint64_t nodes = 0;
  };
  std::vector<Eval> evals(candidates.size());

  auto evaluate = [&](std::size_t i) {
    const Candidate& c = candidates[i];
    Eval ev;
    ev.member = membership(c);
    if (ev.member) {
      FanExtensionResult fer =
          is_fan_extension(c.matroid, n_matroid, task.fans, task.node_cap);
      ev.extension = fer.is_extension;
      ev.nodes = fer.nodes;
    }
    evals[i] = ev;
  };

  if (task.threads <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) evaluate(i);
  } else {
    // Membership caching is order-sensitive (heredity), so resolve
    // membership sequentially, then run the recognizer in parallel.
    for (std::size_t i = 0; i < candidates.size(); ++i)
      evals[i].member = membership(candidates[i]);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    int nthreads = std::min<int>(task.threads, 16);
    for (int t = 0; t < nthreads; ++t)
      workers.emplace_back([&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= candidates.size()) return;
          if (!evals[i].member) continue;
          FanExtensionResult fer = is_fan_extension(
              candidates[i].matroid, n_matroid, task.fans, task.node_cap);
          evals[i].extension = fer.is_extension;
          evals[i].nodes = fer.nodes;
        }
      });
    for (auto& w : workers) w.join();
  }

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!evals[i].member) continue;
    result.members_per_level[candidates[i].level]++;
    result.recognizer_nodes += evals[i].nodes;
    if (!evals[i].extension && result.verdict == CertResult::Verdict::certified) {
      result.verdict = CertResult::Verdict::counterexample;
      result.witness = candidates[i];
      result.witness_name = "counterexample_l" +
                            std::to_string(candidates[i].level) + "_i" +
                            std::to_string(i);
    }
  }
  return result;
}

bool verify_witness(const CertTask& task, const Candidate& witness) {
  // Rebuild everything from serialized text so no cached state leaks.
  MtxFile round = parse_mtx(write_mtx("witness", witness.repr));
  Matroid m = round.matroid;
  Matroid n = parse_mtx(write_mtx("target", task.n)).matroid;
  if (!task.class_pred.member(m)) return false;
  if (!m.is_3connected()) return false;
  if (!has_minor(m, n)) return false;
  FanExtensionResult fer = is_fan_extension(m, n, task.fans, task.node_cap);
  return !fer.is_extension;
}

std::string CertResult::to_text(const CertTask& task) const {
  std::ostringstream os;
  os << "verdict: "
     << (verdict == Verdict::certified ? "certified" : "counterexample")
     << "\n";
  for (std::size_t l = 0; l < examined_per_level.size(); ++l)
    os << "level " << l << ": examined " << examined_per_level[l]
       << " members " << members_per_level[l] << "\n";
  os << "recognizer-nodes: " << recognizer_nodes << "\n";
  os << "depth: " << task.depth << "\n";
  if (witness) {
    os << "witness:\n";
    os << write_mtx(witness_name, witness->repr);
    for (const auto& line : failure_note) os << "# " << line << "\n";
  }
  return os.str();
}

}  // namespace fanforge
