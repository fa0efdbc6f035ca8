#include "doctest.h"
#include "fanforge/catalog.hpp"
#include "fanforge/certifier.hpp"
#include "fanforge/isomorphism.hpp"
#include "fanforge/minors.hpp"
#include "fanforge/wheel_glue.hpp"
#include "support/oracles.hpp"

using namespace fanforge;

namespace {

// Seed: rank-3 wheel glued to the Fano plane, one 4-element fan.
CertTask seed_task() {
  Blueprint bp;
  bp.base_repr = catalog_get("F7").repr;
  bp.attachments.push_back({{"e2", "e3", "e1"}, 3});
  bp.remove = {"e3", "e1"};
  GlueResult g = glue_wheels(bp);
  CertTask task{g.repr.value(),
                g.canonical_fans,
                ClassPredicate{PrimeField(2), std::nullopt},
                2};
  return task;
}

}  // namespace

TEST_CASE("candidate enumeration") {
  CertTask task = seed_task();

  // Depth 0: N alone.
  CertTask d0 = task;
  d0.depth = 0;
  auto only_n = enumerate_candidates(d0);
  REQUIRE(only_n.size() == 1);
  CHECK(only_n[0].matroid == task.n.to_matroid());

  // Every emitted candidate is 3-connected, has an N-minor via its
  // construction witness, and classes are pairwise non-isomorphic per
  // level.
  CertTask d1 = task;
  d1.depth = 1;
  auto lvl1 = enumerate_candidates(d1);
  Matroid n = task.n.to_matroid();
  for (std::size_t i = 1; i < lvl1.size(); ++i) {
    const Candidate& c = lvl1[i];
    CHECK(c.matroid.is_3connected());
    Matroid back = c.matroid.minor(c.added_contract, c.added_delete);
    CHECK(back.reordered_by_labels() == n.reordered_by_labels());
    for (std::size_t j = 1; j < i; ++j)
      if (lvl1[j].level == c.level)
        CHECK(!are_isomorphic(lvl1[j].matroid, c.matroid));
  }

  // U(2,4) over GF(3) at depth 1: the projective line over GF(3) is
  // already full, so every extension adds a parallel element and every
  // coextension a series element; no new 3-connected candidate
  // survives the filter.
  CatalogEntry u24 = catalog_get("U24");
  CertTask small{u24.repr.value(), FanFamily{},
                 ClassPredicate{PrimeField(3), std::nullopt}, 1};
  auto cands = enumerate_candidates(small);
  for (const Candidate& c : cands) {
    CHECK(has_minor(c.matroid, u24.matroid));
    CHECK(c.matroid.is_3connected());
  }
  CHECK(cands.size() == 1);
  // Over GF(5) the line has room: new 3-connected extensions exist.
  ReprMatroid u24_gf5(PrimeField(5), 2, {"e1", "e2", "e3", "e4"},
                      {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CertTask roomy{u24_gf5, FanFamily{},
                 ClassPredicate{PrimeField(5), std::nullopt}, 1};
  CHECK(enumerate_candidates(roomy).size() > 1);

  // The cap aborts loudly.
  CertTask capped = task;
  capped.candidate_cap = 3;
  CHECK_THROWS_AS(enumerate_candidates(capped), resource_limit_error);
}

TEST_CASE("completeness against basis-level extension oracle") {
  // Over GF(2), depth-1 enumeration reaches every binary
  // single-element extension class that is 3-connected with an
  // N-minor. Oracle side: linear subclasses. Seed small: M(K4) is a
  // wheel, so use the Fano plane with no fans.
  CatalogEntry f7 = catalog_get("F7");
  CertTask task{f7.repr.value(), FanFamily{},
                ClassPredicate{PrimeField(2), std::nullopt}, 1};
  auto cands = enumerate_candidates(task);

  std::vector<Matroid> expect;
  auto add_if_relevant = [&](Matroid m) {
    if (!m.is_3connected()) return;
    if (!oracle::has_minor_unpruned(m, f7.matroid)) return;
    for (const Matroid& o : expect)
      if (are_isomorphic(m, o)) return;
    expect.push_back(std::move(m));
  };
  for (Matroid& m : oracle::extensions_by_linear_subclass(f7.matroid, "z")) {
    if (m.is_loop(m.index("z"))) continue;
    if (!oracle::representable_over(m, 2)) continue;
    add_if_relevant(std::move(m));
  }
  // Coextension side, through the dual: a coextension of F7 is the
  // dual of an extension of F7*, and binary representability is
  // dual-invariant, so the filter runs on the rank-4 side.
  for (Matroid& md : oracle::extensions_by_linear_subclass(
           f7.matroid.dual(), "z")) {
    if (md.is_loop(md.index("z"))) continue;
    if (!oracle::representable_over(md, 2)) continue;
    add_if_relevant(md.dual());
  }

  std::vector<const Matroid*> lvl1;
  for (const Candidate& c : cands)
    if (c.level == 1) lvl1.push_back(&c.matroid);
  CHECK(lvl1.size() == expect.size());
  for (const Matroid* m : lvl1) {
    bool found = false;
    for (const Matroid& o : expect)
      if (are_isomorphic(*m, o)) found = true;
    CHECK(found);
  }
}

TEST_CASE("certify without a class filter finds a counterexample") {
  CertTask task = seed_task();
  CertResult res = certify(task);
  REQUIRE(res.verdict == CertResult::Verdict::counterexample);
  REQUIRE(res.witness.has_value());
  CHECK(verify_witness(task, *res.witness));

  // Tampering with the witness breaks verification: drop an element.
  Candidate tampered = *res.witness;
  int last = tampered.repr.size() - 1;
  tampered.repr = tampered.repr.deletion(bit(last));
  tampered.matroid = tampered.repr.to_matroid();
  tampered.added_contract &= ~bit(last);
  tampered.added_delete &= ~bit(last);
  CHECK(!verify_witness(task, tampered));

  // Witness verification survives a relabeling.
  Candidate relab = *res.witness;
  std::vector<std::string> names;
  for (int i = 0; i < relab.repr.size(); ++i)
    names.push_back("r" + std::to_string(i));
  relab.repr = relab.repr.relabeled(names);
  relab.matroid = relab.repr.to_matroid();
  CHECK(verify_witness(task, relab));
}

TEST_CASE("certify agreement at depth 0 and monotone consistency") {
  CertTask task = seed_task();
  task.depth = 0;
  CertResult res = certify(task);
  CHECK(res.verdict == CertResult::Verdict::certified);
  CHECK(res.examined_per_level[0] == 1);
}

TEST_CASE("certify refuses bad hypotheses") {
  CatalogEntry w3 = catalog_get("wheel3");
  CertTask task{w3.repr.value(), FanFamily{},
                ClassPredicate{PrimeField(2), std::nullopt}, 1};
  CHECK_THROWS_AS(certify(task), input_error);
}

TEST_CASE("result text roundtrips the witness") {
  CertTask task = seed_task();
  CertResult res = certify(task);
  REQUIRE(res.witness.has_value());
  std::string text = res.to_text(task);
  CHECK(text.find("verdict: counterexample") != std::string::npos);
  CHECK(text.find("matroid counterexample") != std::string::npos);
  CHECK(text.find("repr GF(2)") != std::string::npos);
}
