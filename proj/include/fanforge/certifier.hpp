#ifndef FANFORGE_CERTIFIER_HPP
#define FANFORGE_CERTIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanforge/fan.hpp"
#include "fanforge/fan_extension.hpp"
#include "fanforge/fragility.hpp"
#include "fanforge/matroid.hpp"
#include "fanforge/repr.hpp"

namespace fanforge {

/// A finite case-check task: verify that every class member with an
/// N-minor and at most `depth` extra elements is a fan-extension of N
/// relative to `fans`.
struct CertTask {
  ReprMatroid n;
  FanFamily fans;             // fans of n's matroid
  ClassPredicate class_pred;  // field + optional fragility filter
  int depth = 2;
  std::uint64_t candidate_cap = 200000;   // raw representation budget
  std::uint64_t node_cap = 50'000'000;    // recognizer search budget
  int threads = 1;
};

/// One enumerated candidate: a representation reachable from N by at
/// most `depth` single-element extension/coextension steps, filtered
/// to 3-connected matroids with an N-minor, deduplicated by
/// isomorphism.
struct Candidate {
  ReprMatroid repr;
  Matroid matroid;
  int level = 0;
  Subset added_contract = 0;  // construction witness: contract these
  Subset added_delete = 0;    // and delete these to recover N
  bool parent_known_nonmember = false;  // heredity: some minor is not fragile
};

/// All candidates in deterministic order (level, then extensions
/// before coextensions, then lexicographic column order). Throws
/// resource_limit_error when the raw budget is exceeded.
std::vector<Candidate> enumerate_candidates(const CertTask& task);

struct CertResult {
  enum class Verdict { certified, counterexample };
  Verdict verdict = Verdict::certified;
  std::vector<std::size_t> examined_per_level;  // iso classes per level
  std::vector<std::size_t> members_per_level;   // class members per level
  std::uint64_t recognizer_nodes = 0;

  // Counterexample payload.
  std::optional<Candidate> witness;
  std::string witness_name;
  std::vector<std::string> failure_note;  // verification summary lines

  /// Machine-readable result body (also embeds the witness in .mtx
  /// form when present).
  std::string to_text(const CertTask& task) const;
};

/// Runs the case check. Throws input_error when the theorem
/// hypotheses fail (with the report text), resource_limit_error when a
/// cap is breached. A "certified" verdict means every enumerated class
/// member passed the fan-extension recognizer.
CertResult certify(const CertTask& task);

/// Re-checks a counterexample from scratch (fresh objects, no caches):
/// class membership, 3-connectivity, N-minor, and recognizer failure.
bool verify_witness(const CertTask& task, const Candidate& witness);

}  // namespace fanforge

#endif  // FANFORGE_CERTIFIER_HPP
