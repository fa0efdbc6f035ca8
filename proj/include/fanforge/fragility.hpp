#ifndef FANFORGE_FRAGILITY_HPP
#define FANFORGE_FRAGILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fanforge/gf.hpp"
#include "fanforge/matroid.hpp"

namespace fanforge {

/// The set S of target minors.
struct MinorSet {
  std::vector<Matroid> members;

  /// Checks the theorem-hypothesis shape: every member 3-connected
  /// with at least four elements, and no member a wheel or whirl.
  /// Returns a human-readable complaint or nullopt when fine.
  std::optional<std::string> hypothesis_violation() const;
};

bool has_S_minor(const Matroid& m, const MinorSet& s);

struct FragilityVerdict {
  struct PerElement {
    std::string label;
    bool delete_keeps = false;    // M\e retains an S-minor
    bool contract_keeps = false;  // M/e retains an S-minor
  };
  std::vector<PerElement> elements;
  bool fragile = false;

  std::string report() const;  // "e: del=... con=..." lines + summary
};

/// S-fragility with per-element verdicts: fragile iff no element keeps
/// an S-minor under both deletion and contraction.
FragilityVerdict is_S_fragile(const Matroid& m, const MinorSet& s);

/// Class predicate: representable over the field by construction,
/// S-fragile by test. `none` disables the fragility filter (the class
/// is every matroid representable over the field).
struct ClassPredicate {
  PrimeField field;
  std::optional<MinorSet> s;  // nullopt = no fragility filtering

  bool member(const Matroid& m) const;
};

struct HypothesisReport {
  bool pass = false;
  std::vector<std::string> lines;

  std::string text() const;
};

/// Verifies the main-theorem hypotheses on N and S, and spot-checks
/// the supplied class members: each fragile member with an S-minor
/// must be 3-connected up to series and parallel sets.
HypothesisReport check_hypotheses(const Matroid& n, const MinorSet& s,
                                  const std::vector<Matroid>& sample_class);

}  // namespace fanforge

#endif  // FANFORGE_FRAGILITY_HPP
