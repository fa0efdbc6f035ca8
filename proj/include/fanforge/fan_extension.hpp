#ifndef FANFORGE_FAN_EXTENSION_HPP
#define FANFORGE_FAN_EXTENSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanforge/fan.hpp"
#include "fanforge/matroid.hpp"
#include "fanforge/minors.hpp"

namespace fanforge {

/// A fixed embedding of the target N inside a host: the image of E(N)
/// and the target fans mapped into host indices.
struct EmbeddedTarget {
  Subset image = 0;
  std::vector<std::vector<int>> fans;
};

/// A covering family: pairwise disjoint fans of the host, as many as
/// there are target fans, each target fan consistent with a member,
/// and every element outside the embedded target covered.
struct CoveringFamily {
  std::vector<Fan> fans;
};

/// All covering families in deterministic (lexicographic) order, up to
/// per-fan reversal.
std::vector<CoveringFamily> covering_families(const Matroid& m,
                                              const EmbeddedTarget& target);

bool has_covering_family(const Matroid& m, const EmbeddedTarget& target);

/// First covering family containing `forced` as a member, if any.
std::optional<CoveringFamily> covering_family_containing(
    const Matroid& m, const EmbeddedTarget& target, const Fan& forced);

enum class MoveKind { terminal_spoke, terminal_rim, internal_pair };

const char* move_kind_name(MoveKind k);

/// One inverse fan-lengthening move applied to (M, F).
struct Shortening {
  Matroid smaller;
  Fan fan_after;  // F' in the smaller matroid's index space
  MoveKind kind;
  std::vector<std::string> removed_labels;
};

/// Every legal inverse move on fan `f` of 3-connected `m` whose result
/// retains `n` as a minor: terminal spoke deletion, terminal rim
/// contraction (|F| >= 4), and internal rim+spoke pair removal
/// (|F| >= 5), each requiring the result to be 3-connected.
std::vector<Shortening> shortenings(const Matroid& m, const Fan& f,
                                    const Matroid& n);

/// One forward fan-lengthening move in a reconstruction trace.
struct Move {
  MoveKind kind;
  std::vector<std::string> added_labels;
  int fan_index = 0;                    // index in the covering family
  std::vector<std::string> fan_after;   // the lengthened fan, as labels
};

struct FanExtensionResult {
  bool is_extension = false;
  std::optional<MinorWitness> witness;
  std::vector<Move> trace;  // moves from N up to M, in order
  std::uint64_t nodes = 0;  // backward-search states visited
};

/// Decides whether M is (isomorphic to) a fan-extension of N relative
/// to f_n, by backward search over fan-shortening moves across every
/// minor witness. Throws input_error when the theorem hypotheses on N
/// fail (|E(N)| < 4, not 3-connected, wheel or whirl), and
/// resource_limit_error when node_cap is exceeded.
FanExtensionResult is_fan_extension(const Matroid& m, const Matroid& n,
                                    const FanFamily& f_n,
                                    std::uint64_t node_cap = 50'000'000);

/// Sound shortcut from the partial converse: when the stronger
/// hypotheses hold (no fan of N contains two target fans; every minor
/// of M with an N-minor is 3-connected up to series and parallel sets,
/// either verified exhaustively here or vouched for by the caller) and
/// M has a covering family, M is a fan-extension. Returns true in that
/// case and nullopt otherwise (never false).
std::optional<bool> court_fast_path(const Matroid& m, const Matroid& n,
                                    const FanFamily& f_n,
                                    bool class_hereditary_guarantee = false);

/// Formats a trace line: "lengthen <kind> <labels> at <fan-index>".
std::string format_move(const Move& mv);

}  // namespace fanforge

#endif  // FANFORGE_FAN_EXTENSION_HPP
