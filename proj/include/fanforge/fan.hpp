#ifndef FANFORGE_FAN_HPP
#define FANFORGE_FAN_HPP

#include <optional>
#include <vector>

#include "fanforge/matroid.hpp"

namespace fanforge {

/// An ordered fan in a host matroid: consecutive triples alternate
/// between triangles and triads. Stored canonically with the smaller
/// endpoint index first; `starts_with_triangle` records the parity of
/// the first window.
struct Fan {
  std::vector<int> seq;
  bool starts_with_triangle = true;

  int length() const { return static_cast<int>(seq.size()); }
  Subset element_set() const { return subset_from(seq); }
  Fan reversed() const;
  /// Reverses if needed so that seq.front() < seq.back().
  Fan canonical() const;
  bool operator==(const Fan& o) const { return seq == o.seq; }
};

enum class FanRole { spoke, rim };

struct FanClassification {
  std::vector<FanRole> roles;      // per position
  std::vector<bool> terminal;     // positions 1 and n
};

/// Checks Definition-style windows and returns the fan, trying the
/// triangle-start parity first. Elements must be distinct and in M.
std::optional<Fan> is_fan(const Matroid& m, const std::vector<int>& seq);

/// Label-based convenience.
std::optional<Fan> is_fan(const Matroid& m,
                          const std::vector<std::string>& labels);

/// Spoke/rim and terminal/internal labels. Requires an unambiguous
/// host: 3-connected, at least 4 elements, not a wheel or whirl, and
/// no window that is both a triangle and a triad. Throws
/// structural_error otherwise.
FanClassification classify(const Matroid& m, const Fan& f);

/// Roles without the host checks; parity comes from the stored window
/// type. For internal callers that have already established the host
/// is unambiguous.
std::vector<FanRole> fan_roles(const Fan& f);

struct EnumeratedFan {
  Fan fan;
  bool maximal = false;
};

/// All fans of length >= min_len, one per reversal pair, ordered
/// lexicographically by sequence. The maximal flag marks fans whose
/// element set is contained in no other fan's element set.
std::vector<EnumeratedFan> enumerate_fans(const Matroid& m, int min_len);

// Sequence relations (index- or label-space agnostic: plain vectors).
// All are invariant under reversing the second argument.
bool is_subsequence(const std::vector<int>& a, const std::vector<int>& b);
/// a is a subsequence of b or of reversed b.
bool is_consistent(const std::vector<int>& a, const std::vector<int>& b);
/// a or reversed a equals a contiguous block of b.
bool is_enclosed(const std::vector<int>& a, const std::vector<int>& b);
/// a equals a contiguous block of b or of reversed b (the same
/// relation as enclosure, stated from the other side).
bool is_contiguous(const std::vector<int>& a, const std::vector<int>& b);

/// Pairwise-disjoint family of fans over one host.
struct FanFamily {
  std::vector<Fan> fans;
  bool pairwise_disjoint() const;
};

}  // namespace fanforge

#endif  // FANFORGE_FAN_HPP
