#ifndef FANFORGE_ISOMORPHISM_HPP
#define FANFORGE_ISOMORPHISM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fanforge/matroid.hpp"

namespace fanforge {

/// Backtracking isomorphism test with invariant pruning. Returns a map
/// `phi` with phi[i] = index in `b` of the image of element i of `a`,
/// or nullopt. The returned bijection is the lexicographically least
/// one (in the image sequence) and is independent of label names.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a,
                                                 const Matroid& b);

bool are_isomorphic(const Matroid& a, const Matroid& b);

/// Calls `cb` for every isomorphism from `a` to `b` in lexicographic
/// order of the image sequence; stops early when `cb` returns false.
void for_each_isomorphism(const Matroid& a, const Matroid& b,
                          const std::function<bool(const std::vector<int>&)>& cb);

/// Isomorphism-invariant fingerprint: equal for isomorphic matroids,
/// and a strong separator in practice. Stable across runs.
std::uint64_t iso_invariant_hash(const Matroid& m);

}  // namespace fanforge

#endif  // FANFORGE_ISOMORPHISM_HPP
