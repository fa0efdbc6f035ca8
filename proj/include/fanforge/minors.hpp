#ifndef FANFORGE_MINORS_HPP
#define FANFORGE_MINORS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fanforge/matroid.hpp"

namespace fanforge {

/// Certificate that N is a minor of M: M / contract \ remove, with the
/// elements of N mapped onto the survivors. map[i] is the M-index of
/// the image of N's element i.
struct MinorWitness {
  Subset contract = 0;
  Subset remove = 0;
  std::vector<int> map;
};

/// Exhaustive search for an N-minor of M. Deterministic: contract sets
/// ascend lexicographically (as masks), then delete sets, then the
/// embedded isomorphism. Contract sets are independent and delete sets
/// coindependent in the contraction, which loses no minors.
std::optional<MinorWitness> find_minor(const Matroid& m, const Matroid& n);

bool has_minor(const Matroid& m, const Matroid& n);

/// Enumerates every witness (all contract/delete splits, all embedding
/// isomorphisms) in deterministic order; stops when `cb` returns false.
void for_each_minor_witness(const Matroid& m, const Matroid& n,
                            const std::function<bool(const MinorWitness&)>& cb);

}  // namespace fanforge

#endif  // FANFORGE_MINORS_HPP
