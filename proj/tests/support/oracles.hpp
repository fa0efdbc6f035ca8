#ifndef FANFORGE_TEST_ORACLES_HPP
#define FANFORGE_TEST_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fanforge/matroid.hpp"
#include "fanforge/repr.hpp"

// Independent reference implementations used to freeze expected values.
// Everything here is deliberately brute force and shares no code with
// the library paths it checks.
namespace fanforge::oracle {

/// Rank of a set of GF(p) column vectors by exhaustive search for a
/// vanishing linear combination (no Gaussian elimination).
int matrix_rank(int p, const std::vector<Vec>& cols);

/// Rank of X from the basis family by direct maximization.
int rank_from_bases(const std::vector<Subset>& bases, Subset x);

/// Brute-force isomorphism over all label permutations.
bool isomorphic(const Matroid& a, const Matroid& b);

/// Minor containment by enumerating every disjoint (contract, delete)
/// pair of the right sizes, without independence or invariant pruning.
bool has_minor_unpruned(const Matroid& m, const Matroid& n);

/// All single-element rank-preserving extensions of `m` by a fresh
/// element, enumerated via linear subclasses of hyperplanes and
/// validated against the basis axioms. Returns one matroid per
/// extension; the new element is labeled `label`.
std::vector<Matroid> extensions_by_linear_subclass(const Matroid& m,
                                                   const std::string& label);

/// True if the matroid admits a GF(p)-representation; decided by
/// backtracking assignment of projective points to elements.
bool representable_over(const Matroid& m, int p);

}  // namespace fanforge::oracle

#include "fanforge/fan.hpp"

namespace fanforge::oracle {

/// Exhaustive forward generation of fan-extensions of `n` relative to
/// `f_n` with at most `max_added` added elements, by applying every
/// legal fan-lengthening move (terminal spoke = representation-level
/// extension, terminal rim = coextension, internal pair = coextension
/// then extension) to every fan that lies in a covering family.
/// Complete over GF(2). Returns one matroid per isomorphism class,
/// including `n` itself.
std::vector<Matroid> forward_fan_extensions(const ReprMatroid& n,
                                            const FanFamily& f_n,
                                            int max_added);

/// Membership in an isomorphism-class list.
bool in_class_list(const Matroid& m, const std::vector<Matroid>& list);

}  // namespace fanforge::oracle

#endif  // FANFORGE_TEST_ORACLES_HPP
