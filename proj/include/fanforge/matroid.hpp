#ifndef FANFORGE_MATROID_HPP
#define FANFORGE_MATROID_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fanforge/common.hpp"

namespace fanforge {

/// A matroid stored by its basis family over an indexed, ordered ground
/// set. All structural queries (rank, closure, connectivity, minors)
/// derive from the bases. Values are immutable after construction and
/// safe to share between threads; the rank table is a lazily built,
/// internally synchronized cache.
class Matroid {
 public:
  /// The empty matroid (no elements, one empty basis).
  Matroid() : Matroid({}, {Subset{0}}) {}

  /// Builds a matroid and verifies the basis axioms (nonempty family,
  /// equal sizes, exchange property). Throws input_error on bad labels
  /// and structural_error when the axioms fail.
  static Matroid from_bases(std::vector<std::string> labels,
                            std::vector<Subset> bases);

  /// Same, but skips the axiom check. For internal construction paths
  /// (duals, minors, gluings) whose outputs are matroids by closure
  /// properties; the property suite re-validates samples of these.
  static Matroid trusted(std::vector<std::string> labels,
                         std::vector<Subset> bases);

  int size() const { return static_cast<int>(labels_.size()); }
  int rank() const { return rank_; }
  int corank() const { return size() - rank_; }
  Subset full_set() const {
    return size() == 0 ? 0 : (size() == 32 ? ~Subset{0} : (bit(size()) - 1));
  }
  const std::vector<Subset>& bases() const { return bases_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  /// Index of a label; input_error if unknown.
  int index(const std::string& label) const;
  bool has_label(const std::string& label) const;
  Subset subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> label_set(Subset s) const;

  // Rank calculus. All take index-space subsets of the ground set.
  int rank_of(Subset x) const;
  int corank_of(Subset x) const;  // r*(X) = |X| + r(E-X) - r(E)
  bool independent(Subset x) const { return rank_of(x) == popcount(x); }
  bool coindependent(Subset x) const { return corank_of(x) == popcount(x); }
  bool is_basis(Subset x) const;
  Subset closure_of(Subset x) const;
  Subset coclosure_of(Subset x) const;
  bool is_flat(Subset x) const { return closure_of(x) == x; }
  int lambda_of(Subset x) const;
  /// pi(X, Y) = r(X) + r(Y) - r(X u Y) for disjoint X, Y.
  int pi_of(Subset x, Subset y) const;

  bool is_loop(int e) const { return rank_of(bit(e)) == 0; }
  bool is_coloop(int e) const { return corank_of(bit(e)) == 0; }
  Subset loops() const;
  Subset coloops() const;

  // Circuit structure.
  bool is_circuit(Subset x) const;
  bool is_cocircuit(Subset x) const;
  bool is_triangle(Subset x) const;
  bool is_triad(Subset x) const;
  std::vector<Subset> triangles() const;
  std::vector<Subset> triads() const;
  /// All circuits, ordered by (size, mask). Exponential in size();
  /// intended for small instances and test oracles.
  std::vector<Subset> circuits() const;

  // Minors and duality. Labels of surviving elements are preserved.
  Matroid dual() const;
  Matroid deletion(Subset x) const;
  Matroid contraction(Subset x) const;
  /// contraction(c) followed by deletion(d); c and d must be disjoint.
  Matroid minor(Subset c, Subset d) const;
  /// New matroid with permuted labels; perm[i] is the new label of
  /// element i. Ground-set order and bases are unchanged.
  Matroid relabeled(const std::vector<std::string>& new_labels) const;
  /// Same matroid with the ground set reordered so labels ascend;
  /// two matroids on the same label set are equal as labeled matroids
  /// iff their reorderings compare equal.
  Matroid reordered_by_labels() const;

  // Connectivity.
  bool connected() const;
  bool is_3connected() const;
  bool is_3connected_up_to_sp() const;

  /// Parallel classes of non-loop elements, each sorted, emitted in
  /// order of least member. Requires a connected matroid.
  std::vector<Subset> parallel_classes() const;
  std::vector<Subset> series_classes() const;

  Matroid simplify() const;
  Matroid cosimplify() const;

  bool operator==(const Matroid& o) const {
    return labels_ == o.labels_ && bases_ == o.bases_;
  }
  bool operator!=(const Matroid& o) const { return !(*this == o); }

  /// Content hash over labels and bases; stable across runs.
  std::uint64_t content_hash() const;
  /// Hash of the basis family only (label-independent w.r.t. names but
  /// not order); used for memo keys where the ground set is fixed.
  std::uint64_t bases_hash() const;

  /// Re-checks the basis axioms; throws structural_error on failure.
  void validate() const;

 private:
  Matroid(std::vector<std::string> labels, std::vector<Subset> bases);

  struct Cache {
    std::once_flag once;
    std::vector<std::uint8_t> rank_table;  // 2^n entries
  };
  const std::vector<std::uint8_t>& rank_table() const;

  std::vector<std::string> labels_;
  std::vector<Subset> bases_;  // sorted, deduped
  int rank_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// Uniform matroid U_{r,n} with labels e1..en (or the given labels).
Matroid uniform_matroid(int r, int n);
Matroid uniform_matroid(int r, std::vector<std::string> labels);

}  // namespace fanforge

#endif  // FANFORGE_MATROID_HPP
