#ifndef FANFORGE_REPR_HPP
#define FANFORGE_REPR_HPP

#include <optional>
#include <string>
#include <vector>

#include "fanforge/gf.hpp"
#include "fanforge/matroid.hpp"

namespace fanforge {

/// A matroid represented by labeled columns over GF(p). The ambient
/// height (number of rows) may exceed the matroid rank.
class ReprMatroid {
 public:
  /// Empty representation over GF(2).
  ReprMatroid() : field_(2), rows_(0) {}

  ReprMatroid(PrimeField field, int rows, std::vector<std::string> labels,
              std::vector<Vec> columns);

  const PrimeField& field() const { return field_; }
  int rows() const { return rows_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index(const std::string& label) const;
  const Vec& column(int i) const { return columns_[i]; }
  const std::vector<Vec>& columns() const { return columns_; }

  int rank_of(Subset x) const;
  int rank() const { return rank_of(full_set()); }
  Subset full_set() const {
    return size() == 0 ? 0 : (bit(size()) - 1);
  }

  /// The abstract column matroid (independence = linear independence).
  Matroid to_matroid() const;

  ReprMatroid deletion(Subset x) const;
  /// Contraction by an independent set, via projection onto a
  /// complement of its span.
  ReprMatroid contraction(Subset x) const;
  /// Representation of the dual matroid on the same labels.
  ReprMatroid dual() const;
  ReprMatroid relabeled(const std::vector<std::string>& new_labels) const;

  /// Canonical bytes: RREF of the matrix with columns in label order.
  /// Over GF(2) two representations of the same labeled matroid always
  /// agree on this; over larger fields it separates representations.
  std::string rref_signature() const;

  /// One single-element extension per projective point of the ambient
  /// row space, in lexicographic digit order. Fresh labels from the
  /// reserved namespace _x1, _x2, ...
  std::vector<ReprMatroid> extensions() const;
  /// Single-element coextensions via the dual representation.
  std::vector<ReprMatroid> coextensions() const;

  /// Label used by the most recent extension step, if any.
  const std::string& last_added() const { return last_added_; }

 private:
  std::string fresh_label() const;

  PrimeField field_;
  int rows_;
  std::vector<std::string> labels_;
  std::vector<Vec> columns_;
  std::string last_added_;
};

/// Multigraph with labeled edges; vertices are 0..n-1.
struct Graph {
  int vertices = 0;
  struct Edge {
    int u, v;
    std::string label;
  };
  std::vector<Edge> edges;

  bool connected() const;
};

/// Distinguished-vertex-set companion of a graph.
struct Graft {
  Graph graph;
  std::vector<int> gamma;
  std::string gamma_label = "g";
};

/// Cycle matroid of a connected graph as a GF(p) representation
/// (signed incidence columns with one vertex row dropped; over GF(2)
/// the signs vanish). Throws structural_error if disconnected.
ReprMatroid graphic_matroid(const Graph& g, int p = 2);

/// Binary graft matroid: incidence columns plus the characteristic
/// column of gamma, row-reduced to full row rank.
ReprMatroid graft_matroid(const Graft& g);

}  // namespace fanforge

#endif  // FANFORGE_REPR_HPP
