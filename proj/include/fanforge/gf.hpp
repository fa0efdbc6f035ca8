#ifndef FANFORGE_GF_HPP
#define FANFORGE_GF_HPP

#include <cstdint>
#include <vector>

#include "fanforge/common.hpp"

namespace fanforge {

/// Arithmetic in GF(p) for p in {2, 3, 5, 7}.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + b) % p_);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + p_ - b) % p_);
  }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a * b) % p_);
  }
  std::uint8_t neg(std::uint8_t a) const {
    return static_cast<std::uint8_t>((p_ - a) % p_);
  }
  std::uint8_t inv(std::uint8_t a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  int p_;
};

using Vec = std::vector<std::uint8_t>;

/// In-place reduced row echelon form; returns the rank. Rows are dense
/// GF(p) vectors of equal length.
int rref(const PrimeField& f, std::vector<Vec>& rows);

/// Rank of a set of column vectors.
int column_rank(const PrimeField& f, const std::vector<Vec>& cols);

/// Basis of the nullspace of the matrix whose columns are `cols`
/// (each of height `rows`); solutions x with sum x_j cols_j = 0.
std::vector<Vec> nullspace(const PrimeField& f, const std::vector<Vec>& cols,
                           int rows);

/// Canonical projective representative: scales v so its first nonzero
/// entry is 1. Zero vectors are returned unchanged.
Vec projective_normalize(const PrimeField& f, Vec v);

/// All projective points of GF(p)^r in lexicographic digit order
/// (little-endian: index 0 varies fastest).
std::vector<Vec> projective_points(const PrimeField& f, int r);

}  // namespace fanforge

#endif  // FANFORGE_GF_HPP
