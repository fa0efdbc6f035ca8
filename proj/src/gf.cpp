#include "fanforge/gf.hpp"

#include <algorithm>

namespace fanforge {

PrimeField::PrimeField(int p) : p_(p) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw input_error("unsupported field GF(" + std::to_string(p) + ")");
}

std::uint8_t PrimeField::inv(std::uint8_t a) const {
  if (a % p_ == 0) throw input_error("division by zero in GF(p)");
  for (int x = 1; x < p_; ++x)
    if ((a * x) % p_ == 1) return static_cast<std::uint8_t>(x);
  throw input_error("no inverse");  // unreachable for prime p
}

int rref(const PrimeField& f, std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  const int ncols = static_cast<int>(rows[0].size());
  int pivot_row = 0;
  for (int col = 0; col < ncols && pivot_row < static_cast<int>(rows.size());
       ++col) {
    int sel = -1;
    for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] % f.p() != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[pivot_row], rows[sel]);
    std::uint8_t scale = f.inv(rows[pivot_row][col]);
    for (int c = 0; c < ncols; ++c)
      rows[pivot_row][c] = f.mul(rows[pivot_row][c], scale);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == pivot_row) continue;
      std::uint8_t factor = rows[r][col] % f.p();
      if (factor == 0) continue;
      for (int c = 0; c < ncols; ++c)
        rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[pivot_row][c]));
    }
    ++pivot_row;
  }
  return pivot_row;
}

int column_rank(const PrimeField& f, const std::vector<Vec>& cols) {
  if (cols.empty()) return 0;
  const int h = static_cast<int>(cols[0].size());
  std::vector<Vec> rows(h, Vec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < h; ++i) rows[i][j] = cols[j][i];
  return rref(f, rows);
}

std::vector<Vec> nullspace(const PrimeField& f, const std::vector<Vec>& cols,
                           int rows_n) {
  const int n = static_cast<int>(cols.size());
  std::vector<Vec> rows(rows_n, Vec(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < rows_n; ++i) rows[i][j] = cols[j][i];
  int rank = rref(f, rows);
  // Identify pivot columns.
  std::vector<int> pivot_of_row(rank, -1);
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < n; ++c)
      if (rows[r][c] % f.p() != 0) {
        pivot_of_row[r] = c;
        is_pivot[c] = true;
        break;
      }
  }
  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_of_row[r]] = f.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec projective_normalize(const PrimeField& f, Vec v) {
  for (std::uint8_t d : v) {
    if (d % f.p() != 0) {
      std::uint8_t scale = f.inv(d);
      for (auto& x : v) x = f.mul(x, scale);
      return v;
    }
  }
  return v;
}

std::vector<Vec> projective_points(const PrimeField& f, int r) {
  std::vector<Vec> out;
  Vec v(r, 0);
  // Odometer over all p^r vectors, little-endian.
  while (true) {
    int i = 0;
    while (i < r && v[i] == f.p() - 1) {
      v[i] = 0;
      ++i;
    }
    if (i == r) break;
    ++v[i];
    Vec norm = projective_normalize(f, v);
    if (norm == v) out.push_back(v);
  }
  return out;
}

}  // namespace fanforge
