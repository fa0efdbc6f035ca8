#ifndef FANFORGE_WHEEL_GLUE_HPP
#define FANFORGE_WHEEL_GLUE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fanforge/fan.hpp"
#include "fanforge/matroid.hpp"
#include "fanforge/minors.hpp"
#include "fanforge/repr.hpp"

namespace fanforge {

/// Rank-r wheel as a matroid, labels x1..xr (spokes) and y1..yr (rim).
/// (x1, y1, x2, y2, ..., xr, yr) is a fan with x1 a spoke element and
/// {x1, yr, xr} a triangle.
Matroid wheel_matroid(int r);
/// The same ground set with the rim circuit relaxed to a basis.
Matroid whirl_matroid(int r);
/// Wheel represented over GF(p) with the same labels.
ReprMatroid wheel_repr(int r, int p = 2);

bool is_wheel_or_whirl(const Matroid& m);

/// pi(X, Y) = r(X) + r(Y) - r(X u Y) for disjoint X, Y.
int pi(const Matroid& m, Subset x, Subset y);

/// True when `flat` is a modular flat of m: a flat whose rank pairs
/// modularly with every flat.
bool is_modular_flat(const Matroid& m, Subset flat);

/// Generalized parallel connection across T (a common label set).
/// Requires E(M1) n E(M2) = T, M1|T = M2|T, and T a modular flat of
/// M2. Computed from the flats law directly; the ground set is E(M1)
/// followed by E(M2)-T.
Matroid gpc(const Matroid& m1, const Matroid& m2,
            const std::vector<std::string>& t);

/// Represented generalized parallel connection for triangle flats T,
/// by matrix amalgamation in a common ambient space. The flats law is
/// verified on the result; a violation is a structural error.
ReprMatroid gpc(const ReprMatroid& m1, const ReprMatroid& m2,
                const std::vector<std::string>& t);

/// Blueprint (N0, T, r, X): base matroid, attachment triangles with
/// oriented end points (a_i, b_i, c_i), wheel ranks, and the post-glue
/// deletion set.
struct Blueprint {
  std::optional<ReprMatroid> base_repr;  // fast path when present
  std::optional<Matroid> base;           // abstract base (used if no repr)
  struct Attachment {
    std::array<std::string, 3> triangle;  // a, b, c
    int rank = 3;
  };
  std::vector<Attachment> attachments;
  std::vector<std::string> remove;  // X, subset of the union of triangles

  const Matroid base_matroid() const;
};

struct GlueResult {
  Matroid matroid;
  std::optional<ReprMatroid> repr;
  FanFamily canonical_fans;  // one per attachment, in index space
  /// Canonical fan label sequences before deleting X (full wheel
  /// fans), one per attachment.
  std::vector<std::vector<std::string>> full_fan_labels;
};

/// Glues a wheel of rank r(i) to each attachment triangle by iterated
/// generalized parallel connection, then deletes X. Wheel interior
/// labels are drawn from the reserved namespace _w<i>x<k> / _w<i>y<k>.
GlueResult glue_wheels(const Blueprint& bp);

/// The three projective points a fan distinguishes, and the extended
/// sequence F+ (prepend a when the left end is a rim element, append c
/// when the right end is).
struct FanPlusResult {
  Vec a, b, c;
  bool a_fresh = false;  // true when a is not parallel to a fan element
  bool c_fresh = false;
  std::vector<std::string> fplus;  // label sequence; _a/_c placeholders
};

FanPlusResult fan_plus(const ReprMatroid& n, const Fan& f,
                       const std::string& a_label,
                       const std::string& c_label);

struct CoreResult {
  ReprMatroid augmented;  // N+
  ReprMatroid core;       // Core(N)
  std::vector<std::array<std::string, 3>> triangles;  // {a_i, b_i, c_i}
  std::vector<std::vector<std::string>> fplus;        // F_i+ per fan
  std::vector<std::string> parallel_removed;          // S
};

/// Builds N+ by adjoining a_i, b_i, c_i for each fan, then removes the
/// fans and any element parallel to an a_i or c_i point.
CoreResult core(const ReprMatroid& n, const FanFamily& fans);

struct DecomposeResult {
  Blueprint blueprint;
  /// glue-output label -> element label of M.
  std::vector<std::pair<std::string, std::string>> relabeling;
  Matroid reglued;  // glue_wheels(blueprint) relabeled; equals M
};

/// Peels M down to N along fan-shortening moves and reassembles it as
/// a wheel gluing over Core(N). Requires the hereditary hypotheses;
/// throws structural_error when no covering family exists.
DecomposeResult decompose(const Matroid& m, const ReprMatroid& n,
                          const FanFamily& f_n);

}  // namespace fanforge

#endif  // FANFORGE_WHEEL_GLUE_HPP
