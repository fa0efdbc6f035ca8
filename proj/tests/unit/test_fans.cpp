#include "doctest.h"
#include "fanforge/catalog.hpp"
#include "fanforge/fan.hpp"
#include "fanforge/wheel_glue.hpp"

using namespace fanforge;

TEST_CASE("fan recognition") {
  CatalogEntry w3 = catalog_get("wheel3");
  const Matroid& m = w3.matroid;

  // Any triangle, as a sequence, is a fan.
  auto tri = is_fan(m, std::vector<std::string>{"x1", "y1", "x2"});
  REQUIRE(tri.has_value());
  CHECK(tri->starts_with_triangle);

  // The alternating walk around the rank-3 wheel is a 6-element fan.
  auto walk = is_fan(m, std::vector<std::string>{"x1", "y1", "x2", "y2", "x3",
                                                 "y3"});
  REQUIRE(walk.has_value());

  // The three spokes form a triad (the hub star), hence a fan.
  CHECK(is_fan(m, std::vector<std::string>{"x1", "x2", "x3"}).has_value());

  // Repeated elements are rejected.
  CHECK(!is_fan(m, std::vector<std::string>{"x1", "y1", "x1"}).has_value());
  // Unknown labels are input errors.
  CHECK_THROWS_AS(is_fan(m, {0, 1, 99}), input_error);
  // Non-fans are rejected: a path of three edges is neither a circuit
  // nor a cocircuit.
  CHECK(!is_fan(m, std::vector<std::string>{"x1", "y1", "y2"}).has_value());
}

TEST_CASE("classification") {
  // Use a host that is not a wheel: glue a wheel to the Fano plane.
  Blueprint bp;
  bp.base_repr = catalog_get("F7").repr;
  bp.attachments.push_back({{"e2", "e3", "e1"}, 3});
  bp.remove = {"e3"};
  GlueResult g = glue_wheels(bp);
  const Matroid& m = g.matroid;
  REQUIRE(m.is_3connected());

  const Fan& canon = g.canonical_fans.fans[0];
  FanClassification cls = classify(m, canon);
  // A fan starting with a triangle has spokes at odd positions.
  std::vector<FanRole> roles = fan_roles(canon);
  CHECK(cls.roles == roles);
  for (std::size_t i = 0; i < roles.size(); ++i) {
    bool odd = (i % 2 == 0);
    if (canon.starts_with_triangle)
      CHECK((roles[i] == FanRole::spoke) == odd);
  }
  CHECK(cls.terminal.front());
  CHECK(cls.terminal.back());
  for (std::size_t i = 1; i + 1 < cls.terminal.size(); ++i)
    CHECK(!cls.terminal[i]);

  // Reversal reverses the labels.
  FanClassification rev = classify(m, canon.reversed());
  for (std::size_t i = 0; i < cls.roles.size(); ++i)
    CHECK(rev.roles[i] == cls.roles[cls.roles.size() - 1 - i]);

  // The canonical fan's rim elements are the wheel rim images: their
  // windows are triads.
  for (std::size_t i = 0; i + 2 < canon.seq.size(); ++i) {
    Subset w = bit(canon.seq[i]) | bit(canon.seq[i + 1]) | bit(canon.seq[i + 2]);
    if ((i % 2 == 0) == canon.starts_with_triangle)
      CHECK(m.is_triangle(w));
    else
      CHECK(m.is_triad(w));
  }

  // Wheels and whirls are ambiguous hosts.
  CatalogEntry w3 = catalog_get("wheel3");
  auto fan_in_wheel = is_fan(w3.matroid,
                             std::vector<std::string>{"x1", "y1", "x2"});
  CHECK_THROWS_AS(classify(w3.matroid, *fan_in_wheel), structural_error);
}

TEST_CASE("fan enumeration") {
  // In U(2,4) every 3-set is both a triangle and a triad, so every
  // sequence of 3 or 4 distinct elements alternates: 12 triples and 12
  // quadruples up to reversal.
  Matroid u24 = catalog_get("U24").matroid;
  auto fans24 = enumerate_fans(u24, 3);
  int len3 = 0, len4 = 0;
  for (auto& ef : fans24) (ef.fan.length() == 3 ? len3 : len4)++;
  CHECK(fans24.size() == 24);
  CHECK(len3 == 12);
  CHECK(len4 == 12);

  // wheel(3) has a maximal fan on all six elements.
  Matroid w3 = catalog_get("wheel3").matroid;
  auto fans = enumerate_fans(w3, 3);
  bool found6 = false;
  for (auto& ef : fans)
    if (ef.fan.length() == 6 && ef.maximal) found6 = true;
  CHECK(found6);
  // Every enumerated fan checks out and no fan of length < 3 appears.
  for (auto& ef : fans) {
    CHECK(ef.fan.length() >= 3);
    CHECK(is_fan(w3, ef.fan.seq).has_value());
    CHECK(ef.fan.seq.front() <= ef.fan.seq.back());
  }

  // No triangles or triads: no fans. U(3,6) has neither.
  Matroid u36 = catalog_get("U36").matroid;
  CHECK(u36.triangles().empty());
  CHECK(u36.triads().empty());
  CHECK(enumerate_fans(u36, 3).empty());
}

TEST_CASE("sequence relations") {
  std::vector<int> f123 = {1, 2, 3}, f1234 = {1, 2, 3, 4};
  CHECK(is_consistent(f123, f1234));
  CHECK(is_enclosed(f123, f1234));
  CHECK(is_contiguous(f123, f1234));

  // A gap keeps consistency but breaks enclosure.
  std::vector<int> gap = {1, 4, 5}, full = {1, 2, 3, 4, 5};
  CHECK(is_consistent(gap, full));
  CHECK(!is_enclosed(gap, full));

  // Reversal of the second argument is allowed in all three.
  std::vector<int> mid = {2, 3, 4};
  std::vector<int> rev = {5, 4, 3, 2, 1};
  CHECK(is_consistent(mid, rev));
  CHECK(is_enclosed(mid, rev));
  CHECK(is_contiguous(mid, rev));

  CHECK(!is_consistent(f1234, f123));
}

TEST_CASE("fan family disjointness") {
  Matroid w3 = catalog_get("wheel3").matroid;
  Fan a = *is_fan(w3, std::vector<std::string>{"x1", "y1", "x2"});
  Fan b = *is_fan(w3, std::vector<std::string>{"x2", "y2", "x3"});
  FanFamily overlapping{{a, b}};
  CHECK(!overlapping.pairwise_disjoint());
  FanFamily single{{a}};
  CHECK(single.pairwise_disjoint());
}
