#include <doctest.h>

#include "satake/cone.hpp"
#include "satake/rootsys.hpp"

using namespace satake;

namespace {

Vec v(std::initializer_list<int> xs) {
  Vec out;
  for (int x : xs) out.push_back(Rat(x));
  return out;
}

}  // namespace

TEST_CASE("first quadrant round trip") {
  // { x <= 0 conventions: a.x <= 0 } so -x <= 0, -y <= 0 is the quadrant
  Cone c = Cone::from_ineqs(2, {v({-1, 0}), v({0, -1})});
  CHECK(c.dim() == 2);
  CHECK(c.is_strictly_convex());
  REQUIRE(c.gens().size() == 2);
  CHECK(c.contains(v({3, 5})));
  CHECK(!c.contains(v({-1, 0})));
  CHECK(c.contains_in_relint(v({1, 1})));
  CHECK(!c.contains_in_relint(v({1, 0})));
  // regenerate from the V-form
  Cone c2 = Cone::from_gens(2, c.gens());
  CHECK(c.equals(c2));
}

TEST_CASE("halfplane has lineality") {
  Cone c = Cone::from_ineqs(2, {v({1, 0})});  // x <= 0
  CHECK(c.dim() == 2);
  CHECK(!c.is_strictly_convex());
  REQUIRE(c.lineality().size() == 1);
  CHECK(c.lineality()[0][1] != Rat(0));
  CHECK(c.contains(v({-4, 100})));
  CHECK(!c.contains(v({1, 0})));
}

TEST_CASE("dominant chamber of A2 has the fundamental coweights as rays") {
  RootDatum rd = RootDatum::build("A2");
  // (alpha_i | u) >= 0, i.e. -covector(alpha_i) . u <= 0
  std::vector<Vec> ineqs;
  for (int i = 0; i < 2; ++i)
    ineqs.push_back(scale(Rat(-1), rd.covector(rd.simple_roots()[i])));
  Cone c = Cone::from_ineqs(2, ineqs);
  REQUIRE(c.gens().size() == 2);
  // fundamental coweights = fundamental weights here; primitive reps
  std::set<Vec> rays(c.gens().begin(), c.gens().end());
  CHECK(rays.count(v({2, 1})));
  CHECK(rays.count(v({1, 2})));
}

TEST_CASE("face lattice of the quadrant") {
  Cone c = Cone::from_ineqs(2, {v({-1, 0}), v({0, -1})});
  auto fs = c.faces();
  CHECK(fs.size() == 4);  // cone, two rays, origin
  int by_dim[3] = {0, 0, 0};
  for (const Cone& f : fs) {
    by_dim[f.dim()]++;
    CHECK(c.has_face(f));
  }
  CHECK(by_dim[0] == 1);
  CHECK(by_dim[1] == 2);
  CHECK(by_dim[2] == 1);
  // a ray not on the boundary is not a face
  Cone diag = Cone::from_gens(2, {v({1, 1})});
  CHECK(c.contains_cone(diag));
  CHECK(!c.has_face(diag));
}

TEST_CASE("intersection and equality") {
  Cone quad = Cone::from_ineqs(2, {v({-1, 0}), v({0, -1})});
  Cone half = Cone::from_ineqs(2, {v({1, -1})});  // x <= y
  Cone i = quad.intersect(half);
  CHECK(i.contains(v({1, 2})));
  CHECK(!i.contains(v({2, 1})));
  Cone expected = Cone::from_gens(2, {v({0, 1}), v({1, 1})});
  CHECK(i.equals(expected));
  CHECK(i.key() == expected.key());
}

TEST_CASE("equations produce faces") {
  Cone edge = Cone::from_ineqs_eqs(2, {v({0, -1})}, {v({1, 0})});
  CHECK(edge.dim() == 1);
  REQUIRE(edge.gens().size() == 1);
  CHECK(edge.gens()[0] == v({0, 1}));
}

TEST_CASE("polar cone") {
  Cone quad = Cone::from_ineqs(2, {v({-1, 0}), v({0, -1})});
  Cone p = quad.polar();
  // polar of the nonnegative quadrant under a.x <= 0 is the nonpositive one
  CHECK(p.contains(v({-1, -2})));
  CHECK(!p.contains(v({1, 0})));
  CHECK(p.polar().equals(quad));
}

TEST_CASE("interior point lies in the relative interior") {
  Cone c = Cone::from_gens(3, {v({1, 0, 0}), v({0, 1, 0}), v({1, 1, 1})});
  CHECK(c.contains_in_relint(c.interior_point()));
  Cone zero = Cone::from_gens(2, {});
  CHECK(zero.is_zero());
  CHECK(zero.interior_point() == v({0, 0}));
}

TEST_CASE("span basis matches the dimension") {
  Cone c = Cone::from_gens(3, {v({1, 1, 0}), v({1, -1, 0})});
  CHECK(c.dim() == 2);
  CHECK(c.span_basis().size() == 2);
}

TEST_CASE("collect_faces deduplicates shared faces") {
  Cone c = Cone::from_ineqs(3, {v({-1, 0, 0}), v({0, -1, 0}), v({0, 0, -1})});
  std::vector<Cone> all;
  collect_faces(c, all);
  CHECK(all.size() == 8);  // 1 + 3 + 3 + 1 faces of the octant
}
