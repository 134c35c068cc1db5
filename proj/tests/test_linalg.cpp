#include <doctest.h>

#include "satake/linalg.hpp"

using namespace satake;

namespace {

Vec v(std::initializer_list<int> xs) {
  Vec out;
  for (int x : xs) out.push_back(Rat(x));
  return out;
}

}  // namespace

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(Rat(3, 4)) == "3/4");
  CHECK(rat_to_string(Rat(-2)) == "-2");
  CHECK(rat_from_string("5/10") == Rat(1, 2));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(extrat_to_string(ExtRat::neg_inf()) == "-inf");
  CHECK(extrat_from_string("-inf").is_neg_inf());
  CHECK(extrat_from_string("1/3") == ExtRat(Rat(1, 3)));
}

TEST_CASE("primitive vectors") {
  Vec a = {Rat(1, 2), Rat(-3, 4), Rat(0)};
  CHECK(primitive(a) == Vec{Rat(2), Rat(-3), Rat(0)});
  CHECK(primitive(v({-2, 4})) == v({1, -2}));  // leading entry positive
  CHECK(primitive(v({0, 0})) == v({0, 0}));
}

TEST_CASE("rref and rank") {
  Mat m = {v({1, 2, 3}), v({2, 4, 6}), v({1, 1, 1})};
  CHECK(rank_of(m) == 2);
  int r = rref(m);
  CHECK(r == 2);
  CHECK(m[0] == v({1, 0, -1}));
  CHECK(m[1] == v({0, 1, 2}));
}

TEST_CASE("kernel basis solves the system") {
  Mat m = {v({1, 2, 3}), v({1, 1, 1})};
  Mat k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  for (const Vec& row : m) CHECK(dot(row, k[0]) == Rat(0));
}

TEST_CASE("inverse and solve") {
  Mat m = {v({2, 1}), v({1, 1})};
  Mat mi = inverse(m);
  Mat prod = mat_mul(m, mi);
  CHECK(prod == identity(2));
  auto x = solve(m, v({3, 2}));
  REQUIRE(x.has_value());
  CHECK(mat_vec(m, *x) == v({3, 2}));
  CHECK(!solve({v({1, 1}), v({2, 2})}, v({0, 1})).has_value());
}

TEST_CASE("integer kernel is saturated") {
  // ker of (2 2) over Z is generated by (1, -1), not (2, -2).
  Mat k = integer_kernel_basis({v({2, 2})});
  REQUIRE(k.size() == 1);
  CHECK((k[0] == v({1, -1}) || k[0] == v({-1, 1})));
}

TEST_CASE("integer kernel plus complement spans the integer lattice") {
  Mat m = {v({2, 4, 6}), v({0, 3, 3})};
  auto [ker, comp] = integer_kernel_and_complement(m);
  // kernel vectors annihilate m
  for (const Vec& x : ker)
    for (const Vec& row : m) CHECK(dot(row, x) == Rat(0));
  // concatenation is a Z-basis: determinant +-1
  Mat full = ker;
  for (const Vec& c : comp) full.push_back(c);
  REQUIRE((int)full.size() == 3);
  Mat inv = inverse(full);
  for (const Vec& row : inv)
    for (const Rat& e : row) CHECK(denominator(e) == 1);
}
