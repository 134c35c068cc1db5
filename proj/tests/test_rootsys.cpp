#include <doctest.h>

#include <map>

#include "satake/rootsys.hpp"

using namespace satake;

TEST_CASE("root and Weyl group counts") {
  // (label, |Phi|, |W|)
  const std::vector<std::tuple<std::string, int, int>> table = {
      {"A1", 2, 2},   {"A2", 6, 6},   {"A3", 12, 24},  {"A4", 20, 120},
      {"B2", 8, 8},   {"B3", 18, 48}, {"C3", 18, 48},  {"D4", 24, 192},
      {"G2", 12, 12},
  };
  for (const auto& [label, nroots, nweyl] : table) {
    CAPTURE(label);
    RootDatum rd = RootDatum::build(label);
    CHECK((int)rd.roots().size() == nroots);
    CHECK((int)rd.positive_roots().size() == nroots / 2);
    CHECK((int)rd.weyl_elements().size() == nweyl);
  }
}

TEST_CASE("Gram matrix symmetrizes the Cartan matrix") {
  for (const std::string& label : {"A2", "B2", "B3", "C3", "G2", "D4"}) {
    CAPTURE(label);
    RootDatum rd = RootDatum::build(label);
    int n = rd.rank();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(rd.gram()[i][j] == rd.gram()[j][i]);
        // c_ij = 2 (a_i | a_j) / (a_j | a_j)
        Rat cij = Rat(2) * rd.gram()[i][j] / rd.gram()[j][j];
        CHECK(cij == rd.cartan()[i][j]);
      }
    }
  }
}

TEST_CASE("fundamental weights are dual to coroots") {
  for (const std::string& label : {"A3", "B3", "C3", "G2"}) {
    CAPTURE(label);
    RootDatum rd = RootDatum::build(label);
    for (int i = 0; i < rd.rank(); ++i)
      for (int j = 0; j < rd.rank(); ++j)
        CHECK(rd.coroot_pairing(rd.fundamental_weight(i), j) ==
              Rat(i == j ? 1 : 0));
  }
}

TEST_CASE("fw coordinate round trip") {
  RootDatum rd = RootDatum::build("B3");
  Vec fw = {Rat(1), Rat(0), Rat(2)};
  Vec sr = rd.from_fw_coords(fw);
  CHECK(rd.to_fw_coords(sr) == fw);
}

TEST_CASE("reflections preserve the pairing and the root set") {
  RootDatum rd = RootDatum::build("G2");
  for (int i = 0; i < rd.rank(); ++i) {
    for (const Vec& a : rd.roots()) {
      Vec b = rd.reflect_simple(i, a);
      CHECK(rd.is_root(b));
      CHECK(rd.pairing(b, b) == rd.pairing(a, a));
    }
  }
}

TEST_CASE("longest element sends the base to its negative") {
  for (const std::string& label : {"A2", "B2", "C3", "G2", "D4"}) {
    CAPTURE(label);
    RootDatum rd = RootDatum::build(label);
    const WeylElement& w0 = rd.weyl_elements()[rd.longest_element()];
    for (int i = 0; i < rd.rank(); ++i) {
      Vec img = rd.act(w0, rd.simple_roots()[i]);
      CHECK(rd.is_root(img));
      CHECK(!rd.is_positive_root(img));
    }
  }
}

TEST_CASE("all bases are distinct and each consists of roots") {
  RootDatum rd = RootDatum::build("B2");
  auto bases = rd.all_bases();
  CHECK((int)bases.size() == 8);
  std::set<Mat> distinct;
  for (const auto& [w, basis] : bases) {
    distinct.insert(basis);
    for (const Vec& a : basis) CHECK(rd.is_root(a));
  }
  CHECK(distinct.size() == bases.size());
}

TEST_CASE("diagram components and degenerate part") {
  RootDatum rd = RootDatum::build("A4");
  auto comps = rd.components({0, 1, 3});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == IndexSet{0, 1});
  CHECK(comps[1] == IndexSet{3});
  CHECK(rd.degenerate_part({0, 1, 3}) == IndexSet{});

  RootDatum d4 = RootDatum::build("D4");
  // node 1 is the center: removing it leaves three isolated nodes
  CHECK(d4.components({0, 2, 3}).size() == 3);

  RootDatum a1 = RootDatum::build("A1");
  CHECK(a1.degenerate_part({0}) == IndexSet{0});
}

TEST_CASE("Levi and radical roots partition the root system") {
  RootDatum rd = RootDatum::build("C3");
  for (IndexSet y : std::vector<IndexSet>{{}, {0}, {0, 2}, {0, 1, 2}}) {
    auto lr = rd.levi_and_radical_roots(y);
    CHECK(lr.levi.size() + lr.rad.size() + lr.rad_op.size() ==
          rd.roots().size());
    CHECK(lr.rad.size() == lr.rad_op.size());
    for (const Vec& a : lr.rad) CHECK(rd.is_positive_root(a));
    // Levi roots are spanned by the roots indexed by y
    for (const Vec& a : lr.levi)
      for (int i = 0; i < rd.rank(); ++i)
        if (!y.count(i)) CHECK(a[i] == Rat(0));
  }
}

TEST_CASE("indexset rendering is 1-based") {
  CHECK(indexset_to_string({}) == "{}");
  CHECK(indexset_to_string({0, 2}) == "{1,3}");
}
