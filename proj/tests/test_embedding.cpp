#include <doctest.h>

#include <map>

#include "satake/embedding.hpp"
#include "satake/weights.hpp"

using namespace satake;

namespace {

Vec v(std::initializer_list<int> xs) {
  Vec out;
  for (int x : xs) out.push_back(Rat(x));
  return out;
}

}  // namespace

TEST_CASE("weight list starts at the highest weight and is W-stable") {
  for (const auto& [label, fw] : std::vector<std::pair<std::string, Vec>>{
           {"A1", {Rat(1)}},
           {"A2", {Rat(1), Rat(0)}},
           {"B2", {Rat(0), Rat(1)}}}) {
    CAPTURE(label);
    RootDatum rd = RootDatum::build(label);
    WeightSystem ws = weight_system(rd, rd.from_fw_coords(fw));
    WeightList wl = weight_list_from_rep(rd, ws);
    CHECK(wl.lambdas.front() == ws.highest);
    CHECK(wl.d() + 1 == (int)ws.weights.size());
    // descending height
    auto height = [](const Vec& x) {
      Rat h = 0;
      for (const Rat& e : x) h += e;
      return h;
    };
    for (size_t i = 1; i < wl.lambdas.size(); ++i)
      CHECK(height(wl.lambdas[i]) <= height(wl.lambdas[i - 1]));
  }
}

TEST_CASE("embedding in rank one") {
  RootDatum rd = RootDatum::build("A1");
  WeightSystem ws = weight_system(rd, rd.fundamental_weight(0));
  WeightList wl = weight_list_from_rep(rd, ws);
  REQUIRE(wl.d() == 1);
  // u = alpha_1 pairs to 1 with omega_1 and -1 with -omega_1
  CHECK(weight_embedding(rd, v({1}), wl) == Vec{Rat(1), Rat(-1)});
  Mat m = embedding_matrix(rd, wl);
  REQUIRE(m.size() == 2);
  CHECK(mat_vec(m, v({1})) == Vec{Rat(1), Rat(-1)});
}

TEST_CASE("target fan sizes") {
  for (int d : {1, 2, 3}) {
    CAPTURE(d);
    Fan f = standard_fan_on_target(d);
    CHECK((int)f.cones.size() == (1 << (d + 1)) - 1);
    CHECK((int)f.maximal.size() == d + 1);
    // every cone lives in the sum-zero hyperplane
    Vec ones(d + 1, Rat(1));
    for (const Cone& c : f.cones)
      for (const Vec& g : c.gens()) CHECK(dot(ones, g) == Rat(0));
  }
  // per-dimension counts for d = 3: binomial profile 1, 4, 6, 4
  Fan f3 = standard_fan_on_target(3);
  std::map<int, int> by_dim;
  for (const Cone& c : f3.cones) by_dim[c.dim()]++;
  CHECK(by_dim[0] == 1);
  CHECK(by_dim[1] == 4);
  CHECK(by_dim[2] == 6);
  CHECK(by_dim[3] == 4);
}

TEST_CASE("pullbacks of the target cones recover the type fan") {
  for (const auto& [label, fw] : std::vector<std::pair<std::string, Vec>>{
           {"A1", {Rat(1)}},
           {"A2", {Rat(1), Rat(0)}},
           {"A2", {Rat(1), Rat(1)}},
           {"B2", {Rat(1), Rat(0)}},
           {"B2", {Rat(0), Rat(1)}}}) {
    CAPTURE(label);
    RootDatum rd = RootDatum::build(label);
    WeightSystem ws = weight_system(rd, rd.from_fw_coords(fw));
    WeightList wl = weight_list_from_rep(rd, ws);
    PullbackReport rep = pullback_fan_compare(rd, ws, wl);
    CAPTURE(rep.detail);
    CHECK(rep.maximal_match);
    CHECK(rep.all_cones_match);
    CHECK((int)rep.full_dim.size() ==
          (int)build_fan_Ft(rd, z_set(rd, ws)).maximal.size());
  }
}

TEST_CASE("monomial evaluation over the opposite radical") {
  RootDatum rd = RootDatum::build("A2");
  IndexSet t{1};
  Parabolic p = standard_parabolic(rd, t);
  std::vector<Vec> psi = opposite_radical_roots(rd, t, p);
  REQUIRE(psi.size() == 2);
  CHECK(psi[0] == v({-1, -1}));
  CHECK(psi[1] == v({-1, 0}));
  ValuedPolynomial poly;
  poly.terms[{1, 0}] = ExtRat(0);
  poly.terms[{0, 1}] = ExtRat(0);
  Vec u = v({1, 1});
  // (psi_0 | u) = -2 and (psi_1 | u) = -1; the maximum wins
  CHECK(theta_monomial(rd, t, p, u, poly) == ExtRat(Rat(-1)));
  ValuedPolynomial shifted;
  shifted.terms[{2, 0}] = ExtRat(Rat(5));
  CHECK(theta_monomial(rd, t, p, u, shifted) == ExtRat(Rat(1)));
}

TEST_CASE("boundary images in rank one") {
  RootDatum rd = RootDatum::build("A1");
  WeightSystem ws = weight_system(rd, rd.fundamental_weight(0));
  WeightList wl = weight_list_from_rep(rd, ws);
  Fan fan = build_fan_Ft(rd, z_set(rd, ws));
  Cone pos = Cone::from_gens(1, {v({1})});
  Cone neg = Cone::from_gens(1, {v({-1})});
  DiagSeminorm at_pos = map_boundary_point(rd, fan, wl, {pos, zero_vec(1)});
  REQUIRE(at_pos.exps.size() == 2);
  CHECK(at_pos.exps[0] == ExtRat(0));
  CHECK(at_pos.exps[1].is_neg_inf());
  DiagSeminorm at_neg = map_boundary_point(rd, fan, wl, {neg, zero_vec(1)});
  CHECK(at_neg.exps[0].is_neg_inf());
  CHECK(at_neg.exps[1] == ExtRat(0));
}

TEST_CASE("kernel size grows with the stratum dimension") {
  RootDatum rd = RootDatum::build("A2");
  WeightSystem ws = weight_system(rd, rd.fundamental_weight(0));
  WeightList wl = weight_list_from_rep(rd, ws);
  Fan fan = build_fan_Ft(rd, z_set(rd, ws));
  auto kernel_size = [](const DiagSeminorm& x) {
    int k = 0;
    for (const ExtRat& e : x.exps) k += e.is_neg_inf() ? 1 : 0;
    return k;
  };
  Cone big = Cone::from_gens(2, {v({1, 2}), v({1, -1})});
  REQUIRE(fan.find(big) >= 0);
  CHECK(kernel_size(map_boundary_point(rd, fan, wl, {big, zero_vec(2)})) == 2);
  Cone ray = Cone::from_gens(2, {v({1, 2})});
  REQUIRE(fan.find(ray) >= 0);
  CHECK(kernel_size(map_boundary_point(rd, fan, wl, {ray, zero_vec(2)})) == 1);
  // interior point: an honest norm
  Cone origin = Cone::from_gens(2, {});
  CHECK(kernel_size(map_boundary_point(rd, fan, wl, {origin, v({1, 1})})) == 0);
}

TEST_CASE("boundary map rejects bad directions") {
  RootDatum rd = RootDatum::build("A2");
  WeightSystem ws = weight_system(rd, rd.fundamental_weight(0));
  WeightList wl = weight_list_from_rep(rd, ws);
  Fan fan = build_fan_Ft(rd, z_set(rd, ws));
  Cone ray = Cone::from_gens(2, {v({1, 2})});
  CHECK_THROWS_AS(
      map_boundary_point(rd, fan, wl, {ray, zero_vec(2)}, v({1, -1})),
      std::domain_error);
  Cone origin = Cone::from_gens(2, {});
  CHECK_THROWS_AS(
      map_boundary_point(rd, fan, wl, {origin, zero_vec(2)}, v({1, 2})),
      std::domain_error);
}

TEST_CASE("injectivity probe finds no collisions") {
  for (const auto& [label, fw] : std::vector<std::pair<std::string, Vec>>{
           {"A2", {Rat(1), Rat(0)}}, {"B2", {Rat(1), Rat(0)}}}) {
    CAPTURE(label);
    RootDatum rd = RootDatum::build(label);
    WeightSystem ws = weight_system(rd, rd.from_fw_coords(fw));
    WeightList wl = weight_list_from_rep(rd, ws);
    InjectivityReport rep = injectivity_probe(rd, ws, wl, 25, 99);
    CAPTURE(rep.detail);
    CHECK(rep.num_points > 0);
    CHECK(rep.num_collisions == 0);
  }
}

TEST_CASE("apartment map behaves like a diagonal torus model") {
  for (const auto& [label, fw] : std::vector<std::pair<std::string, Vec>>{
           {"A1", {Rat(1)}}, {"A2", {Rat(1), Rat(0)}}}) {
    CAPTURE(label);
    RootDatum rd = RootDatum::build(label);
    WeightSystem ws = weight_system(rd, rd.from_fw_coords(fw));
    WeightList wl = weight_list_from_rep(rd, ws);
    CHECK(toral_image_check(rd, ws, wl, 10, 5));
  }
}
