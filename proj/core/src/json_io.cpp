#include "satake/json_io.hpp"

#include <map>

namespace satake {

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_to_string(x));
  return a;
}

Vec vec_from_json(const Json& j) {
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_string(x.get<std::string>()));
  return v;
}

Json exps_to_json(const std::vector<ExtRat>& e) {
  Json a = Json::array();
  for (const ExtRat& x : e) a.push_back(extrat_to_string(x));
  return a;
}

std::vector<ExtRat> exps_from_json(const Json& j) {
  std::vector<ExtRat> e;
  for (const auto& x : j) e.push_back(extrat_from_string(x.get<std::string>()));
  return e;
}

namespace {

Json mat_to_json(const std::vector<Vec>& m) {
  Json a = Json::array();
  for (const Vec& v : m) a.push_back(vec_to_json(v));
  return a;
}

std::vector<Vec> mat_from_json(const Json& j) {
  std::vector<Vec> m;
  for (const auto& v : j) m.push_back(vec_from_json(v));
  return m;
}

}  // namespace

Json cone_to_json(const Cone& c) {
  return Json{{"dim", c.ambient_dim()},
              {"ineqs", mat_to_json(c.ineqs())},
              {"gens", mat_to_json(c.gens())},
              {"lineality", mat_to_json(c.lineality())}};
}

Cone cone_from_json(const Json& j) {
  int dim = j.at("dim").get<int>();
  if (j.contains("ineqs"))
    return Cone::from_ineqs(dim, mat_from_json(j.at("ineqs")));
  return Cone::from_gens(dim, mat_from_json(j.at("gens")),
                         j.contains("lineality")
                             ? mat_from_json(j.at("lineality"))
                             : std::vector<Vec>{});
}

Json fan_report_json(const RootDatum& rd, const Fan& fan,
                     const FanCheckResult* check) {
  std::map<int, int> by_dim;
  for (const Cone& c : fan.cones) by_dim[c.dim()]++;
  Json dims = Json::object();
  for (const auto& [d, n] : by_dim) dims[std::to_string(d)] = n;
  Json relevancy = Json::array();
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    Json entry{{"cone", (int)i}, {"dim", fan.cones[i].dim()}};
    if (i < fan.relevancy.size()) {
      entry["parabolic_y"] = indexset_to_string(fan.relevancy[i].y);
      entry["weyl_index"] = fan.relevancy[i].weyl_index;
    }
    relevancy.push_back(entry);
  }
  Json out{{"root_system", rd.label()},
           {"type", indexset_to_string(fan.type)},
           {"degenerate", !fan.degenerate.empty()},
           {"num_cones", (int)fan.cones.size()},
           {"num_maximal", (int)fan.maximal.size()},
           {"cones_by_dim", dims},
           {"relevancy_index", relevancy}};
  if (check) {
    out["fan_check"] = Json{{"pairwise_ok", check->pairwise_ok},
                            {"coverage_ok", check->coverage_ok},
                            {"detail", check->detail}};
  }
  return out;
}

Json weight_system_json(const RootDatum& rd, const WeightSystem& ws) {
  Json weights = Json::array();
  for (const Vec& mu : ws.weights) weights.push_back(vec_to_json(rd.to_fw_coords(mu)));
  return Json{{"root_system", rd.label()},
              {"highest_fw", vec_to_json(rd.to_fw_coords(ws.highest))},
              {"num_weights", (int)ws.weights.size()},
              {"weights_fw", weights}};
}

Json admissibility_json(const RootDatum& rd, const WeightSystem& ws) {
  Json entries = Json::array();
  int n = rd.rank();
  for (int mask = 0; mask < (1 << n); ++mask) {
    IndexSet y;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) y.insert(i);
    bool adm = is_admissible_graph(rd, ws, y);
    Json e{{"Y", indexset_to_string(y)},
           {"admissible", adm},
           {"Y_star", indexset_to_string(y_star(rd, ws, y))}};
    if (adm) {
      auto [ok, witness] = is_admissible_support(rd, ws, y);
      if (ok && witness) e["witness_fw"] = vec_to_json(rd.to_fw_coords(*witness));
      e["cone"] = cone_to_json(cone_CY(rd, ws, y));
    }
    entries.push_back(e);
  }
  RepTypes rt = rep_types(rd, ws);
  return Json{{"root_system", rd.label()},
              {"tau", indexset_to_string(rt.tau)},
              {"t_rho_check", indexset_to_string(rt.t_rho_check)},
              {"faithful_like", is_faithful_like(rd, ws)},
              {"subsets", entries}};
}

Json seminorm_to_json(const DiagSeminorm& x) {
  return Json{{"exps", exps_to_json(x.exps)}, {"basis_tag", x.basis_tag}};
}

DiagSeminorm seminorm_from_json(const Json& j) {
  DiagSeminorm x;
  x.exps = exps_from_json(j.at("exps"));
  if (j.contains("basis_tag")) x.basis_tag = j.at("basis_tag").get<std::string>();
  return x;
}

LogAffineSequence sequence_from_json(const Json& j) {
  LogAffineSequence s;
  s.a = vec_from_json(j.at("a"));
  s.b = vec_from_json(j.at("b"));
  if (s.a.size() != s.b.size())
    throw std::invalid_argument("sequence: a and b lengths differ");
  return s;
}

Json sequence_report_json(const LogAffineSequence& s,
                          const SequenceLimitReport& rep) {
  return Json{{"a", vec_to_json(s.a)},
              {"b", vec_to_json(s.b)},
              {"permutation", rep.permutation},
              {"I", rep.index_set},
              {"limit_exps", exps_to_json(rep.limit.exps)}};
}

Json embedding_report_json(const RootDatum& rd, const WeightList& wl,
                           const PullbackReport& rep) {
  return Json{{"root_system", rd.label()},
              {"weights", mat_to_json(wl.lambdas)},
              {"matrix", mat_to_json(embedding_matrix(rd, wl))},
              {"full_dim_preimages", rep.full_dim},
              {"fan_match", rep.ok()},
              {"detail", rep.detail}};
}

}  // namespace satake
