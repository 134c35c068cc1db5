#include "satake/weights.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace satake {

namespace {

bool is_nonneg_int(const Rat& x) { return x >= 0 && denominator(x) == 1; }

}  // namespace

WeightSystem weight_system(const RootDatum& rd, const Vec& hw) {
  int n = rd.rank();
  for (int i = 0; i < n; ++i) {
    Rat c = rd.coroot_pairing(hw, i);
    if (!is_nonneg_int(c))
      throw std::domain_error("weight_system: highest weight is not dominant integral");
  }
  // Dominant weights mu with hw - mu a nonnegative integer combination of
  // simple roots. Since mu >= w0(hw) coordinatewise, hw - w0(hw) bounds the
  // search box.
  Vec w0hw = rd.act(rd.weyl_elements()[rd.longest_element()], hw);
  Vec box = sub(hw, w0hw);
  std::vector<Int> bound(n);
  for (int i = 0; i < n; ++i) bound[i] = numerator(box[i]);
  std::vector<Vec> dominant;
  Vec c(n, Rat(0));
  std::function<void(int)> walk = [&](int i) {
    if (i == n) {
      Vec mu = sub(hw, c);
      for (int j = 0; j < n; ++j)
        if (rd.coroot_pairing(mu, j) < 0) return;
      dominant.push_back(mu);
      return;
    }
    for (Int v = 0; v <= bound[i]; ++v) {
      c[i] = Rat(v);
      walk(i + 1);
    }
  };
  walk(0);
  std::set<Vec, bool (*)(const Vec&, const Vec&)> all(&vec_less);
  for (const Vec& mu : dominant)
    for (const WeylElement& w : rd.weyl_elements()) all.insert(rd.act(w, mu));
  WeightSystem ws;
  ws.highest = hw;
  ws.weights.assign(all.begin(), all.end());
  return ws;
}

IndexSet support(const RootDatum& rd, const Vec& hw, const Vec& mu) {
  Vec d = sub(hw, mu);
  IndexSet out;
  for (int i = 0; i < rd.rank(); ++i) {
    if (!is_nonneg_int(d[i]))
      throw std::domain_error("support: weight is not below the highest weight");
    if (d[i] > 0) out.insert(i);
  }
  return out;
}

Vec highest_weight_wrt_basis(const RootDatum& rd, const WeightSystem& ws,
                             int weyl_index) {
  const WeylElement& w = rd.weyl_elements().at(weyl_index);
  Vec expected = rd.act(w, ws.highest);
  // Cross-check: the unique element of ws dominant with respect to w(Delta).
  std::vector<Vec> dominant;
  for (const Vec& mu : ws.weights) {
    bool dom = true;
    for (int i = 0; i < rd.rank() && dom; ++i) {
      Vec e = zero_vec(rd.rank());
      e[i] = 1;
      if (rd.pairing(mu, rd.act(w, e)) < 0) dom = false;
    }
    if (dom) dominant.push_back(mu);
  }
  if (dominant.size() != 1 || dominant[0] != expected)
    throw std::logic_error("highest_weight_wrt_basis: dominant element not unique");
  return expected;
}

IndexSet z_set(const RootDatum& rd, const WeightSystem& ws) {
  IndexSet z;
  for (int i = 0; i < rd.rank(); ++i) {
    Vec e = zero_vec(rd.rank());
    e[i] = 1;
    if (rd.pairing(ws.highest, e) == 0) z.insert(i);
  }
  return z;
}

bool is_admissible_graph(const RootDatum& rd, const WeightSystem& ws,
                         const IndexSet& y) {
  IndexSet z = z_set(rd, ws);
  for (const IndexSet& comp : rd.components(y)) {
    bool meets = std::any_of(comp.begin(), comp.end(),
                             [&](int i) { return z.count(i) == 0; });
    if (!meets) return false;
  }
  return true;
}

std::pair<bool, std::optional<Vec>> is_admissible_support(
    const RootDatum& rd, const WeightSystem& ws, const IndexSet& y) {
  for (const Vec& mu : ws.weights) {
    Vec d = sub(ws.highest, mu);
    bool below = true;
    for (const Rat& x : d)
      if (!is_nonneg_int(x)) below = false;
    if (!below) continue;
    if (support(rd, ws.highest, mu) == y) return {true, mu};
  }
  return {false, std::nullopt};
}

ReflectionWitness reflection_witness(const RootDatum& rd,
                                     const WeightSystem& ws, const IndexSet& y) {
  if (!is_admissible_graph(rd, ws, y))
    throw std::domain_error("reflection_witness: subset is not admissible");
  ReflectionWitness out;
  Vec cur = ws.highest;
  for (const IndexSet& comp : rd.components(y)) {
    // Seed: a root of the component not orthogonal to the current weight;
    // grow by adjacency inside the component.
    IndexSet todo = comp;
    std::vector<int> done;
    while (!todo.empty()) {
      int pick = -1;
      for (int i : todo) {
        Vec e = zero_vec(rd.rank());
        e[i] = 1;
        bool linked = rd.pairing(cur, e) != 0;
        for (int j : done)
          if (rd.gram()[i][j] != 0) linked = true;
        if (linked) {
          pick = i;
          break;
        }
      }
      if (pick < 0)
        throw std::logic_error("reflection_witness: component not reachable");
      todo.erase(pick);
      done.push_back(pick);
      cur = rd.reflect_simple(pick, cur);
      out.order.push_back(pick);
      out.prefix_weights.push_back(cur);
    }
  }
  out.final_weight = cur;
  return out;
}

IndexSet y_star(const RootDatum& rd, const WeightSystem& ws, const IndexSet& y) {
  IndexSet out;
  for (int i = 0; i < rd.rank(); ++i) {
    Vec e = zero_vec(rd.rank());
    e[i] = 1;
    if (rd.pairing(ws.highest, e) != 0) continue;
    bool ortho = true;
    for (int j : y)
      if (rd.gram()[i][j] != 0) ortho = false;
    if (ortho) out.insert(i);
  }
  return out;
}

Cone cone_CY(const RootDatum& rd, const WeightSystem& ws, const IndexSet& y) {
  if (!is_admissible_graph(rd, ws, y))
    throw std::domain_error("cone_CY: subset is not admissible");
  std::vector<Vec> ineqs, eqs;
  for (int i : y) {
    Vec e = zero_vec(rd.rank());
    e[i] = 1;
    eqs.push_back(rd.covector(e));
  }
  for (const Vec& mu : ws.weights) {
    Vec d = sub(ws.highest, mu);
    bool below = true;
    for (const Rat& x : d)
      if (!is_nonneg_int(x)) below = false;
    if (!below) continue;
    bool inside_y = true;
    for (int i = 0; i < rd.rank(); ++i)
      if (d[i] > 0 && !y.count(i)) inside_y = false;
    if (inside_y) continue;
    ineqs.push_back(scale(-1, rd.covector(d)));  // (lambda0 - mu | u) >= 0
  }
  return Cone::from_ineqs_eqs(rd.rank(), std::move(ineqs), eqs);
}

Vec dual_highest_weight(const RootDatum& rd, const WeightSystem& ws) {
  return scale(-1, rd.act(rd.weyl_elements()[rd.longest_element()], ws.highest));
}

RepTypes rep_types(const RootDatum& rd, const WeightSystem& ws) {
  RepTypes out;
  out.tau = z_set(rd, ws);
  out.t_rho = out.tau;
  Vec dual = dual_highest_weight(rd, ws);
  for (int i = 0; i < rd.rank(); ++i) {
    Vec e = zero_vec(rd.rank());
    e[i] = 1;
    if (rd.pairing(dual, e) == 0) out.t_rho_check.insert(i);
  }
  return out;
}

bool is_faithful_like(const RootDatum& rd, const WeightSystem& ws) {
  IndexSet all;
  for (int i = 0; i < rd.rank(); ++i) all.insert(i);
  IndexSet z = z_set(rd, ws);
  for (const IndexSet& comp : rd.components(all)) {
    bool meets = std::any_of(comp.begin(), comp.end(),
                             [&](int i) { return z.count(i) == 0; });
    if (!meets) return false;
  }
  return true;
}

FanComparisonReport compare_CY_fan_with_Ft(const RootDatum& rd,
                                           const WeightSystem& ws) {
  FanComparisonReport rep;
  IndexSet tau = z_set(rd, ws);
  int n = rd.rank();
  std::ostringstream detail;
  rep.cones_equal = true;
  std::set<IndexSet> images;
  for (int mask = 0; mask < (1 << n); ++mask) {
    IndexSet y;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) y.insert(i);
    if (!is_admissible_graph(rd, ws, y)) continue;
    rep.admissible.push_back(y);
    Cone cy = cone_CY(rd, ws, y);
    Cone ct = cone_Ct_of_Q(rd, tau, y);
    if (!cy.equals(ct)) {
      rep.cones_equal = false;
      detail << "C_Y != C_tau(P_Y) for Y=" << indexset_to_string(y) << "; ";
    }
    IndexSet img = y;
    IndexSet ystar = y_star(rd, ws, y);
    img.insert(ystar.begin(), ystar.end());
    images.insert(img);
  }
  std::set<IndexSet> relevant;
  for (int mask = 0; mask < (1 << n); ++mask) {
    IndexSet y;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) y.insert(i);
    if (is_t_relevant(rd, tau, y)) relevant.insert(y);
  }
  rep.bijection_ok = images.size() == rep.admissible.size() && images == relevant;
  if (!rep.bijection_ok)
    detail << "Y -> Y u Y* is not a bijection onto relevant subsets; ";
  rep.detail = detail.str();
  return rep;
}

}  // namespace satake
