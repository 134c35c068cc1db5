#include "satake/embedding.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace satake {

namespace {

Rat height(const Vec& v) {
  Rat h = 0;
  for (const Rat& x : v) h += x;
  return h;
}

std::string vec_key(const Vec& v) {
  std::ostringstream os;
  for (const Rat& x : v) os << rat_to_string(x) << ",";
  return os.str();
}

std::string exps_key(const DiagSeminorm& x) {
  std::ostringstream os;
  for (const ExtRat& e : x.exps) os << extrat_to_string(e) << ",";
  return os.str();
}

}  // namespace

WeightList weight_list_from_rep(const RootDatum& rd, const WeightSystem& ws) {
  WeightList wl;
  wl.lambdas = ws.weights;
  std::stable_sort(wl.lambdas.begin(), wl.lambdas.end(),
                   [](const Vec& a, const Vec& b) {
                     Rat ha = height(a), hb = height(b);
                     if (ha != hb) return hb < ha;
                     return vec_less(b, a);
                   });
  if (wl.lambdas.empty() || wl.lambdas.front() != ws.highest)
    throw std::logic_error("weight_list_from_rep: highest weight not first");
  return wl;
}

Mat embedding_matrix(const RootDatum& rd, const WeightList& wl) {
  Mat m;
  for (const Vec& l : wl.lambdas) m.push_back(rd.covector(l));
  return m;
}

Vec weight_embedding(const RootDatum& rd, const Vec& u, const WeightList& wl) {
  Vec out;
  for (const Vec& l : wl.lambdas) out.push_back(rd.pairing(l, u));
  return out;
}

Fan standard_fan_on_target(int d) {
  if (d < 1) throw std::domain_error("standard_fan_on_target: need d >= 1");
  int n = d + 1;
  Vec ones(n, Rat(1));
  std::vector<Cone> maximal;
  for (int i = 0; i < n; ++i) {
    std::vector<Vec> ineqs;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Vec a = zero_vec(n);
      a[j] = 1;
      a[i] = -1;  // x_j - x_i <= 0
      ineqs.push_back(a);
    }
    maximal.push_back(Cone::from_ineqs_eqs(n, std::move(ineqs), {ones}));
  }
  std::map<std::string, Cone> by_key;
  for (const Cone& c : maximal)
    for (const Cone& f : c.faces()) by_key.emplace(f.key(), f);
  std::set<std::string> maximal_keys;
  for (const Cone& c : maximal) maximal_keys.insert(c.key());
  Fan fan;
  fan.ambient_dim = n;
  for (int i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[i] = 1;
    fan.quotient_basis.push_back(e);
  }
  std::vector<std::pair<std::string, Cone>> ordered(by_key.begin(), by_key.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) {
                     int da = a.second.dim(), db = b.second.dim();
                     if (da != db) return da < db;
                     return a.first < b.first;
                   });
  for (auto& [k, c] : ordered) {
    if (maximal_keys.count(k)) fan.maximal.push_back((int)fan.cones.size());
    fan.cones.push_back(c);
  }
  return fan;
}

PullbackReport pullback_fan_compare(const RootDatum& rd, const WeightSystem& ws,
                                    const WeightList& wl) {
  PullbackReport rep;
  rep.num_weights = (int)wl.lambdas.size();
  IndexSet tau = z_set(rd, ws);
  Fan fan_tau = build_fan_Ft(rd, tau);
  std::ostringstream detail;

  std::vector<Cone> preimages;
  for (size_t i = 0; i < wl.lambdas.size(); ++i) {
    std::vector<Vec> ineqs;
    for (size_t j = 0; j < wl.lambdas.size(); ++j) {
      if (j == i) continue;
      ineqs.push_back(rd.covector(sub(wl.lambdas[j], wl.lambdas[i])));
    }
    Cone pre = Cone::from_ineqs(rd.rank(), std::move(ineqs));
    if (pre.dim() == rd.rank()) {
      rep.full_dim.push_back((int)i);
      preimages.push_back(std::move(pre));
    }
  }

  std::set<std::string> pre_keys, max_keys;
  for (const Cone& c : preimages) pre_keys.insert(c.key());
  for (int mi : fan_tau.maximal) max_keys.insert(fan_tau.cones[mi].key());
  rep.maximal_match = pre_keys == max_keys;
  if (!rep.maximal_match)
    detail << "maximal cones differ: " << pre_keys.size() << " preimages vs "
           << max_keys.size() << " fan cones; ";

  std::set<std::string> pre_all, fan_all;
  for (const Cone& c : preimages)
    for (const Cone& f : c.faces()) pre_all.insert(f.key());
  for (const Cone& c : fan_tau.cones) fan_all.insert(c.key());
  rep.all_cones_match = pre_all == fan_all;
  if (!rep.all_cones_match)
    detail << "face closures differ: " << pre_all.size() << " vs "
           << fan_all.size() << "; ";
  rep.detail = detail.str();
  return rep;
}

std::vector<Vec> opposite_radical_roots(const RootDatum& rd, const IndexSet& t,
                                        const Parabolic& p) {
  if (p.y != t)
    throw std::domain_error("opposite_radical_roots: parabolic is not of the given type");
  const WeylElement& w = rd.weyl_elements()[p.weyl_index];
  std::vector<Vec> psi;
  for (const Vec& alpha : rd.levi_and_radical_roots(t).rad_op)
    psi.push_back(rd.act(w, alpha));
  std::sort(psi.begin(), psi.end(), vec_less);
  return psi;
}

ExtRat theta_monomial(const RootDatum& rd, const IndexSet& t, const Parabolic& p,
                      const Vec& u, const ValuedPolynomial& poly) {
  std::vector<Vec> psi = opposite_radical_roots(rd, t, p);
  ExtRat m = ExtRat::neg_inf();
  for (const auto& [nu, val] : poly.terms) {
    if (nu.size() != psi.size())
      throw std::domain_error("theta_monomial: term arity differs from |Psi|");
    ExtRat term = val;
    for (size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] < 0) throw std::domain_error("theta_monomial: negative exponent");
      term = term + ExtRat(Rat(nu[i]) * rd.pairing(psi[i], u));
    }
    m = max(m, term);
  }
  return m;
}

DiagSeminorm map_boundary_point(const RootDatum& rd, const Fan& fan_tau,
                                const WeightList& wl, const BoundaryPoint& x) {
  return map_boundary_point(rd, fan_tau, wl, x, x.stratum.interior_point());
}

DiagSeminorm map_boundary_point(const RootDatum& rd, const Fan& fan_tau,
                                const WeightList& wl, const BoundaryPoint& x,
                                const Vec& direction) {
  if (fan_tau.find(x.stratum) < 0)
    throw std::domain_error("map_boundary_point: stratum is not a cone of the fan");
  if (!x.stratum.is_zero() && !x.stratum.contains_in_relint(direction))
    throw std::domain_error("map_boundary_point: direction not interior to the stratum");
  if (x.stratum.is_zero() && !is_zero(direction))
    throw std::domain_error("map_boundary_point: nonzero direction for the zero stratum");
  LogAffineSequence s;
  s.a = weight_embedding(rd, x.rep, wl);
  s.b = weight_embedding(rd, direction, wl);
  return classify_sequence(s).limit;
}

InjectivityReport injectivity_probe(const RootDatum& rd, const WeightSystem& ws,
                                    const WeightList& wl, int n_samples,
                                    uint64_t seed) {
  InjectivityReport rep;
  IndexSet tau = z_set(rd, ws);
  Fan fan_tau = build_fan_Ft(rd, tau);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 7);
  auto random_vec = [&]() {
    Vec u(rd.rank());
    for (int i = 0; i < rd.rank(); ++i) u[i] = Rat(num(rng), den(rng));
    return u;
  };
  // One entry per distinct canonical form.
  std::map<std::string, DiagSeminorm> images;
  std::vector<std::pair<std::string, std::string>> mapped;  // input key, image key
  auto add_point = [&](const Cone& stratum, const Vec& u) {
    Vec rep_u = canonical_rep(rd, stratum, u);
    std::string in_key = stratum.key() + "|" + vec_key(rep_u);
    if (images.count(in_key)) return;
    DiagSeminorm img = map_boundary_point(rd, fan_tau, wl, {stratum, rep_u});
    images.emplace(in_key, img);
    mapped.emplace_back(in_key, exps_key(img));
  };
  int zero_idx = -1;
  for (size_t i = 0; i < fan_tau.cones.size(); ++i)
    if (fan_tau.cones[i].is_zero()) zero_idx = (int)i;
  for (int s = 0; s < n_samples; ++s) add_point(fan_tau.cones[zero_idx], random_vec());
  for (const Cone& c : fan_tau.cones) {
    if (c.is_zero()) continue;
    add_point(c, zero_vec(rd.rank()));
    add_point(c, random_vec());
    add_point(c, random_vec());
  }
  rep.num_points = (int)mapped.size();
  std::map<std::string, std::string> seen_image;  // image key -> input key
  std::ostringstream detail;
  for (const auto& [in_key, img_key] : mapped) {
    auto [it, fresh] = seen_image.emplace(img_key, in_key);
    if (!fresh) {
      ++rep.num_collisions;
      if (rep.num_collisions <= 3)
        detail << "collision between " << it->second << " and " << in_key << "; ";
    }
  }
  rep.detail = detail.str();
  return rep;
}

bool toral_image_check(const RootDatum& rd, const WeightSystem& ws,
                       const WeightList& wl, int n_samples, uint64_t seed) {
  // o maps to the Gauss class.
  Vec at_zero = weight_embedding(rd, zero_vec(rd.rank()), wl);
  for (const Rat& x : at_zero)
    if (x != 0) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-15, 15);
  std::uniform_int_distribution<int> den(1, 5);
  auto random_vec = [&]() {
    Vec u(rd.rank());
    for (int i = 0; i < rd.rank(); ++i) u[i] = Rat(num(rng), den(rng));
    return u;
  };
  // Weight-list permutation realizing each Weyl element.
  std::map<std::string, int> index_of;
  for (size_t i = 0; i < wl.lambdas.size(); ++i)
    index_of[vec_key(wl.lambdas[i])] = (int)i;
  for (int s = 0; s < n_samples; ++s) {
    Vec u = random_vec(), v = random_vec();
    Vec lin = sub(weight_embedding(rd, add(u, v), wl),
                  add(weight_embedding(rd, u, wl), weight_embedding(rd, v, wl)));
    if (!is_zero(lin)) return false;
    for (const WeylElement& w : rd.weyl_elements()) {
      Vec lhs = weight_embedding(rd, rd.act(w, u), wl);
      Vec rhs = weight_embedding(rd, u, wl);
      for (size_t i = 0; i < wl.lambdas.size(); ++i) {
        auto it = index_of.find(vec_key(rd.act(w, wl.lambdas[i])));
        if (it == index_of.end()) return false;  // list not W-stable
        if (lhs[it->second] != rhs[i]) return false;
      }
    }
  }
  return true;
}

}  // namespace satake
