#include "satake/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace satake {

namespace {

std::string roots_key(const std::vector<Vec>& roots) {
  std::ostringstream os;
  for (const Vec& r : roots) {
    for (const Rat& x : r) os << rat_to_string(x) << ",";
    os << ";";
  }
  return os.str();
}

std::vector<Vec> act_all(const RootDatum& rd, const WeylElement& w,
                         const std::vector<Vec>& vs) {
  std::vector<Vec> out;
  out.reserve(vs.size());
  for (const Vec& v : vs) out.push_back(rd.act(w, v));
  return out;
}

}  // namespace

std::vector<Parabolic> all_parabolics(const RootDatum& rd) {
  std::vector<Parabolic> out;
  std::map<std::string, int> seen;
  const auto& ws = rd.weyl_elements();
  std::vector<IndexSet> subsets;
  int n = rd.rank();
  for (int mask = 0; mask < (1 << n); ++mask) {
    IndexSet y;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) y.insert(i);
    subsets.push_back(y);
  }
  for (const IndexSet& y : subsets) {
    std::vector<Vec> std_roots = rd.parabolic_roots(y);
    for (size_t wi = 0; wi < ws.size(); ++wi) {
      std::vector<Vec> roots = act_all(rd, ws[wi], std_roots);
      std::sort(roots.begin(), roots.end(), vec_less);
      std::string k = roots_key(roots);
      if (seen.count(k)) continue;
      seen[k] = (int)out.size();
      out.push_back({(int)wi, y, std::move(roots)});
    }
  }
  return out;
}

Parabolic standard_parabolic(const RootDatum& rd, const IndexSet& y) {
  std::vector<Vec> roots = rd.parabolic_roots(y);
  return {0, y, std::move(roots)};
}

Cone weyl_cone(const RootDatum& rd, const Parabolic& q) {
  std::vector<Vec> ineqs;
  for (const Vec& alpha : q.roots)
    ineqs.push_back(scale(-1, rd.covector(alpha)));
  return Cone::from_ineqs(rd.rank(), std::move(ineqs));
}

Cone weyl_cone(const RootDatum& rd, const IndexSet& y) {
  return weyl_cone(rd, standard_parabolic(rd, y));
}

Cone cone_Ct_of_type_parabolic(const RootDatum& rd, const IndexSet& t,
                               const Parabolic& p) {
  if (p.y != t) throw std::domain_error("parabolic is not of the given type");
  const WeylElement& w = rd.weyl_elements()[p.weyl_index];
  std::vector<Vec> ineqs;
  for (const Vec& alpha : rd.levi_and_radical_roots(t).rad_op)
    ineqs.push_back(rd.covector(rd.act(w, alpha)));
  return Cone::from_ineqs(rd.rank(), std::move(ineqs));
}

Cone cone_Ct_of_Q(const RootDatum& rd, const IndexSet& t, const Parabolic& q) {
  const WeylElement& w = rd.weyl_elements()[q.weyl_index];
  RootDatum::LeviRadical lr_t = rd.levi_and_radical_roots(t);
  std::set<Vec, bool (*)(const Vec&, const Vec&)> levi_q(&vec_less);
  for (const Vec& alpha : rd.levi_and_radical_roots(q.y).levi)
    levi_q.insert(rd.act(w, alpha));
  std::vector<Vec> ineqs, eqs;
  for (const Vec& alpha : lr_t.rad_op) {
    Vec img = rd.act(w, alpha);
    Vec cov = rd.covector(img);
    if (levi_q.count(img))
      eqs.push_back(cov);
    else
      ineqs.push_back(cov);
  }
  return Cone::from_ineqs_eqs(rd.rank(), std::move(ineqs), eqs);
}

Cone cone_Ct_of_Q(const RootDatum& rd, const IndexSet& t, const IndexSet& y) {
  return cone_Ct_of_Q(rd, t, standard_parabolic(rd, y));
}

IndexSet tilde_y(const RootDatum& rd, const IndexSet& t, const IndexSet& y) {
  IndexSet out;
  for (const IndexSet& comp : rd.components(y)) {
    bool meets_outside = std::any_of(comp.begin(), comp.end(),
                                     [&](int i) { return t.count(i) == 0; });
    if (meets_outside) out.insert(comp.begin(), comp.end());
  }
  return out;
}

namespace {

bool orthogonal_to_set(const RootDatum& rd, int i, const IndexSet& s) {
  for (int j : s)
    if (rd.gram()[i][j] != 0) return false;
  return true;
}

}  // namespace

bool is_t_relevant(const RootDatum& rd, const IndexSet& t, const IndexSet& y) {
  IndexSet ty = tilde_y(rd, t, y);
  for (int i : t)
    if (orthogonal_to_set(rd, i, ty) && !y.count(i)) return false;
  return true;
}

IndexSet smallest_t_relevant(const RootDatum& rd, const IndexSet& t,
                             const IndexSet& y) {
  IndexSet ty = tilde_y(rd, t, y);
  IndexSet out = y;
  for (int i : t)
    if (orthogonal_to_set(rd, i, ty)) out.insert(i);
  return out;
}

int Fan::find(const Cone& c) const {
  std::string k = c.key();
  for (size_t i = 0; i < cones.size(); ++i)
    if (cones[i].key() == k) return (int)i;
  return -1;
}

Fan build_fan_Ft(const RootDatum& rd, const IndexSet& t) {
  Fan fan;
  fan.ambient_dim = rd.rank();
  fan.type = t;
  fan.degenerate = rd.degenerate_part(t);
  for (int i = 0; i < rd.rank(); ++i) {
    if (fan.degenerate.count(i)) continue;
    Vec e = zero_vec(rd.rank());
    e[i] = 1;
    fan.quotient_basis.push_back(e);
  }

  struct Entry {
    Cone cone;
    int best = -1;  // parabolic with the largest root set
  };
  std::vector<Parabolic> paras = all_parabolics(rd);
  std::map<std::string, Entry> by_key;
  for (size_t qi = 0; qi < paras.size(); ++qi) {
    Cone c = cone_Ct_of_Q(rd, t, paras[qi]);
    std::string k = c.key();
    auto it = by_key.find(k);
    if (it == by_key.end()) {
      by_key[k] = {std::move(c), (int)qi};
    } else if (paras[qi].roots.size() > paras[it->second.best].roots.size()) {
      it->second.best = (int)qi;
    }
  }
  // Deterministic order: by dimension, then by canonical key.
  std::vector<std::pair<std::string, Entry*>> ordered;
  for (auto& [k, e] : by_key) ordered.emplace_back(k, &e);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) {
                     int da = a.second->cone.dim(), db = b.second->cone.dim();
                     if (da != db) return da < db;
                     return a.first < b.first;
                   });
  for (auto& [k, e] : ordered) {
    int idx = (int)fan.cones.size();
    if (e->cone.dim() == fan.ambient_dim) fan.maximal.push_back(idx);
    fan.cones.push_back(e->cone);
    fan.relevancy.push_back(paras[e->best]);
  }
  return fan;
}

FanCheckResult check_fan_axioms(const Fan& fan, int n_samples, uint64_t seed) {
  FanCheckResult res;
  res.pairwise_ok = true;
  for (size_t i = 0; i < fan.cones.size() && res.pairwise_ok; ++i) {
    for (size_t j = i + 1; j < fan.cones.size(); ++j) {
      Cone meet = fan.cones[i].intersect(fan.cones[j]);
      if (!fan.cones[i].has_face(meet) || !fan.cones[j].has_face(meet)) {
        std::ostringstream os;
        os << "intersection of cones " << i << " and " << j
           << " is not a common face";
        res.detail = os.str();
        res.pairwise_ok = false;
        break;
      }
    }
  }
  res.coverage_ok = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 9);
  for (int s = 0; s < n_samples && res.coverage_ok; ++s) {
    Vec p(fan.ambient_dim);
    for (int i = 0; i < fan.ambient_dim; ++i) p[i] = Rat(num(rng), den(rng));
    bool covered = false;
    for (int mi : fan.maximal)
      if (fan.cones[mi].contains(p)) {
        covered = true;
        break;
      }
    if (!covered) {
      std::ostringstream os;
      os << "sample " << s << " not covered by any maximal cone";
      res.detail = os.str();
      res.coverage_ok = false;
    }
  }
  return res;
}

namespace {

// Irreducible elements of the monoid cut out by a pointed cone, searched in
// the zonotope bounding box of the extreme rays. Vectors are lattice points
// in the coordinates of `cone`.
std::vector<Vec> hilbert_basis_pointed(const Cone& cone) {
  int n = cone.ambient_dim();
  if (cone.gens().empty()) return {};
  std::vector<Int> lo(n, Int(0)), hi(n, Int(0));
  for (const Vec& r : cone.gens()) {
    for (int i = 0; i < n; ++i) {
      Int num = numerator(r[i]);  // rays are primitive integer vectors
      if (num < 0)
        lo[i] += num;
      else
        hi[i] += num;
    }
  }
  std::vector<Vec> candidates;
  Vec cur(n);
  std::function<void(int)> walk = [&](int i) {
    if (i == n) {
      if (!is_zero(cur) && cone.contains(cur)) candidates.push_back(cur);
      return;
    }
    for (Int v = lo[i]; v <= hi[i]; ++v) {
      cur[i] = Rat(v);
      walk(i + 1);
    }
  };
  walk(0);
  std::vector<Vec> basis;
  for (const Vec& x : candidates) {
    bool reducible = false;
    for (const Vec& y : candidates) {
      if (y == x) continue;
      Vec d = sub(x, y);
      if (!is_zero(d) && cone.contains(d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end(), vec_less);
  return basis;
}

}  // namespace

CompactifiedCone compactify_cone(const RootDatum& rd, const Cone& c) {
  if (!c.is_strictly_convex())
    throw std::domain_error("compactify_cone: cone is not strictly convex");
  int n = rd.rank();
  // Dual monoid in fundamental-weight (lattice) coordinates f:
  // chi = sum f_j omega_j must satisfy (chi | g) <= 0 for every generator.
  std::vector<Vec> rows;
  for (const Vec& g : c.gens()) {
    Vec row(n);
    for (int j = 0; j < n; ++j) row[j] = rd.pairing(rd.fundamental_weight(j), g);
    rows.push_back(row);
  }
  CompactifiedCone out;
  out.cone = c;
  std::vector<Vec> basis_f;
  if (rows.empty()) {
    // Dual of the zero cone: the whole lattice.
    for (int j = 0; j < n; ++j) {
      Vec e = zero_vec(n);
      e[j] = 1;
      basis_f.push_back(e);
      basis_f.push_back(scale(-1, e));
    }
  } else {
    auto [kern, comp] = integer_kernel_and_complement(rows);
    if (kern.empty()) {
      basis_f = hilbert_basis_pointed(Cone::from_ineqs(n, rows));
    } else {
      // The dual cone has lineality; split off the saturated kernel lattice
      // and search the pointed image in the complement coordinates.
      int m = (int)comp.size();
      std::vector<Vec> proj_rows;
      for (const Vec& row : rows) {
        Vec pr(m);
        for (int j = 0; j < m; ++j) pr[j] = dot(row, comp[j]);
        proj_rows.push_back(pr);
      }
      std::vector<Vec> img = hilbert_basis_pointed(Cone::from_ineqs(m, proj_rows));
      for (const Vec& k : kern) {
        basis_f.push_back(k);
        basis_f.push_back(scale(-1, k));
      }
      for (const Vec& h : img) {
        Vec f = zero_vec(n);
        for (int j = 0; j < m; ++j) f = add(f, scale(h[j], comp[j]));
        basis_f.push_back(f);
      }
    }
  }
  for (const Vec& f : basis_f)
    out.monoid_basis.push_back(rd.from_fw_coords(f));
  for (const Cone& face : c.faces()) {
    FaceStratum fs;
    fs.face = face;
    for (size_t i = 0; i < out.monoid_basis.size(); ++i) {
      bool vanishes = true;
      for (const Vec& g : face.gens())
        if (rd.pairing(out.monoid_basis[i], g) != 0) vanishes = false;
      if (!vanishes) fs.vanishing.push_back((int)i);
    }
    out.faces.push_back(std::move(fs));
  }
  return out;
}

Vec canonical_rep(const RootDatum& rd, const Cone& stratum, const Vec& u) {
  // Gram-orthogonal basis of span(stratum).
  std::vector<Vec> ortho;
  for (Vec v : stratum.span_basis()) {
    for (const Vec& b : ortho) v = sub(v, scale(rd.pairing(v, b) / rd.pairing(b, b), b));
    if (!is_zero(v)) ortho.push_back(v);
  }
  Vec r = u;
  for (const Vec& b : ortho)
    r = sub(r, scale(rd.pairing(r, b) / rd.pairing(b, b), b));
  return r;
}

ExtendedValue extended_eval(const RootDatum& rd, const Fan& fan, const Vec& chi,
                            const BoundaryPoint& x) {
  if (fan.find(x.stratum) < 0)
    throw std::domain_error("extended_eval: stratum is not a cone of the fan");
  bool on_lin = true;
  for (const Vec& l : x.stratum.lineality())
    if (rd.pairing(chi, l) != 0) on_lin = false;
  bool all_zero = on_lin, all_le = on_lin, all_ge = on_lin;
  for (const Vec& g : x.stratum.gens()) {
    Rat s = rd.pairing(chi, g);
    if (s != 0) all_zero = false;
    if (s > 0) all_le = false;
    if (s < 0) all_ge = false;
  }
  ExtendedValue out;
  if (all_zero) {
    out.tag = ExtendedValue::Tag::finite;
    out.exponent = rd.pairing(chi, x.rep);
  } else if (all_le) {
    out.tag = ExtendedValue::Tag::zero;
  } else {
    // Positive somewhere on the relative interior, or indefinite.
    out.tag = ExtendedValue::Tag::infinite;
  }
  return out;
}

bool check_cone_chain(const RootDatum& rd, const IndexSet& t, const IndexSet& y) {
  Cone weyl = weyl_cone(rd, y);
  Cone ct = cone_Ct_of_Q(rd, t, y);
  Cone ctq = cone_Ct_of_Q(rd, smallest_t_relevant(rd, t, y), y);
  return ct.contains_cone(weyl) && ctq.contains_cone(ct);
}

}  // namespace satake
