#include "satake/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace satake {

namespace {

// Clears denominators and content but keeps the direction: rays and
// inequality normals are sign-sensitive.
Vec primitive_dir(const Vec& v) {
  Vec p = primitive(v);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if ((v[i] < 0) != (p[i] < 0)) return scale(-1, p);
    break;
  }
  return p;
}

struct DDState {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

std::set<int> zero_set(const Vec& r, const std::vector<Vec>& processed) {
  std::set<int> z;
  for (size_t j = 0; j < processed.size(); ++j)
    if (dot(processed[j], r) == 0) z.insert((int)j);
  return z;
}

void dedup_rays(std::vector<Vec>& rays) {
  std::sort(rays.begin(), rays.end(), vec_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

// Incremental double description: intersect the full space with the
// half-spaces a . x <= 0 one at a time.
DDState dd(int dim, const std::vector<Vec>& ineqs) {
  DDState st;
  for (int i = 0; i < dim; ++i) {
    Vec e = zero_vec(dim);
    e[i] = 1;
    st.lineality.push_back(e);
  }
  std::vector<Vec> processed;
  for (const Vec& a : ineqs) {
    int split = -1;
    for (size_t i = 0; i < st.lineality.size(); ++i)
      if (dot(a, st.lineality[i]) != 0) {
        split = (int)i;
        break;
      }
    if (split >= 0) {
      Vec v = st.lineality[split];
      Rat c = dot(a, v);
      if (c > 0) {
        v = scale(-1, v);
        c = -c;
      }
      std::vector<Vec> new_lin;
      for (size_t i = 0; i < st.lineality.size(); ++i) {
        if ((int)i == split) continue;
        const Vec& l = st.lineality[i];
        new_lin.push_back(primitive(sub(l, scale(dot(a, l) / c, v))));
      }
      std::vector<Vec> new_rays;
      for (const Vec& r : st.rays)
        new_rays.push_back(primitive_dir(sub(r, scale(dot(a, r) / c, v))));
      new_rays.push_back(primitive_dir(v));
      st.lineality = std::move(new_lin);
      st.rays = std::move(new_rays);
      dedup_rays(st.rays);
    } else {
      std::vector<Vec> neg, zero, pos;
      for (const Vec& r : st.rays) {
        Rat s = dot(a, r);
        if (s < 0)
          neg.push_back(r);
        else if (s == 0)
          zero.push_back(r);
        else
          pos.push_back(r);
      }
      if (pos.empty()) {
        processed.push_back(a);
        continue;
      }
      std::vector<std::set<int>> zsets;
      for (const Vec& r : st.rays) zsets.push_back(zero_set(r, processed));
      auto zset_of = [&](const Vec& r) -> const std::set<int>& {
        for (size_t i = 0; i < st.rays.size(); ++i)
          if (st.rays[i] == r) return zsets[i];
        throw std::logic_error("dd: ray lookup failed");
      };
      std::vector<Vec> combined;
      for (const Vec& p : pos) {
        for (const Vec& n : neg) {
          const std::set<int>& zp = zset_of(p);
          const std::set<int>& zn = zset_of(n);
          std::set<int> t;
          std::set_intersection(zp.begin(), zp.end(), zn.begin(), zn.end(),
                                std::inserter(t, t.begin()));
          bool adjacent = true;
          for (size_t i = 0; i < st.rays.size() && adjacent; ++i) {
            if (st.rays[i] == p || st.rays[i] == n) continue;
            if (std::includes(zsets[i].begin(), zsets[i].end(), t.begin(),
                              t.end()))
              adjacent = false;
          }
          if (!adjacent) continue;
          Vec w = sub(scale(dot(a, p), n), scale(dot(a, n), p));
          if (!satake::is_zero(w)) combined.push_back(primitive_dir(w));
        }
      }
      std::vector<Vec> new_rays = neg;
      new_rays.insert(new_rays.end(), zero.begin(), zero.end());
      new_rays.insert(new_rays.end(), combined.begin(), combined.end());
      dedup_rays(new_rays);
      st.rays = std::move(new_rays);
    }
    processed.push_back(a);
  }
  return st;
}

// Orthogonalized (not normalized) copy of basis for rational projections.
std::vector<Vec> orthogonalize(const std::vector<Vec>& basis) {
  std::vector<Vec> ortho;
  for (Vec v : basis) {
    for (const Vec& b : ortho) {
      Rat bb = dot(b, b);
      if (bb != 0) v = sub(v, scale(dot(v, b) / bb, b));
    }
    if (!satake::is_zero(v)) ortho.push_back(v);
  }
  return ortho;
}

Vec project_off(const Vec& v, const std::vector<Vec>& ortho) {
  Vec r = v;
  for (const Vec& b : ortho) {
    Rat bb = dot(b, b);
    if (bb != 0) r = sub(r, scale(dot(r, b) / bb, b));
  }
  return r;
}

}  // namespace

void Cone::canonicalize() {
  // Canonical lineality basis: RREF rows, primitive.
  if (!lineality_.empty()) {
    Mat l = lineality_;
    int rk = rref(l);
    l.resize(rk);
    for (Vec& v : l) v = primitive(v);
    lineality_ = l;
  }
  // Rays reduced modulo the lineality space.
  std::vector<Vec> ortho = orthogonalize(lineality_);
  std::vector<Vec> reduced;
  for (const Vec& r : gens_) {
    Vec p = project_off(r, ortho);
    if (!satake::is_zero(p)) reduced.push_back(primitive_dir(p));
  }
  dedup_rays(reduced);
  gens_ = std::move(reduced);
  // Normalized inequality list.
  std::vector<Vec> in;
  for (const Vec& a : ineqs_)
    if (!satake::is_zero(a)) in.push_back(primitive_dir(a));
  std::sort(in.begin(), in.end(), vec_less);
  in.erase(std::unique(in.begin(), in.end()), in.end());
  ineqs_ = std::move(in);
}

Cone Cone::from_ineqs(int dim, std::vector<Vec> ineqs) {
  Cone c;
  c.dim_ = dim;
  c.ineqs_ = std::move(ineqs);
  DDState st = dd(dim, c.ineqs_);
  c.gens_ = st.rays;
  c.lineality_ = st.lineality;
  c.canonicalize();
  return c;
}

Cone Cone::from_ineqs_eqs(int dim, std::vector<Vec> ineqs,
                          const std::vector<Vec>& eqs) {
  for (const Vec& e : eqs) {
    ineqs.push_back(e);
    ineqs.push_back(scale(-1, e));
  }
  return from_ineqs(dim, std::move(ineqs));
}

Cone Cone::from_gens(int dim, const std::vector<Vec>& gens,
                     const std::vector<Vec>& lineality) {
  std::vector<Vec> dual_ineqs;
  for (const Vec& g : gens)
    if (!satake::is_zero(g)) dual_ineqs.push_back(g);
  for (const Vec& l : lineality) {
    if (satake::is_zero(l)) continue;
    dual_ineqs.push_back(l);
    dual_ineqs.push_back(scale(-1, l));
  }
  DDState dual = dd(dim, dual_ineqs);
  std::vector<Vec> ineqs = dual.rays;
  for (const Vec& l : dual.lineality) {
    ineqs.push_back(l);
    ineqs.push_back(scale(-1, l));
  }
  return from_ineqs(dim, std::move(ineqs));
}

Cone Cone::full_space(int dim) { return from_ineqs(dim, {}); }

int Cone::dim() const {
  Mat m = gens_;
  m.insert(m.end(), lineality_.begin(), lineality_.end());
  return rank_of(m);
}

bool Cone::contains(const Vec& x) const {
  for (const Vec& a : ineqs_)
    if (dot(a, x) > 0) return false;
  return true;
}

bool Cone::contains_in_relint(const Vec& x) const {
  for (const Vec& a : ineqs_) {
    bool vanishes_on_cone = true;
    for (const Vec& g : gens_)
      if (dot(a, g) != 0) vanishes_on_cone = false;
    for (const Vec& l : lineality_)
      if (dot(a, l) != 0) vanishes_on_cone = false;
    Rat s = dot(a, x);
    if (vanishes_on_cone) {
      if (s != 0) return false;
    } else if (s >= 0) {
      return false;
    }
  }
  return true;
}

bool Cone::contains_cone(const Cone& other) const {
  for (const Vec& g : other.gens_)
    if (!contains(g)) return false;
  for (const Vec& l : other.lineality_)
    if (!contains(l) || !contains(scale(-1, l))) return false;
  return true;
}

bool Cone::equals(const Cone& other) const {
  return contains_cone(other) && other.contains_cone(*this);
}

Cone Cone::intersect(const Cone& other) const {
  std::vector<Vec> in = ineqs_;
  in.insert(in.end(), other.ineqs_.begin(), other.ineqs_.end());
  return from_ineqs(dim_, std::move(in));
}

bool Cone::has_face(const Cone& face) const {
  if (!contains_cone(face)) return false;
  // The lineality space lies in every face.
  for (const Vec& l : lineality_)
    if (!face.contains(l) || !face.contains(scale(-1, l))) return false;
  // phi = sum of all inequalities tight on the candidate face; the exposed
  // face cut out by phi is generated by the tight rays plus the lineality.
  Vec phi = zero_vec(dim_);
  for (const Vec& a : ineqs_) {
    bool tight = true;
    for (const Vec& g : face.gens_)
      if (dot(a, g) != 0) tight = false;
    for (const Vec& l : face.lineality_)
      if (dot(a, l) != 0) tight = false;
    if (tight) phi = add(phi, a);
  }
  for (const Vec& r : gens_)
    if (dot(phi, r) == 0 && !face.contains(r)) return false;
  return true;
}

std::vector<Cone> Cone::faces() const {
  std::vector<Cone> out;
  collect_faces(*this, out);
  return out;
}

Vec Cone::interior_point() const {
  Vec p = zero_vec(dim_);
  for (const Vec& g : gens_) p = add(p, g);
  return p;
}

std::vector<Vec> Cone::span_basis() const {
  Mat m = gens_;
  m.insert(m.end(), lineality_.begin(), lineality_.end());
  int rk = rref(m);
  m.resize(rk);
  for (Vec& v : m) v = primitive(v);
  return m;
}

std::string Cone::key() const {
  std::ostringstream os;
  os << "L:";
  for (const Vec& l : lineality_) {
    for (const Rat& x : l) os << rat_to_string(x) << ",";
    os << ";";
  }
  os << "R:";
  for (const Vec& g : gens_) {
    for (const Rat& x : g) os << rat_to_string(x) << ",";
    os << ";";
  }
  return os.str();
}

Cone Cone::polar() const {
  std::vector<Vec> in;
  for (const Vec& g : gens_) in.push_back(g);
  for (const Vec& l : lineality_) {
    in.push_back(l);
    in.push_back(scale(-1, l));
  }
  return from_ineqs(dim_, std::move(in));
}

void collect_faces(const Cone& cone, std::vector<Cone>& out) {
  std::set<std::string> seen;
  std::vector<Cone> stack{cone};
  while (!stack.empty()) {
    Cone c = stack.back();
    stack.pop_back();
    if (!seen.insert(c.key()).second) continue;
    out.push_back(c);
    for (const Vec& a : c.ineqs()) {
      Cone sub = Cone::from_ineqs_eqs(c.ambient_dim(), c.ineqs(), {a});
      if (sub.key() == c.key()) continue;
      if (!seen.count(sub.key())) stack.push_back(sub);
    }
  }
}

}  // namespace satake
