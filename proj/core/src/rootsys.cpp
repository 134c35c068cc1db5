#include "satake/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace satake {

namespace {

// Gram matrices with short roots of squared length 2. Off-diagonal entries
// follow the Dynkin diagram; chains are numbered along the diagram
// (Bourbaki numbering; for D4 node 1 is the center).
Mat gram_for(const std::string& label, int& rank) {
  auto chain = [](int n, const std::vector<Rat>& diag,
                  const std::vector<Rat>& off) {
    Mat g(n, Vec(n, Rat(0)));
    for (int i = 0; i < n; ++i) g[i][i] = diag[i];
    for (int i = 0; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = off[i];
    return g;
  };
  if (label.size() == 2 && label[0] == 'A') {
    int n = label[1] - '0';
    if (n >= 1 && n <= 4) {
      rank = n;
      return chain(n, Vec(n, Rat(2)), Vec(std::max(0, n - 1), Rat(-1)));
    }
  }
  if (label == "B2") {
    rank = 2;  // alpha1 long, alpha2 short
    return chain(2, {4, 2}, {-2});
  }
  if (label == "B3") {
    rank = 3;  // alpha1, alpha2 long, alpha3 short
    return chain(3, {4, 4, 2}, {-2, -2});
  }
  if (label == "C3") {
    rank = 3;  // alpha1, alpha2 short, alpha3 long
    return chain(3, {2, 2, 4}, {-1, -2});
  }
  if (label == "D4") {
    rank = 4;  // node 2 is the center, attached to 1, 3, 4
    Mat g(4, Vec(4, Rat(0)));
    for (int i = 0; i < 4; ++i) g[i][i] = 2;
    g[0][1] = g[1][0] = -1;
    g[1][2] = g[2][1] = -1;
    g[1][3] = g[3][1] = -1;
    return g;
  }
  if (label == "G2") {
    rank = 2;  // alpha1 short, alpha2 long
    return chain(2, {2, 6}, {-3});
  }
  throw std::invalid_argument("unsupported Dynkin type: " + label);
}

}  // namespace

RootDatum RootDatum::build(const std::string& label) {
  RootDatum rd;
  rd.label_ = label;
  rd.gram_ = gram_for(label, rd.rank_);
  int n = rd.rank_;
  rd.cartan_ = Mat(n, Vec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rd.cartan_[i][j] = 2 * rd.gram_[i][j] / rd.gram_[j][j];
  rd.simple_roots_ = identity(n);
  rd.inv_cartan_ = inverse(rd.cartan_);
  rd.enumerate_roots();
  return rd;
}

void RootDatum::enumerate_roots() {
  std::deque<Vec> queue;
  for (int i = 0; i < rank_; ++i) {
    Vec a = zero_vec(rank_);
    a[i] = 1;
    if (root_set_.insert(a).second) queue.push_back(a);
    Vec na = scale(-1, a);
    if (root_set_.insert(na).second) queue.push_back(na);
  }
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      Vec w = reflect_simple(i, v);
      if (root_set_.insert(w).second) queue.push_back(w);
    }
  }
  roots_.assign(root_set_.begin(), root_set_.end());
  for (const Vec& r : roots_)
    if (is_positive_root(r)) positive_roots_.push_back(r);
}

Rat RootDatum::pairing(const Vec& a, const Vec& b) const {
  return dot(a, mat_vec(gram_, b));
}

Vec RootDatum::covector(const Vec& chi) const { return mat_vec(gram_, chi); }

Rat RootDatum::coroot_pairing(const Vec& v, int i) const {
  Vec alpha = zero_vec(rank_);
  alpha[i] = 1;
  return 2 * pairing(v, alpha) / gram_[i][i];
}

Vec RootDatum::reflect_simple(int i, const Vec& v) const {
  Rat c = coroot_pairing(v, i);
  Vec r = v;
  r[i] -= c;
  return r;
}

Vec RootDatum::reflect_root(const Vec& root, const Vec& v) const {
  Rat c = 2 * pairing(v, root) / pairing(root, root);
  return sub(v, scale(c, root));
}

Vec RootDatum::fundamental_weight(int i) const {
  Vec fw = zero_vec(rank_);
  fw[i] = 1;
  return from_fw_coords(fw);
}

Vec RootDatum::from_fw_coords(const Vec& fw) const {
  // fw = m * cartan for simple-root coordinates m (as row vectors).
  return mat_vec(transpose(inv_cartan_), fw);
}

Vec RootDatum::to_fw_coords(const Vec& v) const {
  return mat_vec(transpose(cartan_), v);
}

void RootDatum::enumerate_weyl() const {
  if (!weyl_.empty()) return;
  std::vector<Mat> gens(rank_);
  for (int i = 0; i < rank_; ++i) {
    Mat m(rank_, Vec(rank_, Rat(0)));
    for (int j = 0; j < rank_; ++j) {
      Vec ej = zero_vec(rank_);
      ej[j] = 1;
      Vec img = reflect_simple(i, ej);
      for (int r = 0; r < rank_; ++r) m[r][j] = img[r];
    }
    gens[i] = m;
  }
  std::map<Mat, int> seen;
  std::deque<int> queue;
  weyl_.push_back({{}, identity(rank_)});
  seen[weyl_[0].matrix] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      Mat next = mat_mul(gens[i], weyl_[cur].matrix);
      if (seen.count(next)) continue;
      std::vector<int> word = weyl_[cur].word;
      word.insert(word.begin(), i);  // left multiplication
      seen[next] = (int)weyl_.size();
      weyl_.push_back({word, next});
      queue.push_back((int)weyl_.size() - 1);
    }
  }
  size_t longest_len = 0;
  for (size_t i = 0; i < weyl_.size(); ++i)
    if (weyl_[i].word.size() >= longest_len) {
      longest_len = weyl_[i].word.size();
      longest_ = (int)i;
    }
}

const std::vector<WeylElement>& RootDatum::weyl_elements() const {
  enumerate_weyl();
  return weyl_;
}

int RootDatum::longest_element() const {
  enumerate_weyl();
  return longest_;
}

Vec RootDatum::act(const WeylElement& w, const Vec& v) const {
  return mat_vec(w.matrix, v);
}

std::vector<std::pair<int, Mat>> RootDatum::all_bases() const {
  std::vector<std::pair<int, Mat>> bases;
  const auto& ws = weyl_elements();
  for (size_t i = 0; i < ws.size(); ++i) {
    Mat basis(rank_);
    for (int j = 0; j < rank_; ++j) {
      Vec ej = zero_vec(rank_);
      ej[j] = 1;
      basis[j] = act(ws[i], ej);
    }
    bases.emplace_back((int)i, basis);
  }
  return bases;
}

bool RootDatum::is_root(const Vec& v) const { return root_set_.count(v) > 0; }

bool RootDatum::is_positive_root(const Vec& v) const {
  if (!is_root(v)) return false;
  for (const Rat& x : v)
    if (x < 0) return false;
  return true;
}

std::vector<IndexSet> RootDatum::components(const IndexSet& y) const {
  std::vector<IndexSet> comps;
  IndexSet todo = y;
  while (!todo.empty()) {
    IndexSet comp;
    std::deque<int> queue{*todo.begin()};
    todo.erase(todo.begin());
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      comp.insert(i);
      for (auto it = todo.begin(); it != todo.end();) {
        if (gram_[i][*it] != 0) {
          queue.push_back(*it);
          it = todo.erase(it);
        } else {
          ++it;
        }
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

IndexSet RootDatum::degenerate_part(const IndexSet& t) const {
  IndexSet all;
  for (int i = 0; i < rank_; ++i) all.insert(i);
  IndexSet deg;
  for (const IndexSet& comp : components(all)) {
    bool inside = std::all_of(comp.begin(), comp.end(),
                              [&](int i) { return t.count(i) > 0; });
    if (inside) deg.insert(comp.begin(), comp.end());
  }
  return deg;
}

RootDatum::LeviRadical RootDatum::levi_and_radical_roots(const IndexSet& y) const {
  LeviRadical out;
  // Levi roots: integer combinations of Y, i.e. support inside Y.
  for (const Vec& r : roots_) {
    bool in_span = true;
    for (int i = 0; i < rank_; ++i)
      if (r[i] != 0 && !y.count(i)) in_span = false;
    if (in_span) out.levi.push_back(r);
  }
  for (const Vec& r : positive_roots_) {
    bool in_levi = std::find(out.levi.begin(), out.levi.end(), r) != out.levi.end();
    if (!in_levi) {
      out.rad.push_back(r);
      out.rad_op.push_back(scale(-1, r));
    }
  }
  return out;
}

std::vector<Vec> RootDatum::parabolic_roots(const IndexSet& y) const {
  LeviRadical lr = levi_and_radical_roots(y);
  std::vector<Vec> all = lr.levi;
  all.insert(all.end(), lr.rad.begin(), lr.rad.end());
  std::sort(all.begin(), all.end(), vec_less);
  return all;
}

std::string indexset_to_string(const IndexSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : s) {
    if (!first) os << ",";
    os << (i + 1);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace satake
