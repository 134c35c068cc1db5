#pragma once

#include <set>
#include <string>
#include <vector>

#include "satake/linalg.hpp"

namespace satake {

/// Subset of the simple-root indices {0..rank-1} relative to the fixed base.
using IndexSet = std::set<int>;

struct WeylElement {
  std::vector<int> word;  // simple-reflection indices, reduced
  Mat matrix;             // action on simple-root coordinates
};

/// Split root system with a fixed W-invariant scalar product.
///
/// All roots and weights are stored as coordinate vectors in the basis of
/// simple roots; the pairing between characters and apartment points is
/// (chi | u) computed with the Gram matrix. The Gram matrix symmetrizes the
/// Cartan matrix with minimal positive integer root lengths (short roots of
/// squared length 2).
class RootDatum {
public:
  /// Supported labels: A1..A4, B2, B3, C3, D4, G2.
  static RootDatum build(const std::string& label);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  const Mat& cartan() const { return cartan_; }
  const Mat& gram() const { return gram_; }
  /// Simple roots in their own coordinates: the identity basis.
  const Mat& simple_roots() const { return simple_roots_; }
  const std::vector<Vec>& roots() const { return roots_; }
  const std::vector<Vec>& positive_roots() const { return positive_roots_; }

  /// (a | b) with respect to the invariant product.
  Rat pairing(const Vec& a, const Vec& b) const;
  /// gram * chi: the functional u -> (chi | u) as a plain covector.
  Vec covector(const Vec& chi) const;

  /// <v, alpha_i^vee> = 2 (v | alpha_i) / (alpha_i | alpha_i).
  Rat coroot_pairing(const Vec& v, int i) const;
  /// Simple reflection applied to a coordinate vector.
  Vec reflect_simple(int i, const Vec& v) const;
  /// Reflection in an arbitrary root.
  Vec reflect_root(const Vec& root, const Vec& v) const;

  /// Fundamental weight omega_i in simple-root coordinates.
  Vec fundamental_weight(int i) const;
  /// Converts fundamental-weight coordinates to simple-root coordinates.
  Vec from_fw_coords(const Vec& fw) const;
  /// Converts simple-root coordinates to fundamental-weight coordinates.
  Vec to_fw_coords(const Vec& v) const;

  const std::vector<WeylElement>& weyl_elements() const;
  /// Index of the longest element.
  int longest_element() const;
  /// Applies Weyl element w to a coordinate vector.
  Vec act(const WeylElement& w, const Vec& v) const;

  /// All |W| bases w(Delta), paired with the acting element's index.
  std::vector<std::pair<int, Mat>> all_bases() const;

  bool is_root(const Vec& v) const;
  bool is_positive_root(const Vec& v) const;

  /// Connected components of a subset of Delta in the Dynkin diagram.
  std::vector<IndexSet> components(const IndexSet& y) const;
  /// Simple roots of Dynkin components entirely contained in t.
  IndexSet degenerate_part(const IndexSet& t) const;

  /// Levi roots, radical roots, opposite radical roots of the standard
  /// parabolic P_Y. The three sets partition Phi.
  struct LeviRadical {
    std::vector<Vec> levi;
    std::vector<Vec> rad;
    std::vector<Vec> rad_op;
  };
  LeviRadical levi_and_radical_roots(const IndexSet& y) const;

  /// Root set of the standard parabolic P_Y: Levi plus radical roots.
  std::vector<Vec> parabolic_roots(const IndexSet& y) const;

private:
  std::string label_;
  int rank_ = 0;
  Mat cartan_;
  Mat gram_;
  Mat simple_roots_;
  Mat inv_cartan_;
  std::vector<Vec> roots_;
  std::vector<Vec> positive_roots_;
  std::set<Vec, bool (*)(const Vec&, const Vec&)> root_set_{&vec_less};
  mutable std::vector<WeylElement> weyl_;  // computed lazily
  mutable int longest_ = -1;

  void enumerate_roots();
  void enumerate_weyl() const;
};

std::string indexset_to_string(const IndexSet& s);

}  // namespace satake
