#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satake/linalg.hpp"

namespace satake {

/// Rational polyhedral cone kept in both descriptions:
///   H-form: { x : a . x <= 0 for every a in ineqs (plain dot product) }
///   V-form: cone(gens) + span(lineality)
/// Both are maintained by double-description conversion; gens are the
/// extreme rays modulo lineality, primitive.
class Cone {
public:
  static Cone from_ineqs(int dim, std::vector<Vec> ineqs);
  static Cone from_ineqs_eqs(int dim, std::vector<Vec> ineqs,
                             const std::vector<Vec>& eqs);
  static Cone from_gens(int dim, const std::vector<Vec>& gens,
                        const std::vector<Vec>& lineality = {});
  static Cone full_space(int dim);

  int ambient_dim() const { return dim_; }
  const std::vector<Vec>& ineqs() const { return ineqs_; }
  const std::vector<Vec>& gens() const { return gens_; }
  const std::vector<Vec>& lineality() const { return lineality_; }

  /// Dimension of the linear span of the cone.
  int dim() const;
  bool is_strictly_convex() const { return lineality_.empty(); }
  bool is_zero() const { return gens_.empty() && lineality_.empty(); }

  bool contains(const Vec& x) const;
  /// Membership in the relative interior.
  bool contains_in_relint(const Vec& x) const;
  bool contains_cone(const Cone& other) const;
  bool equals(const Cone& other) const;

  Cone intersect(const Cone& other) const;
  /// Exact test: is `face` a face of this cone?
  bool has_face(const Cone& face) const;

  /// All faces including the cone itself and its minimal face.
  std::vector<Cone> faces() const;

  /// A point in the relative interior: sum of generators (plus nothing from
  /// the lineality). Zero for the zero cone.
  Vec interior_point() const;

  /// Basis of the linear span.
  std::vector<Vec> span_basis() const;

  /// Deterministic comparison key (used for sorting / dedup).
  std::string key() const;

  /// The polar cone { a : a . x <= 0 on this cone }.
  Cone polar() const;

private:
  int dim_ = 0;
  std::vector<Vec> ineqs_;
  std::vector<Vec> gens_;
  std::vector<Vec> lineality_;

  void canonicalize();
};

/// Appends `face` and recursively all of its faces to `out` (deduplicated).
void collect_faces(const Cone& cone, std::vector<Cone>& out);

}  // namespace satake
