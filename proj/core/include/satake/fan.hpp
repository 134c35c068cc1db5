#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "satake/cone.hpp"
#include "satake/rootsys.hpp"

namespace satake {

/// Parabolic subgroup containing S, presented as w P_Y w^{-1}. The root set
/// is the canonical identity used for deduplication.
struct Parabolic {
  int weyl_index = 0;
  IndexSet y;
  std::vector<Vec> roots;  // sorted
};

/// All parabolic subgroups containing S, one entry per distinct root set.
std::vector<Parabolic> all_parabolics(const RootDatum& rd);

Parabolic standard_parabolic(const RootDatum& rd, const IndexSet& y);

/// Weyl cone: { u : (alpha | u) >= 0 for all roots alpha of the parabolic }.
Cone weyl_cone(const RootDatum& rd, const Parabolic& q);
Cone weyl_cone(const RootDatum& rd, const IndexSet& y);

/// C_t(P) for a type-t parabolic P: cut out by the opposite radical roots.
Cone cone_Ct_of_type_parabolic(const RootDatum& rd, const IndexSet& t,
                               const Parabolic& p);

/// Smallest cone of F_t containing the Weyl cone of Q: the face of C_t(P)
/// cut out by the Levi roots of Q among the defining inequalities, for an
/// osculatory type-t parabolic P.
Cone cone_Ct_of_Q(const RootDatum& rd, const IndexSet& t, const Parabolic& q);
Cone cone_Ct_of_Q(const RootDatum& rd, const IndexSet& t, const IndexSet& y);

/// Union of the connected components of Y meeting Delta - Y_t.
IndexSet tilde_y(const RootDatum& rd, const IndexSet& t, const IndexSet& y);

bool is_t_relevant(const RootDatum& rd, const IndexSet& t, const IndexSet& y);
IndexSet smallest_t_relevant(const RootDatum& rd, const IndexSet& t,
                             const IndexSet& y);

struct Fan {
  int ambient_dim = 0;
  IndexSet type;
  IndexSet degenerate;  // simple roots of Dynkin components inside the type
  /// Basis of a complement to span(Phi'') (the whole space if non-degenerate).
  std::vector<Vec> quotient_basis;
  std::vector<Cone> cones;
  std::vector<int> maximal;              // indices of the cones C_t(P)
  std::vector<Parabolic> relevancy;      // largest parabolic per cone
  int quotient_dim() const { return ambient_dim - (int)degenerate.size(); }

  /// Index of the cone equal to `c`, or -1.
  int find(const Cone& c) const;
};

Fan build_fan_Ft(const RootDatum& rd, const IndexSet& t);

struct FanCheckResult {
  bool pairwise_ok = false;
  bool coverage_ok = false;
  std::string detail;
};

/// Exact pairwise intersection-is-a-common-face check plus randomized
/// coverage sampling against the maximal cones.
FanCheckResult check_fan_axioms(const Fan& fan, int n_samples, uint64_t seed);

struct FaceStratum {
  Cone face;
  std::vector<int> vanishing;  // monoid basis elements that are 0 on the stratum
};

struct CompactifiedCone {
  Cone cone;
  /// Hilbert generating set of M = { chi in the weight lattice :
  /// (chi | .) <= 0 on the cone }, characters in simple-root coordinates.
  std::vector<Vec> monoid_basis;
  std::vector<FaceStratum> faces;
};

/// Requires a strictly convex cone; throws std::domain_error otherwise.
CompactifiedCone compactify_cone(const RootDatum& rd, const Cone& c);

/// Point of the compactified apartment: stratum cone of a fan plus a
/// residual vector, meaningful modulo the span of the stratum.
struct BoundaryPoint {
  Cone stratum;
  Vec rep;
};

/// Reduces the representative modulo span(stratum) by gram-orthogonal
/// projection, making equality decidable.
Vec canonical_rep(const RootDatum& rd, const Cone& stratum, const Vec& u);

struct ExtendedValue {
  enum class Tag { zero, finite, infinite };
  Tag tag = Tag::finite;
  Rat exponent;  // multiplicative value q^exponent, present iff finite
};

/// Upper semicontinuous extension of a character to the boundary stratum.
ExtendedValue extended_eval(const RootDatum& rd, const Fan& fan, const Vec& chi,
                            const BoundaryPoint& x);

/// Cone chain c(Q) subset C_t(Q) subset C_{t(Q)}(Q), where t(Q) is the type
/// of the smallest t-relevant parabolic containing Q.
bool check_cone_chain(const RootDatum& rd, const IndexSet& t, const IndexSet& y);

}  // namespace satake
