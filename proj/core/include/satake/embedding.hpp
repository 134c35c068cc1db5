#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satake/fan.hpp"
#include "satake/seminorm.hpp"
#include "satake/weights.hpp"

namespace satake {

/// Ordered multiplicity-free list of the k-weights, descending in
/// (height, lexicographic) order; entry 0 is the highest weight.
struct WeightList {
  std::vector<Vec> lambdas;
  int d() const { return (int)lambdas.size() - 1; }
};

WeightList weight_list_from_rep(const RootDatum& rd, const WeightSystem& ws);

/// Rows of the map u -> (<lambda_i, u>)_i as plain covectors.
Mat embedding_matrix(const RootDatum& rd, const WeightList& wl);

/// (<lambda_i, u>)_i in log coordinates.
Vec weight_embedding(const RootDatum& rd, const Vec& u, const WeightList& wl);

/// The fan of the cones C_i = { x : sum x = 0, x_i >= x_j } and all their
/// faces, in R^{d+1}.
Fan standard_fan_on_target(int d);

struct PullbackReport {
  int num_weights = 0;
  std::vector<int> full_dim;  // weight indices with full-dimensional preimage
  bool maximal_match = false;
  bool all_cones_match = false;
  std::string detail;
  bool ok() const { return maximal_match && all_cones_match; }
};

/// Pullbacks of the target cones C_i under the
/// weight embedding against the fan F_tau.
PullbackReport pullback_fan_compare(const RootDatum& rd, const WeightSystem& ws,
                                    const WeightList& wl);

/// Monomial evaluation over the opposite radical roots Psi of p:
/// max over terms of (val + sum_alpha nu(alpha) <alpha, u>). Term arity must
/// equal |Psi|; Psi is ordered as returned by opposite_radical_roots.
std::vector<Vec> opposite_radical_roots(const RootDatum& rd, const IndexSet& t,
                                        const Parabolic& p);
ExtRat theta_monomial(const RootDatum& rd, const IndexSet& t, const Parabolic& p,
                      const Vec& u, const ValuedPolynomial& poly);

/// Image of a boundary point of F_tau: limit of the log-affine family
/// a_i = <lambda_i, u>, b_i = <lambda_i, c> with c an interior direction of
/// the stratum cone.
DiagSeminorm map_boundary_point(const RootDatum& rd, const Fan& fan_tau,
                                const WeightList& wl, const BoundaryPoint& x);

/// Same with an explicit interior direction of the stratum cone; throws
/// std::domain_error if the direction is not in the relative interior.
DiagSeminorm map_boundary_point(const RootDatum& rd, const Fan& fan_tau,
                                const WeightList& wl, const BoundaryPoint& x,
                                const Vec& direction);

struct InjectivityReport {
  int num_points = 0;
  int num_collisions = 0;
  std::string detail;
  bool ok() const { return num_collisions == 0; }
};

/// Maps seeded interior points plus base points of every stratum and checks
/// pairwise distinctness of the image classes.
InjectivityReport injectivity_probe(const RootDatum& rd, const WeightSystem& ws,
                                    const WeightList& wl, int n_samples,
                                    uint64_t seed);

/// Verifies the diagonal-model properties of the apartment map: linearity,
/// o -> Gauss class, and Weyl equivariance via weight-list permutations.
bool toral_image_check(const RootDatum& rd, const WeightSystem& ws,
                       const WeightList& wl, int n_samples, uint64_t seed);

}  // namespace satake
