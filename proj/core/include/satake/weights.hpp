#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satake/fan.hpp"
#include "satake/rootsys.hpp"

namespace satake {

/// k-weights of an absolutely irreducible representation, without
/// multiplicities. All weights in simple-root coordinates.
struct WeightSystem {
  Vec highest;               // dominant with respect to the standard base
  std::vector<Vec> weights;  // W-stable, sorted, includes `highest`
};

/// Characteristic-zero weight set of the irreducible module with highest
/// weight `hw`: dominant weights below hw, closed under the Weyl group.
/// Throws std::domain_error unless hw is dominant and integral.
WeightSystem weight_system(const RootDatum& rd, const Vec& hw);

/// Indices with strictly positive coefficient in hw - mu.
/// Throws std::domain_error unless hw - mu is a nonnegative integer
/// combination of simple roots.
IndexSet support(const RootDatum& rd, const Vec& hw, const Vec& mu);

/// w(lambda0) for the base w(Delta); checked to be the unique dominant
/// element of ws with respect to that base.
Vec highest_weight_wrt_basis(const RootDatum& rd, const WeightSystem& ws,
                             int weyl_index);

/// Z = { alpha in Delta : (lambda0 | alpha) = 0 }.
IndexSet z_set(const RootDatum& rd, const WeightSystem& ws);

/// Connectivity of the graph on Y plus a vertex for lambda0, with edges
/// given by non-orthogonality.
bool is_admissible_graph(const RootDatum& rd, const WeightSystem& ws,
                         const IndexSet& y);

/// Searches the weight set for mu with support(lambda0 - mu) = y.
std::pair<bool, std::optional<Vec>> is_admissible_support(
    const RootDatum& rd, const WeightSystem& ws, const IndexSet& y);

/// Constructive witness: an ordering of Y such that reflecting lambda0 by
/// the prefix roots yields a weight supported exactly on the prefix.
struct ReflectionWitness {
  std::vector<int> order;          // simple-root indices, all of Y
  std::vector<Vec> prefix_weights; // weight after each reflection
  Vec final_weight;
};
ReflectionWitness reflection_witness(const RootDatum& rd,
                                     const WeightSystem& ws, const IndexSet& y);

/// Y* = { alpha in Delta : (alpha | lambda0) = 0 and (alpha | Y) = 0 }.
IndexSet y_star(const RootDatum& rd, const WeightSystem& ws, const IndexSet& y);

/// C_Y: (alpha | u) = 0 for alpha in Y and (lambda0 - lambda | u) >= 0 for
/// every weight lambda with support not contained in Y.
Cone cone_CY(const RootDatum& rd, const WeightSystem& ws, const IndexSet& y);

struct RepTypes {
  IndexSet tau;           // type of P_Z
  IndexSet t_rho;         // split case: equals tau
  IndexSet t_rho_check;   // same set for the dual highest weight -w0(lambda0)
};
RepTypes rep_types(const RootDatum& rd, const WeightSystem& ws);

/// Dual highest weight -w0(lambda0).
Vec dual_highest_weight(const RootDatum& rd, const WeightSystem& ws);

/// True if lambda0 is non-orthogonal to at least one root of every Dynkin
/// component (the combinatorial consequence of faithfulness used here).
bool is_faithful_like(const RootDatum& rd, const WeightSystem& ws);

struct FanComparisonReport {
  std::vector<IndexSet> admissible;
  bool cones_equal = false;  // C_Y = C_tau(P_Y) for every admissible Y
  bool bijection_ok = false; // Y -> Y union Y* onto tau-relevant subsets
  std::string detail;
  bool ok() const { return cones_equal && bijection_ok; }
};

FanComparisonReport compare_CY_fan_with_Ft(const RootDatum& rd,
                                           const WeightSystem& ws);

}  // namespace satake
