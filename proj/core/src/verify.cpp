#include "satake/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "satake/embedding.hpp"
#include "satake/fan.hpp"
#include "satake/seminorm.hpp"
#include "satake/weights.hpp"

namespace satake {

namespace {

constexpr int kCoverageSamples = 1000;
constexpr int kSequenceCases = 100;
constexpr double kSequenceN = 1e6;
constexpr double kSequenceQ = 2.0;
constexpr double kSequenceTol = 1e-6;
constexpr int kCanonicalCases = 1000;
constexpr int kUnitMonomialCases = 200;
constexpr int kDominationCases = 100;
constexpr int kInteriorSamples = 50;

std::vector<IndexSet> all_subsets(int n) {
  std::vector<IndexSet> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    IndexSet s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.insert(i);
    out.push_back(s);
  }
  return out;
}

std::vector<Vec> lambda_sweep(const RootDatum& rd) {
  std::vector<Vec> out;
  for (int i = 0; i < rd.rank(); ++i) out.push_back(rd.fundamental_weight(i));
  out.push_back(rd.from_fw_coords(Vec(rd.rank(), Rat(1))));  // rho
  return out;
}

int thread_count(size_t jobs) {
  int n = (int)std::thread::hardware_concurrency();
  if (const char* env = std::getenv("SATAKE_FANS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) n = v;
  }
  if (n < 1) n = 1;
  return std::min<int>(n, (int)std::max<size_t>(jobs, 1));
}

// Runs jobs on worker threads; outputs are written by index, so the
// aggregate is deterministic regardless of schedule.
void parallel_for(size_t jobs, const std::function<void(size_t)>& fn) {
  int workers = thread_count(jobs);
  if (workers <= 1) {
    for (size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&]() {
      for (size_t i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& msg) {
    if (ok) detail << msg;
    ok = false;
  }
};

// 1: every fan of the sweep satisfies the fan axioms.
void criterion_fan_axioms(Check& c, uint64_t seed) {
  struct Job {
    std::string label;
    IndexSet t;
    bool ok = true;
    std::string msg;
  };
  std::vector<Job> jobs;
  for (const std::string& label : sweep_labels()) {
    int n = RootDatum::build(label).rank();
    for (const IndexSet& t : all_subsets(n)) jobs.push_back({label, t});
  }
  parallel_for(jobs.size(), [&](size_t i) {
    Job& job = jobs[i];
    RootDatum rd = RootDatum::build(job.label);
    Fan fan = build_fan_Ft(rd, job.t);
    FanCheckResult res = check_fan_axioms(fan, kCoverageSamples, seed + i);
    if (!res.pairwise_ok || !res.coverage_ok) {
      job.ok = false;
      job.msg = job.label + " t=" + indexset_to_string(job.t) + ": " + res.detail;
    }
    // Strict convexity of the maximal cones iff the type is non-degenerate.
    for (int mi : fan.maximal)
      if (fan.cones[mi].is_strictly_convex() != fan.degenerate.empty()) {
        job.ok = false;
        job.msg = job.label + " t=" + indexset_to_string(job.t) +
                  ": convexity/degeneracy mismatch";
      }
  });
  for (const Job& job : jobs)
    if (!job.ok) c.fail(job.msg);
}

// 2: cone counts match the relevant-parabolic counts.
void criterion_relevant_bijection(Check& c, bool inject_fault) {
  for (const std::string& label : sweep_labels()) {
    RootDatum rd = RootDatum::build(label);
    for (const IndexSet& t : all_subsets(rd.rank())) {
      Fan fan = build_fan_Ft(rd, t);
      // Cones attached to standard parabolics vs relevant standard subsets.
      std::set<std::string> standard_cones;
      int relevant_standard = 0;
      for (const IndexSet& y : all_subsets(rd.rank())) {
        standard_cones.insert(cone_Ct_of_Q(rd, t, y).key());
        if (is_t_relevant(rd, t, y)) ++relevant_standard;
      }
      if ((int)standard_cones.size() != relevant_standard) {
        std::ostringstream os;
        os << label << " t=" << indexset_to_string(t) << ": "
           << standard_cones.size() << " standard cones vs "
           << relevant_standard << " relevant standard subsets";
        c.fail(os.str());
      }
      // The smallest relevant subset over Q defines the same cone as Q.
      for (const IndexSet& y : all_subsets(rd.rank())) {
        IndexSet y2 = smallest_t_relevant(rd, t, y);
        if (!is_t_relevant(rd, t, y2))
          c.fail(label + ": smallest relevant subset fails the relevancy test");
        if (cone_Ct_of_Q(rd, t, y).key() != cone_Ct_of_Q(rd, t, y2).key())
          c.fail(label + ": cone changes when passing to the smallest relevant subset");
      }
    }
  }
  RootDatum a2 = RootDatum::build("A2");
  Fan f = build_fan_Ft(a2, IndexSet{1});
  size_t expect_cones = inject_fault ? 8 : 7;
  if (f.cones.size() != expect_cones || f.maximal.size() != 3) {
    std::ostringstream os;
    os << "A2 t={2}: got " << f.cones.size() << " cones, " << f.maximal.size()
       << " maximal (want " << expect_cones << "/3)";
    c.fail(os.str());
  }
}

// 3: the two admissibility criteria agree; witnesses check out stepwise.
void criterion_admissible_equivalence(Check& c) {
  for (const std::string& label : sweep_labels()) {
    RootDatum rd = RootDatum::build(label);
    for (const Vec& hw : lambda_sweep(rd)) {
      WeightSystem ws = weight_system(rd, hw);
      for (const IndexSet& y : all_subsets(rd.rank())) {
        bool graph = is_admissible_graph(rd, ws, y);
        auto [supp, witness] = is_admissible_support(rd, ws, y);
        if (graph != supp) {
          c.fail(label + " Y=" + indexset_to_string(y) +
                 ": graph and support criteria disagree");
          continue;
        }
        if (!graph) continue;
        if (!witness || support(rd, ws.highest, *witness) != y)
          c.fail(label + ": support witness invalid for Y=" + indexset_to_string(y));
        ReflectionWitness rw = reflection_witness(rd, ws, y);
        IndexSet prefix;
        for (size_t l = 0; l < rw.order.size(); ++l) {
          prefix.insert(rw.order[l]);
          if (support(rd, ws.highest, rw.prefix_weights[l]) != prefix)
            c.fail(label + ": witness prefix property fails for Y=" +
                   indexset_to_string(y));
        }
        if (support(rd, ws.highest, rw.final_weight) != y)
          c.fail(label + ": witness final support mismatch");
      }
    }
  }
}

// 4: C_Y equals the fan cone of the standard parabolic, and Y -> Y u Y* is
// a bijection onto the relevant standard subsets.
void criterion_cy_fan(Check& c) {
  for (const std::string& label : sweep_labels()) {
    RootDatum rd = RootDatum::build(label);
    for (const Vec& hw : lambda_sweep(rd)) {
      WeightSystem ws = weight_system(rd, hw);
      FanComparisonReport rep = compare_CY_fan_with_Ft(rd, ws);
      if (!rep.ok())
        c.fail(label + " lambda_fw=" + [&]() {
          std::ostringstream os;
          for (const Rat& x : rd.to_fw_coords(hw)) os << rat_to_string(x) << " ";
          return os.str();
        }() + ": " + rep.detail);
    }
  }
}

// 5: pullback of the target fan equals F_tau for the listed representations.
void criterion_pullback(Check& c) {
  struct Case {
    std::string label;
    Vec fw;
  };
  std::vector<Case> cases = {{"A1", {Rat(1)}},
                             {"A2", {Rat(1), Rat(0)}},
                             {"A2", {Rat(1), Rat(1)}},
                             {"B2", {Rat(1), Rat(0)}},
                             {"B2", {Rat(0), Rat(1)}}};
  for (const Case& cs : cases) {
    RootDatum rd = RootDatum::build(cs.label);
    WeightSystem ws = weight_system(rd, rd.from_fw_coords(cs.fw));
    WeightList wl = weight_list_from_rep(rd, ws);
    PullbackReport rep = pullback_fan_compare(rd, ws, wl);
    if (!rep.ok()) {
      std::ostringstream os;
      os << cs.label << " fw=(";
      for (const Rat& x : cs.fw) os << rat_to_string(x) << " ";
      os << "): " << rep.detail;
      c.fail(os.str());
    }
  }
}

// 6: classified limits of log-affine families match numeric evaluation.
void criterion_sequence_limits(Check& c, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_d(2, 5);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (int cs = 0; cs < kSequenceCases; ++cs) {
    int n = dim_d(rng);
    LogAffineSequence s;
    for (int i = 0; i < n; ++i) {
      s.a.push_back(Rat(num(rng), den(rng)));
      s.b.push_back(Rat(num(rng), den(rng)));
    }
    SequenceLimitReport rep = classify_sequence(s);
    // Numeric evaluation at large n, max-normalized.
    std::vector<double> val(n);
    double vmax = -1e300;
    for (int i = 0; i < n; ++i) {
      val[i] = (double)s.a[i] + kSequenceN * (double)s.b[i];
      vmax = std::max(vmax, val[i]);
    }
    for (int i = 0; i < n; ++i) {
      double numeric = std::pow(kSequenceQ, val[i] - vmax);
      double predicted = rep.limit.exps[i].is_finite()
                             ? std::pow(kSequenceQ, (double)rep.limit.exps[i].value())
                             : 0.0;
      if (std::abs(numeric - predicted) > kSequenceTol) {
        std::ostringstream os;
        os << "case " << cs << " coord " << i << ": numeric " << numeric
           << " vs predicted " << predicted;
        c.fail(os.str());
      }
    }
  }
}

DiagSeminorm random_seminorm(std::mt19937_64& rng, int dmin, int dmax,
                             bool allow_inf) {
  std::uniform_int_distribution<int> dim_d(dmin, dmax);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> coin(0, 4);
  int n = dim_d(rng);
  DiagSeminorm x;
  for (int i = 0; i < n; ++i) {
    if (allow_inf && coin(rng) == 0)
      x.exps.push_back(ExtRat::neg_inf());
    else
      x.exps.push_back(ExtRat(Rat(num(rng), den(rng))));
  }
  if (!is_valid_seminorm(x)) x.exps[0] = ExtRat(Rat(num(rng), den(rng)));
  return x;
}

// 7: canonical representatives land in the window and are idempotent; the
// top exterior values are invariant under unit monomial matrices.
void criterion_canonical_window(Check& c, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int cs = 0; cs < kCanonicalCases; ++cs) {
    DiagSeminorm x = random_seminorm(rng, 2, 6, true);
    CanonicalForm cf = canonical_representative(x);
    const auto& e = cf.rep.exps;
    if (!(ExtRat(Rat(0)) < e[0]) || Rat(1) < e[0].value())
      c.fail("top exponent outside (0,1]");
    for (size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i] < e[i + 1]) c.fail("exponents not sorted descending");
    if (denominator(cf.shift) != 1) c.fail("shift is not integral");
    CanonicalForm again = canonical_representative(cf.rep);
    if (!(again.rep.exps == cf.rep.exps) || again.shift != 0)
      c.fail("canonical form is not idempotent");
  }
  for (int cs = 0; cs < kUnitMonomialCases; ++cs) {
    DiagSeminorm x = random_seminorm(rng, 2, 6, true);
    int n = x.dim();
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    std::shuffle(w.begin(), w.end(), rng);
    DiagSeminorm y = monomial_action(w, zero_vec(n), x);
    for (int m = 1; m <= n; ++m)
      if (exterior_invariant(x, m) != exterior_invariant(y, m))
        c.fail("exterior value changed under a unit monomial matrix");
  }
}

// 8: monomial seminorms in sheared bases are dominated by the monomial
// extension of their restriction.
void criterion_domination(Check& c, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_d(2, 3);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> shear(-2, 2);
  for (int cs = 0; cs < kDominationCases; ++cs) {
    int n = dim_d(rng);
    // Basis = permutation matrix times a unit upper-triangular shear.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Mat basis(n, Vec(n, Rat(0)));
    Mat upper = identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) upper[i][j] = shear(rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) basis[perm[i]][j] = upper[i][j];
    MonomialBasisSeminorm z;
    z.basis = basis;
    for (int j = 0; j < n; ++j) z.exps.push_back(ExtRat(Rat(num(rng), den(rng))));
    std::vector<QPolynomial> samples;
    std::function<void(std::vector<int>&, int, int)> gen =
        [&](std::vector<int>& nu, int pos, int left) {
          if (pos == n) {
            QPolynomial p;
            p.terms[nu] = 1;
            samples.push_back(p);
            return;
          }
          for (int e = 0; e <= left; ++e) {
            nu[pos] = e;
            gen(nu, pos + 1, left - e);
          }
        };
    std::vector<int> nu(n, 0);
    gen(nu, 0, 3);
    if (!domination_check(z, tau_restrict(z), samples)) {
      std::ostringstream os;
      os << "case " << cs << ": a monomial exceeded its dominating value";
      c.fail(os.str());
    }
  }
}

// 9: the boundary extension is injective on sampled points and independent
// of the interior direction.
void criterion_injectivity(Check& c, uint64_t seed) {
  struct Case {
    std::string label;
    Vec fw;
  };
  std::vector<Case> cases = {{"A2", {Rat(1), Rat(0)}}, {"B2", {Rat(1), Rat(0)}}};
  for (const Case& cs : cases) {
    RootDatum rd = RootDatum::build(cs.label);
    WeightSystem ws = weight_system(rd, rd.from_fw_coords(cs.fw));
    WeightList wl = weight_list_from_rep(rd, ws);
    InjectivityReport rep = injectivity_probe(rd, ws, wl, kInteriorSamples, seed);
    if (!rep.ok())
      c.fail(cs.label + ": " + std::to_string(rep.num_collisions) +
             " image collisions (" + rep.detail + ")");
    Fan fan_tau = build_fan_Ft(rd, z_set(rd, ws));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    for (const Cone& stratum : fan_tau.cones) {
      if (stratum.is_zero()) continue;
      Vec u(rd.rank());
      for (int i = 0; i < rd.rank(); ++i) u[i] = Rat(num(rng), 2);
      BoundaryPoint x{stratum, canonical_rep(rd, stratum, u)};
      std::vector<Vec> dirs;
      Vec d1 = zero_vec(rd.rank()), d2 = zero_vec(rd.rank()), d3 = zero_vec(rd.rank());
      int k = 1;
      for (const Vec& g : stratum.gens()) {
        d1 = add(d1, g);
        d2 = add(d2, scale(Rat(k), g));
        d3 = add(d3, scale(Rat(1, k), g));
        ++k;
      }
      DiagSeminorm r1 = map_boundary_point(rd, fan_tau, wl, x, d1);
      DiagSeminorm r2 = map_boundary_point(rd, fan_tau, wl, x, d2);
      DiagSeminorm r3 = map_boundary_point(rd, fan_tau, wl, x, d3);
      if (!(r1.exps == r2.exps) || !(r1.exps == r3.exps))
        c.fail(cs.label + ": image depends on the interior direction");
    }
  }
}

// 10: the cone chain holds for every swept combination.
void criterion_cone_chain(Check& c) {
  for (const std::string& label : sweep_labels()) {
    RootDatum rd = RootDatum::build(label);
    for (const IndexSet& t : all_subsets(rd.rank()))
      for (const IndexSet& y : all_subsets(rd.rank())) {
        if (!check_cone_chain(rd, t, y))
          c.fail(label + " t=" + indexset_to_string(t) +
                 " Y=" + indexset_to_string(y) + ": cone chain violated");
        if (t.empty()) {
          // First inclusion is an equality for the minimal type.
          if (!weyl_cone(rd, y).equals(cone_Ct_of_Q(rd, t, y)))
            c.fail(label + " Y=" + indexset_to_string(y) +
                   ": minimal-type cone differs from the Weyl cone");
        }
      }
  }
}

}  // namespace

const std::vector<std::string>& sweep_labels() {
  static const std::vector<std::string> labels = {"A1", "A2", "A3", "B2",
                                                  "B3", "C3", "G2"};
  return labels;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts) {
  struct Entry {
    int id;
    std::string name;
    std::function<void(Check&)> fn;
  };
  std::vector<Entry> entries = {
      {1, "fan-axioms", [&](Check& c) { criterion_fan_axioms(c, opts.seed); }},
      {2, "relevant-bijection",
       [&](Check& c) { criterion_relevant_bijection(c, opts.inject_fault); }},
      {3, "admissible-equivalence",
       [&](Check& c) { criterion_admissible_equivalence(c); }},
      {4, "cy-fan", [&](Check& c) { criterion_cy_fan(c); }},
      {5, "pullback", [&](Check& c) { criterion_pullback(c); }},
      {6, "sequence-limits",
       [&](Check& c) { criterion_sequence_limits(c, opts.seed); }},
      {7, "canonical-window",
       [&](Check& c) { criterion_canonical_window(c, opts.seed); }},
      {8, "domination", [&](Check& c) { criterion_domination(c, opts.seed); }},
      {9, "injectivity", [&](Check& c) { criterion_injectivity(c, opts.seed); }},
      {10, "cone-chain", [&](Check& c) { criterion_cone_chain(c); }},
  };
  std::vector<CriterionResult> results;
  for (const Entry& e : entries) {
    if (!opts.only.empty() && e.name.find(opts.only) == std::string::npos)
      continue;
    Check c;
    auto start = std::chrono::steady_clock::now();
    e.fn(c);
    auto stop = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    r.passed = c.ok;
    r.detail = c.detail.str();
    r.seconds = std::chrono::duration<double>(stop - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace satake
