#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "satake/json_io.hpp"
#include "satake/verify.hpp"

namespace {

using namespace satake;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

IndexSet parse_index_set(const std::string& s, int rank) {
  IndexSet out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 1 || v > rank)
      throw CLI::ValidationError("node index out of range: " + tok);
    out.insert(v - 1);  // 1-based on the command line
  }
  return out;
}

Vec parse_rat_vec(const std::string& s) {
  Vec out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    if (!tok.empty()) out.push_back(rat_from_string(tok));
  }
  return out;
}

std::vector<ExtRat> parse_exps(const std::string& s) {
  std::vector<ExtRat> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    if (!tok.empty()) out.push_back(extrat_from_string(tok));
  }
  return out;
}

void emit(const Json& j, const std::string& output_path) {
  std::string text = j.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(output_path);
    if (!os) throw std::runtime_error("cannot open output file: " + output_path);
    os << text;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of compactified apartments: fans, weight "
               "systems, seminorm limits, and the weight embedding"};
  app.require_subcommand(1);

  std::string root_system = "A2";
  std::string type_nodes;
  std::string subset_nodes;
  std::string highest_weight = "1,0";
  std::string exps_arg;
  std::string a_arg, b_arg;
  std::string input_path, output_path;
  std::string only;
  uint64_t seed = 12345;
  int samples = 1000;
  bool run_check = false;
  bool inject_fault = false;

  auto* fan = app.add_subcommand("fan", "Build the fan of a type and report its cones");
  fan->add_option("--root-system", root_system, "Root system label (A1..A4, B2, B3, C3, D4, G2)");
  fan->add_option("--type", type_nodes, "Type nodes, 1-based, comma separated (empty for the minimal type)");
  fan->add_flag("--check", run_check, "Run the fan-axiom checks");
  fan->add_option("--samples", samples, "Coverage sample count");
  fan->add_option("--seed", seed, "Random seed");
  fan->add_option("-o,--output", output_path, "Write JSON here instead of stdout");

  auto* relevant = app.add_subcommand("relevant", "Relevancy of a standard parabolic subset for a type");
  relevant->add_option("--root-system", root_system);
  relevant->add_option("--type", type_nodes);
  relevant->add_option("--subset", subset_nodes, "Levi nodes of the standard parabolic, 1-based");
  relevant->add_option("-o,--output", output_path);

  auto* admissible = app.add_subcommand("admissible", "Admissible subsets for a highest weight");
  admissible->add_option("--root-system", root_system);
  admissible->add_option("--highest-weight", highest_weight, "Fundamental-weight coordinates, comma separated");
  admissible->add_option("-o,--output", output_path);

  auto* weights = app.add_subcommand("weights", "Weight system of a highest weight");
  weights->add_option("--root-system", root_system);
  weights->add_option("--highest-weight", highest_weight);
  weights->add_option("-o,--output", output_path);

  auto* embed = app.add_subcommand("embed", "Weight embedding and pullback-fan comparison");
  embed->add_option("--root-system", root_system);
  embed->add_option("--highest-weight", highest_weight);
  embed->add_option("-o,--output", output_path);

  auto* classify = app.add_subcommand("classify-seq", "Classify a log-affine seminorm family");
  classify->add_option("--input", input_path, "JSON file with {a: [...], b: [...]}");
  classify->add_option("--a", a_arg, "Offsets, comma separated rationals");
  classify->add_option("--b", b_arg, "Slopes, comma separated rationals");
  classify->add_option("-o,--output", output_path);

  auto* seminorm = app.add_subcommand("seminorm", "Canonical form and invariants of a diagonal seminorm");
  seminorm->add_option("--exps", exps_arg, "Exponents, comma separated (use -inf for kernel coordinates)")
      ->required();
  seminorm->add_option("-o,--output", output_path);

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_option("--only", only, "Substring filter on criterion names");
  verify->add_option("--seed", seed);
  verify->add_flag("--inject-fault", inject_fault, "Negative control: force one expected value wrong");
  verify->add_option("-o,--output", output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fan->parsed()) {
      RootDatum rd = RootDatum::build(root_system);
      IndexSet t = parse_index_set(type_nodes, rd.rank());
      Fan f = build_fan_Ft(rd, t);
      if (!f.degenerate.empty())
        std::cerr << "note: degenerate type, fan lives on a "
                  << f.quotient_dim() << "-dimensional quotient\n";
      if (run_check) {
        FanCheckResult check = check_fan_axioms(f, samples, seed);
        emit(fan_report_json(rd, f, &check), output_path);
      } else {
        emit(fan_report_json(rd, f, nullptr), output_path);
      }
      return kExitOk;
    }
    if (relevant->parsed()) {
      RootDatum rd = RootDatum::build(root_system);
      IndexSet t = parse_index_set(type_nodes, rd.rank());
      IndexSet y = parse_index_set(subset_nodes, rd.rank());
      Json out{{"root_system", root_system},
               {"type", indexset_to_string(t)},
               {"Y", indexset_to_string(y)},
               {"relevant", is_t_relevant(rd, t, y)},
               {"smallest_relevant", indexset_to_string(smallest_t_relevant(rd, t, y))},
               {"cone", cone_to_json(cone_Ct_of_Q(rd, t, y))},
               {"cone_chain_ok", check_cone_chain(rd, t, y)}};
      emit(out, output_path);
      return kExitOk;
    }
    if (admissible->parsed() || weights->parsed() || embed->parsed()) {
      RootDatum rd = RootDatum::build(root_system);
      Vec fw = parse_rat_vec(highest_weight);
      if ((int)fw.size() != rd.rank())
        throw CLI::ValidationError("highest weight length differs from the rank");
      WeightSystem ws = weight_system(rd, rd.from_fw_coords(fw));
      if (admissible->parsed()) {
        emit(admissibility_json(rd, ws), output_path);
      } else if (weights->parsed()) {
        emit(weight_system_json(rd, ws), output_path);
      } else {
        WeightList wl = weight_list_from_rep(rd, ws);
        PullbackReport rep = pullback_fan_compare(rd, ws, wl);
        emit(embedding_report_json(rd, wl, rep), output_path);
        if (!rep.ok()) return kExitVerifyFailed;
      }
      return kExitOk;
    }
    if (classify->parsed()) {
      LogAffineSequence s;
      if (!input_path.empty()) {
        std::ifstream is(input_path);
        if (!is) throw CLI::ValidationError("cannot open input file: " + input_path);
        Json j;
        is >> j;
        s = sequence_from_json(j);
      } else {
        s.a = parse_rat_vec(a_arg);
        s.b = parse_rat_vec(b_arg);
        if (s.a.empty() || s.a.size() != s.b.size())
          throw CLI::ValidationError("need --a and --b of equal nonzero length");
      }
      emit(sequence_report_json(s, classify_sequence(s)), output_path);
      return kExitOk;
    }
    if (seminorm->parsed()) {
      DiagSeminorm x;
      x.exps = parse_exps(exps_arg);
      if (!is_valid_seminorm(x))
        throw CLI::ValidationError("all exponents are -inf (zero seminorm)");
      CanonicalForm cf = canonical_representative(x);
      KernelStratum ks = kernel_and_stratum(x);
      StabilizerDescription sd = stabilizer_description(x);
      Json ext = Json::array();
      for (int m = 1; m <= x.dim(); ++m)
        ext.push_back(extrat_to_string(exterior_invariant(x, m)));
      Json out{{"input", seminorm_to_json(x)},
               {"canonical", seminorm_to_json(cf.rep)},
               {"permutation", cf.perm},
               {"shift", rat_to_string(cf.shift)},
               {"kernel", ks.kernel},
               {"stratum", ks.label},
               {"exterior", ext},
               {"stabilizer", Json{{"quotient_rank", sd.quotient_rank},
                                   {"is_vertex", sd.is_vertex},
                                   {"block_shape", sd.block_shape}}}};
      emit(out, output_path);
      return kExitOk;
    }
    if (verify->parsed()) {
      VerifyOptions opts;
      opts.only = only;
      opts.seed = seed;
      opts.inject_fault = inject_fault;
      std::vector<CriterionResult> results = run_acceptance(opts);
      Json arr = Json::array();
      bool all_ok = true;
      for (const CriterionResult& r : results) {
        all_ok = all_ok && r.passed;
        arr.push_back(Json{{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
        std::cerr << "criterion " << r.id << " (" << r.name << "): "
                  << (r.passed ? "pass" : "FAIL") << "\n";
      }
      emit(Json{{"all_passed", all_ok}, {"criteria", arr}}, output_path);
      return all_ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
