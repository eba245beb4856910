// npduel: batch experiments contrasting quantum search (simulated) with
// evolutionary search on SAT/3SAT and TSP instances.
//
// Every run emits one self-describing record with the full config echoed, so
// a record can be reproduced from itself. Exit codes: 0 success (including
// "unsat"/"not solved" results), 2 input error, 3 resource cap exceeded,
// 4 internal cross-check failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "npduel/cerny_tsp.hpp"
#include "npduel/cnf.hpp"
#include "npduel/es_sat.hpp"
#include "npduel/quantum_sat.hpp"
#include "npduel/rng.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitCrossCheck = 4;
constexpr std::size_t kSolutionListCap = 1024;

struct CrossCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input_path;
  std::uint64_t seed = 0;  // documented default so bare runs reproduce
  int shots = 1000;
  std::string format = "json";
  int max_generations = 1000;
  std::string recombination = "default";
  std::uint64_t cap = 0;  // 0 = per-command default
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw npduel::ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void flatten_json(const nlohmann::json& j, const std::string& prefix,
                  std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten_json(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten_json(j[i], prefix + "." + std::to_string(i), out);
    }
  } else if (j.is_string()) {
    std::string s = j.get<std::string>();
    for (char& c : s) {
      if (c == '\n') c = ' ';
      if (c == ',') c = ';';
    }
    out << prefix << ',' << s << '\n';
  } else {
    out << prefix << ',' << j.dump() << '\n';
  }
}

void emit_record(const std::string& command, const Options& opt,
                 const nlohmann::json& config, const nlohmann::json& result,
                 double duration_ms) {
  nlohmann::json record;
  record["tool"] = "npduel";
  record["version"] = kVersion;
  record["command"] = command;
  record["config"] = config;
  record["duration_ms"] = duration_ms;
  record["result"] = result;

  if (opt.format == "json") {
    std::cout << record.dump(2) << '\n';
  } else if (opt.format == "csv") {
    flatten_json(record, "", std::cout);
  } else {
    std::cout << "npduel " << kVersion << " " << command << '\n'
              << "config: " << config.dump() << '\n'
              << "duration_ms: " << duration_ms << '\n'
              << "result: " << result.dump(2) << '\n';
  }
}

nlohmann::json base_config(const Options& opt) {
  return {{"input", opt.input_path}, {"seed", opt.seed}, {"format", opt.format}};
}

// ---- sat subcommands -------------------------------------------------------

int cmd_sat_brute(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto f = npduel::cnf::parse_dimacs_file(opt.input_path);
  const int bound = opt.cap ? static_cast<int>(opt.cap)
                            : npduel::cnf::kDefaultExhaustiveBound;
  const std::uint64_t r = npduel::cnf::count_solutions(f, bound);
  const auto sols = npduel::cnf::solutions(f, bound);

  nlohmann::json result;
  result["n"] = f.num_vars();
  result["clauses"] = f.clauses().size();
  result["r"] = r;
  nlohmann::json listed = nlohmann::json::array();
  for (std::size_t i = 0; i < sols.size() && i < kSolutionListCap; ++i) {
    listed.push_back(npduel::cnf::assignment_to_string(sols[i]));
  }
  result["solutions"] = listed;
  result["solutions_truncated"] = sols.size() > kSolutionListCap;

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start).count();
  auto config = base_config(opt);
  config["exhaustive_bound"] = bound;
  emit_record("sat brute", opt, config, result, ms);
  return kExitOk;
}

int cmd_sat_sample(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto f = npduel::cnf::parse_dimacs_file(opt.input_path);
  auto reg = npduel::qsat::apply_uf(npduel::qsat::prepare_ohya_masuda(f));

  const std::uint64_t r = npduel::cnf::count_solutions(f);
  const double theoretical = npduel::qsat::flag_probability(reg);

  std::uint64_t hits = 0;
  std::map<std::string, std::uint64_t> histogram;
  for (int shot = 0; shot < opt.shots; ++shot) {
    npduel::Rng rng = npduel::derive_rng(opt.seed, static_cast<std::uint64_t>(shot));
    const auto a = npduel::qsat::sample_solution(reg, rng);
    if (a) {
      if (!npduel::cnf::evaluate(f, *a)) {
        throw CrossCheckError("sampled assignment does not satisfy the formula");
      }
      ++hits;
      ++histogram[npduel::cnf::assignment_to_string(*a)];
    }
  }

  nlohmann::json result;
  result["n"] = f.num_vars();
  result["r"] = r;
  result["theoretical_rate"] = theoretical;
  result["shots"] = opt.shots;
  result["flag1_count"] = hits;
  result["flag1_rate"] = static_cast<double>(hits) / opt.shots;
  result["solution_histogram"] = histogram;

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start).count();
  auto config = base_config(opt);
  config["shots"] = opt.shots;
  emit_record("sat sample", opt, config, result, ms);
  return kExitOk;
}

int cmd_sat_grover(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto f = npduel::cnf::parse_dimacs_file(opt.input_path);
  const auto stats = npduel::qsat::grover_search(f, opt.seed, opt.shots);
  auto result = nlohmann::json::parse(npduel::qsat::to_json(stats));

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start).count();
  auto config = base_config(opt);
  config["shots"] = opt.shots;
  config["r_source"] = "classical exhaustive count";
  emit_record("sat grover", opt, config, result, ms);
  return kExitOk;
}

int cmd_sat_es(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto f = npduel::cnf::parse_dimacs_file(opt.input_path);

  npduel::es::EsConfig cfg;
  cfg.max_generations = opt.max_generations;
  cfg.recombination = opt.recombination == "none"
                          ? npduel::es::Recombination::none
                          : npduel::es::Recombination::discrete_object_intermediate_sigma;
  const auto es_result = npduel::es::run_es(f, cfg, opt.seed);
  if (es_result.solved && !npduel::cnf::evaluate(f, *es_result.assignment)) {
    throw CrossCheckError("ES result does not satisfy the formula");
  }
  auto result = nlohmann::json::parse(npduel::es::to_json(es_result));

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start).count();
  auto config = base_config(opt);
  config["max_generations"] = opt.max_generations;
  config["recombination"] = opt.recombination;
  emit_record("sat es", opt, config, result, ms);
  return kExitOk;
}

// ---- tsp subcommands -------------------------------------------------------

int cmd_tsp_cerny(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto instance = npduel::tsp::parse_instance_json(read_file(opt.input_path));
  const std::uint64_t cap = opt.cap ? opt.cap : npduel::tsp::kDefaultTrajectoryCap;
  const auto report = npduel::tsp::run_cerny_machine(instance, cap);
  auto result = nlohmann::json::parse(npduel::tsp::to_json(report));

  // Cross-check against the exhaustive oracle whenever it is affordable.
  bool checked = false;
  try {
    const auto oracle = npduel::tsp::brute_force_tsp(instance);
    checked = true;
    if (oracle.min_length != report.min_fired) {
      throw CrossCheckError("detector minimum " + std::to_string(report.min_fired) +
                            " != brute-force minimum " +
                            std::to_string(oracle.min_length));
    }
  } catch (const npduel::CapExceeded&) {
    // oracle too large; report stands on its own
  }
  result["oracle_checked"] = checked;

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start).count();
  auto config = base_config(opt);
  config["trajectory_cap"] = cap;
  emit_record("tsp cerny", opt, config, result, ms);
  return kExitOk;
}

int cmd_tsp_brute(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto instance = npduel::tsp::parse_instance_json(read_file(opt.input_path));
  const std::uint64_t cap = opt.cap ? opt.cap : npduel::tsp::kDefaultPermutationCap;
  const auto oracle = npduel::tsp::brute_force_tsp(instance, cap);

  nlohmann::json result;
  result["m"] = instance.m;
  result["min_length"] = oracle.min_length;
  nlohmann::json tour = nlohmann::json::array();
  tour.push_back(1);
  for (int city : oracle.best_tour) tour.push_back(city);
  tour.push_back(1);
  result["best_tour"] = tour;
  result["tours_enumerated"] = oracle.all_lengths.size();

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start).count();
  auto config = base_config(opt);
  config["permutation_cap"] = cap;
  emit_record("tsp brute", opt, config, result, ms);
  return kExitOk;
}

void add_common_options(CLI::App* cmd, Options& opt, bool with_shots = false,
                        bool with_es = false, bool with_cap = false) {
  cmd->add_option("input", opt.input_path, "input file")->required();
  cmd->add_option("--seed", opt.seed, "RNG master seed")
      ->envname("NPDUEL_SEED")
      ->capture_default_str();
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  if (with_shots) {
    cmd->add_option("--shots", opt.shots, "measurement shots")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  if (with_es) {
    cmd->add_option("--max-generations", opt.max_generations, "generation budget")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--recombination", opt.recombination, "recombination mode")
        ->check(CLI::IsMember({"none", "default"}))
        ->capture_default_str();
  }
  if (with_cap) {
    cmd->add_option("--cap", opt.cap,
                    "resource cap (variables for sat brute, trajectories for "
                    "tsp cerny, permutations for tsp brute); 0 = default");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum vs. evolutionary search experiments on SAT and TSP"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options opt;
  int (*selected)(const Options&) = nullptr;

  auto* sat = app.add_subcommand("sat", "SAT/3SAT experiments (DIMACS input)");
  sat->require_subcommand(1);
  auto* sat_brute = sat->add_subcommand("brute", "exhaustive solution count and list");
  add_common_options(sat_brute, opt, false, false, true);
  sat_brute->callback([&] { selected = cmd_sat_brute; });
  auto* sat_sample = sat->add_subcommand(
      "sample", "prepare, apply the oracle, measure the satisfaction flag");
  add_common_options(sat_sample, opt, true);
  sat_sample->callback([&] { selected = cmd_sat_sample; });
  auto* sat_grover = sat->add_subcommand("grover", "amplitude amplification search");
  add_common_options(sat_grover, opt, true);
  sat_grover->callback([&] { selected = cmd_sat_grover; });
  auto* sat_es = sat->add_subcommand("es", "(15,100) evolution strategy");
  add_common_options(sat_es, opt, false, true);
  sat_es->callback([&] { selected = cmd_sat_es; });

  auto* tsp = app.add_subcommand("tsp", "TSP experiments (JSON instance input)");
  tsp->require_subcommand(1);
  auto* tsp_cerny = tsp->add_subcommand("cerny", "slit-array interference machine");
  add_common_options(tsp_cerny, opt, false, false, true);
  tsp_cerny->callback([&] { selected = cmd_tsp_cerny; });
  auto* tsp_brute = tsp->add_subcommand("brute", "exhaustive tour enumeration");
  add_common_options(tsp_brute, opt, false, false, true);
  tsp_brute->callback([&] { selected = cmd_tsp_brute; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return selected(opt);
  } catch (const npduel::CapExceeded& e) {
    std::cerr << "error (cap): " << e.what() << '\n';
    return kExitCap;
  } catch (const CrossCheckError& e) {
    std::cerr << "error (cross-check): " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
