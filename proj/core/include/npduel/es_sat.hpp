#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "npduel/cnf.hpp"
#include "npduel/rng.hpp"

namespace npduel::es {

/// Real object parameters plus one shared step size.
struct EsIndividual {
  std::vector<double> y;
  double sigma = 1.0;
};

enum class Recombination { none, discrete_object_intermediate_sigma };

struct EsConfig {
  int mu = 15;
  int lambda = 100;
  double sigma_cap = 3.0;
  double sigma_floor = 1e-8;
  double init_lo = -1.0;
  double init_hi = 1.0;
  double initial_sigma = 1.0;
  double tau = -1.0;  // < 0 selects the default 1/sqrt(n); 0 freezes sigma
  int max_generations = 1000;
  Recombination recombination = Recombination::discrete_object_intermediate_sigma;
};

/// Clause value = product over literals of (y-1)^2 for x and (y+1)^2 for
/// not-x; formula value = sum over clauses. Non-negative, and 0 at a +-1
/// corner iff the decoded assignment satisfies the formula.
double transform_fitness(const cnf::CnfFormula& f, std::span<const double> y);

/// Variable i is true iff y[i] >= 0 (a tie at exactly 0 decodes true).
cnf::Assignment decode(std::span<const double> y);

/// Lognormal step-size self-adaptation, clamped to [sigma_floor, sigma_cap],
/// then one Gaussian step per component with the adapted sigma.
EsIndividual mutate(const EsIndividual& ind, const EsConfig& cfg, Rng& rng);

/// Discrete recombination of object parameters, intermediate for sigma.
EsIndividual recombine(const EsIndividual& a, const EsIndividual& b, Rng& rng);

struct EsResult {
  bool solved = false;
  std::optional<cnf::Assignment> assignment;
  int generations = 0;           // last generation evaluated (0 = initializers)
  std::int64_t evaluations = 0;  // fitness evaluations consumed
  std::vector<double> best_fitness_per_generation;
  EsConfig config;
  std::uint64_t seed = 0;
};

/// One (mu,lambda) run. The initial population counts as generation 0 and is
/// checked for satisfaction before any variation; each later generation keeps
/// the best mu of lambda offspring (parents are discarded) and stops as soon
/// as the best individual decodes to a satisfying assignment.
EsResult run_es(const cnf::CnfFormula& f, const EsConfig& cfg, std::uint64_t seed);

/// Result record JSON: {solved, assignment, generations, evaluations,
/// best_fitness_per_generation, config_echo, seed}.
std::string to_json(const EsResult& result);

/// Stepwise driver behind run_es, exposed so tests can watch selection.
class EsRun {
 public:
  EsRun(const cnf::CnfFormula& f, const EsConfig& cfg, std::uint64_t seed);

  const std::vector<EsIndividual>& parents() const { return parents_; }
  const std::vector<EsIndividual>& last_offspring() const { return offspring_; }
  int generation() const { return generation_; }
  bool solved() const { return solved_; }
  const EsResult& result() const { return result_; }

  /// Advances one generation; returns true once solved.
  bool step();
  /// Runs until solved or cfg.max_generations.
  EsResult run();

 private:
  void check_best();

  const cnf::CnfFormula& formula_;
  EsConfig cfg_;
  Rng rng_;
  std::vector<EsIndividual> parents_;
  std::vector<double> parent_fitness_;
  std::vector<EsIndividual> offspring_;
  int generation_ = 0;
  bool solved_ = false;
  EsResult result_;
};

}  // namespace npduel::es
