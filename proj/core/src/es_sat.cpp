#include "npduel/es_sat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

namespace npduel::es {

double transform_fitness(const cnf::CnfFormula& f, std::span<const double> y) {
  if (static_cast<int>(y.size()) != f.num_vars()) {
    throw ValidationError("parameter vector length " + std::to_string(y.size()) +
                          " != variable count " + std::to_string(f.num_vars()));
  }
  double total = 0.0;
  for (const cnf::Clause& clause : f.clauses()) {
    double product = 1.0;
    for (const cnf::Literal& lit : clause) {
      const double term = lit.negated ? y[lit.var] + 1.0 : y[lit.var] - 1.0;
      product *= term * term;
    }
    total += product;
  }
  return total;
}

cnf::Assignment decode(std::span<const double> y) {
  cnf::Assignment a(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) a[i] = y[i] >= 0.0;
  return a;
}

namespace {

double effective_tau(const EsConfig& cfg, std::size_t n) {
  return cfg.tau >= 0.0 ? cfg.tau : 1.0 / std::sqrt(static_cast<double>(n));
}

}  // namespace

EsIndividual mutate(const EsIndividual& ind, const EsConfig& cfg, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double tau = effective_tau(cfg, ind.y.size());
  EsIndividual child;
  child.sigma = std::clamp(ind.sigma * std::exp(tau * normal(rng)),
                           cfg.sigma_floor, cfg.sigma_cap);
  child.y.resize(ind.y.size());
  for (std::size_t i = 0; i < ind.y.size(); ++i) {
    child.y[i] = ind.y[i] + child.sigma * normal(rng);
  }
  return child;
}

EsIndividual recombine(const EsIndividual& a, const EsIndividual& b, Rng& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  EsIndividual child;
  child.y.resize(a.y.size());
  for (std::size_t i = 0; i < a.y.size(); ++i) {
    child.y[i] = coin(rng) ? b.y[i] : a.y[i];
  }
  child.sigma = 0.5 * (a.sigma + b.sigma);
  return child;
}

EsRun::EsRun(const cnf::CnfFormula& f, const EsConfig& cfg, std::uint64_t seed)
    : formula_(f), cfg_(cfg), rng_(make_rng(seed)) {
  if (cfg_.mu < 1 || cfg_.lambda <= cfg_.mu) {
    throw ValidationError("comma selection needs lambda > mu >= 1");
  }
  if (cfg_.sigma_cap <= 0.0) throw ValidationError("sigma cap must be positive");
  result_.config = cfg_;
  result_.seed = seed;

  std::uniform_real_distribution<double> init(cfg_.init_lo, cfg_.init_hi);
  parents_.resize(cfg_.mu);
  parent_fitness_.resize(cfg_.mu);
  for (EsIndividual& p : parents_) {
    p.y.resize(formula_.num_vars());
    for (double& v : p.y) v = init(rng_);
    p.sigma = cfg_.initial_sigma;
  }
  for (int i = 0; i < cfg_.mu; ++i) {
    parent_fitness_[i] = transform_fitness(formula_, parents_[i].y);
    ++result_.evaluations;
  }
  // Generation 0: the initializers are checked before any variation.
  check_best();
}

void EsRun::check_best() {
  const auto best = std::min_element(parent_fitness_.begin(), parent_fitness_.end());
  result_.best_fitness_per_generation.push_back(*best);
  result_.generations = generation_;
  const EsIndividual& champion = parents_[best - parent_fitness_.begin()];
  const cnf::Assignment a = decode(champion.y);
  if (cnf::evaluate(formula_, a)) {
    solved_ = true;
    result_.solved = true;
    result_.assignment = a;
  }
}

bool EsRun::step() {
  if (solved_) return true;
  ++generation_;

  offspring_.clear();
  offspring_.reserve(cfg_.lambda);
  std::uniform_int_distribution<int> pick(0, cfg_.mu - 1);
  for (int i = 0; i < cfg_.lambda; ++i) {
    if (cfg_.recombination == Recombination::discrete_object_intermediate_sigma) {
      const int a = pick(rng_);
      int b = pick(rng_);
      while (b == a) b = pick(rng_);
      offspring_.push_back(mutate(recombine(parents_[a], parents_[b], rng_), cfg_, rng_));
    } else {
      offspring_.push_back(mutate(parents_[pick(rng_)], cfg_, rng_));
    }
  }

  std::vector<double> fitness(cfg_.lambda);
  for (int i = 0; i < cfg_.lambda; ++i) {
    fitness[i] = transform_fitness(formula_, offspring_[i].y);
    ++result_.evaluations;
  }

  // Comma selection: best mu offspring replace the parents outright.
  std::vector<int> order(cfg_.lambda);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&fitness](int a, int b) { return fitness[a] < fitness[b]; });
  for (int i = 0; i < cfg_.mu; ++i) {
    parents_[i] = offspring_[order[i]];
    parent_fitness_[i] = fitness[order[i]];
  }

  check_best();
  return solved_;
}

EsResult EsRun::run() {
  while (!solved_ && generation_ < cfg_.max_generations) {
    step();
  }
  return result_;
}

EsResult run_es(const cnf::CnfFormula& f, const EsConfig& cfg, std::uint64_t seed) {
  return EsRun(f, cfg, seed).run();
}

std::string to_json(const EsResult& result) {
  nlohmann::json j;
  j["solved"] = result.solved;
  if (result.assignment) {
    j["assignment"] = cnf::assignment_to_string(*result.assignment);
  } else {
    j["assignment"] = nullptr;
  }
  j["generations"] = result.generations;
  j["evaluations"] = result.evaluations;
  j["best_fitness_per_generation"] = result.best_fitness_per_generation;
  j["config_echo"] = {
      {"mu", result.config.mu},
      {"lambda", result.config.lambda},
      {"sigma_cap", result.config.sigma_cap},
      {"sigma_floor", result.config.sigma_floor},
      {"init_range", {result.config.init_lo, result.config.init_hi}},
      {"initial_sigma", result.config.initial_sigma},
      {"tau", result.config.tau},
      {"max_generations", result.config.max_generations},
      {"recombination",
       result.config.recombination == Recombination::none
           ? "none"
           : "discrete_object_intermediate_sigma"},
  };
  j["seed"] = result.seed;
  return j.dump();
}

}  // namespace npduel::es
