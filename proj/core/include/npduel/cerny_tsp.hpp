#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npduel/errors.hpp"

namespace npduel::tsp {

/// m cities, integer distances, city 1 is both start and destination.
struct TspInstance {
  int m = 0;
  std::vector<std::vector<long long>> d;
  bool symmetric = true;
};

/// Validates counts, zero diagonal, positive integer off-diagonals, and
/// symmetry unless the instance is flagged asymmetric.
TspInstance make_instance(int m, std::vector<std::vector<long long>> d,
                          bool symmetric = true);

/// {"m": int, "d": [[int,...],...]} with optional "asymmetric": true.
TspInstance parse_instance_json(const std::string& text);
std::string to_json(const TspInstance& t);

/// One slit-array trajectory: the slit sequence names the city chosen at each
/// of the m-1 walls; k accumulates the crossed distances including the return
/// leg; visited[j-2] records whether city j was ever crossed. p is carried
/// structurally and stays 0.
struct TrajectoryKet {
  std::vector<int> slits;             // m-1 labels in {2..m}
  long long tour_length = 0;          // k
  std::vector<std::uint8_t> visited;  // c_2..c_m
  int p = 0;
  std::complex<double> amplitude;

  bool legal() const {
    for (std::uint8_t c : visited) {
      if (!c) return false;
    }
    return true;
  }
};

inline constexpr std::uint64_t kDefaultTrajectoryCap = 10'000'000;  // (m-1)^(m-1)
inline constexpr std::uint64_t kDefaultPermutationCap = 362'880;    // 9!

/// All (m-1)^(m-1) trajectories in lexicographic slit order, uniform
/// amplitudes.
std::vector<TrajectoryKet> enumerate_trajectories(
    const TspInstance& t, std::uint64_t cap = kDefaultTrajectoryCap);

/// Keeps the kets with every city visited (exactly the (m-1)! tours) and
/// renormalizes uniformly over the survivors.
std::vector<TrajectoryKet> filter_legal(std::vector<TrajectoryKet> kets);

struct DetectorStream {
  long long tour_length = 0;  // k
  std::uint64_t count = 0;
  double probability = 0.0;
};

/// Stern-Gerlach analogue: one stream per occurring k, ascending.
struct DetectorBank {
  std::vector<DetectorStream> streams;
  std::optional<long long> min_fired;

  bool fired(long long length) const;
};

DetectorBank split_streams(const std::vector<TrajectoryKet>& legal);

struct BruteForceResult {
  long long min_length = 0;
  std::vector<int> best_tour;            // city sequence after city 1
  std::vector<long long> all_lengths;    // sorted multiset, (m-1)! entries
};

/// Exhaustive oracle over all permutations with city 1 fixed first.
BruteForceResult brute_force_tsp(const TspInstance& t,
                                 std::uint64_t cap = kDefaultPermutationCap);

struct MachineReport {
  std::uint64_t trajectory_count = 0;
  std::uint64_t legal_count = 0;
  DetectorBank bank;
  long long min_fired = 0;
  std::uint64_t grover_cost = 0;  // ceil((pi/4) sqrt((m-1)!))
  std::string grover_cost_note;
};

/// enumerate -> filter -> split. The note records that reading the minimum
/// out of the superposition still costs O(sqrt(n!)) oracle queries.
MachineReport run_cerny_machine(const TspInstance& t,
                                std::uint64_t cap = kDefaultTrajectoryCap);

/// {trajectories, legal, streams: [{k, count, probability}], min_fired,
/// grover_cost_note}.
std::string to_json(const MachineReport& report);

}  // namespace npduel::tsp
