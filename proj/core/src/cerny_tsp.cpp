#include "npduel/cerny_tsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

namespace npduel::tsp {

TspInstance make_instance(int m, std::vector<std::vector<long long>> d, bool symmetric) {
  if (m < 3) throw ValidationError("instance needs at least 3 cities");
  if (static_cast<int>(d.size()) != m) {
    throw ValidationError("distance matrix must have m rows");
  }
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(d[i].size()) != m) {
      throw ValidationError("distance matrix row " + std::to_string(i + 1) +
                            " must have m entries");
    }
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        if (d[i][j] != 0) throw ValidationError("diagonal distances must be 0");
      } else if (d[i][j] < 1) {
        throw ValidationError("off-diagonal distances must be positive integers");
      }
    }
  }
  if (symmetric) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (d[i][j] != d[j][i]) {
          throw ValidationError("distance matrix is not symmetric (flag the "
                                "instance asymmetric to allow this)");
        }
      }
    }
  }
  return TspInstance{m, std::move(d), symmetric};
}

TspInstance parse_instance_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad TSP JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("d")) {
    throw ParseError("TSP JSON needs fields \"m\" and \"d\"");
  }
  try {
    const int m = j.at("m").get<int>();
    auto d = j.at("d").get<std::vector<std::vector<long long>>>();
    const bool asymmetric = j.value("asymmetric", false);
    return make_instance(m, std::move(d), !asymmetric);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad TSP JSON: ") + e.what());
  }
}

std::string to_json(const TspInstance& t) {
  nlohmann::json j;
  j["m"] = t.m;
  j["d"] = t.d;
  if (!t.symmetric) j["asymmetric"] = true;
  return j.dump();
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap,
                          const char* what) {
  std::uint64_t value = 1;
  for (int i = 0; i < exp; ++i) {
    value *= base;
    if (value > cap) {
      throw CapExceeded(std::string(what) + " count exceeds cap " + std::to_string(cap));
    }
  }
  return value;
}

std::uint64_t factorial_capped(int n, std::uint64_t cap, const char* what) {
  std::uint64_t value = 1;
  for (int i = 2; i <= n; ++i) {
    value *= static_cast<std::uint64_t>(i);
    if (value > cap) {
      throw CapExceeded(std::string(what) + " count exceeds cap " + std::to_string(cap));
    }
  }
  return value;
}

}  // namespace

std::vector<TrajectoryKet> enumerate_trajectories(const TspInstance& t, std::uint64_t cap) {
  const int walls = t.m - 1;
  const std::uint64_t total =
      checked_pow(static_cast<std::uint64_t>(walls), walls, cap, "trajectory");
  const double amp = 1.0 / std::sqrt(static_cast<double>(total));

  std::vector<TrajectoryKet> kets;
  kets.reserve(total);
  std::vector<int> slits(walls, 2);  // lexicographically first trajectory
  for (std::uint64_t index = 0; index < total; ++index) {
    TrajectoryKet ket;
    ket.slits = slits;
    ket.visited.assign(walls, 0);
    long long k = t.d[0][slits[0] - 1];  // S -> first slit
    ket.visited[slits[0] - 2] = 1;
    for (int w = 1; w < walls; ++w) {
      k += t.d[slits[w - 1] - 1][slits[w] - 1];
      ket.visited[slits[w] - 2] = 1;
    }
    k += t.d[slits[walls - 1] - 1][0];  // last slit -> D
    ket.tour_length = k;
    ket.amplitude = amp;
    kets.push_back(std::move(ket));

    // next slit sequence, least significant position last
    for (int w = walls - 1; w >= 0; --w) {
      if (slits[w] < t.m) {
        ++slits[w];
        break;
      }
      slits[w] = 2;
    }
  }
  return kets;
}

std::vector<TrajectoryKet> filter_legal(std::vector<TrajectoryKet> kets) {
  std::erase_if(kets, [](const TrajectoryKet& ket) { return !ket.legal(); });
  const double amp = 1.0 / std::sqrt(static_cast<double>(kets.size()));
  for (TrajectoryKet& ket : kets) ket.amplitude = amp;
  return kets;
}

bool DetectorBank::fired(long long length) const {
  return std::any_of(streams.begin(), streams.end(), [length](const DetectorStream& s) {
    return s.tour_length == length;
  });
}

DetectorBank split_streams(const std::vector<TrajectoryKet>& legal) {
  DetectorBank bank;
  // Distances are integers, so the streams are exact bins.
  std::vector<std::pair<long long, std::uint64_t>> counts;
  for (const TrajectoryKet& ket : legal) {
    auto it = std::find_if(counts.begin(), counts.end(),
                           [&ket](const auto& p) { return p.first == ket.tour_length; });
    if (it == counts.end()) {
      counts.emplace_back(ket.tour_length, 1);
    } else {
      ++it->second;
    }
  }
  std::sort(counts.begin(), counts.end());
  for (const auto& [k, count] : counts) {
    bank.streams.push_back(DetectorStream{
        k, count, static_cast<double>(count) / static_cast<double>(legal.size())});
  }
  if (!bank.streams.empty()) bank.min_fired = bank.streams.front().tour_length;
  return bank;
}

BruteForceResult brute_force_tsp(const TspInstance& t, std::uint64_t cap) {
  factorial_capped(t.m - 1, cap, "permutation");

  std::vector<int> perm(t.m - 1);
  for (int i = 0; i < t.m - 1; ++i) perm[i] = i + 2;

  BruteForceResult result;
  result.min_length = -1;
  do {
    long long length = t.d[0][perm.front() - 1];
    for (std::size_t i = 1; i < perm.size(); ++i) {
      length += t.d[perm[i - 1] - 1][perm[i] - 1];
    }
    length += t.d[perm.back() - 1][0];
    result.all_lengths.push_back(length);
    if (result.min_length < 0 || length < result.min_length) {
      result.min_length = length;
      result.best_tour = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::sort(result.all_lengths.begin(), result.all_lengths.end());
  return result;
}

MachineReport run_cerny_machine(const TspInstance& t, std::uint64_t cap) {
  MachineReport report;
  auto kets = enumerate_trajectories(t, cap);
  report.trajectory_count = kets.size();
  const auto legal = filter_legal(std::move(kets));
  report.legal_count = legal.size();
  report.bank = split_streams(legal);
  report.min_fired = report.bank.min_fired.value();

  const double perms = static_cast<double>(report.legal_count);
  report.grover_cost = static_cast<std::uint64_t>(
      std::ceil(std::numbers::pi / 4.0 * std::sqrt(perms)));
  report.grover_cost_note =
      "the detectors reveal which lengths occur in one physical pass, but "
      "extracting the minimum from the superposition is not free: a Grover "
      "search over the " +
      std::to_string(report.legal_count) + " tours still needs about " +
      std::to_string(report.grover_cost) + " (= ceil((pi/4) sqrt((m-1)!))) queries";
  return report;
}

std::string to_json(const MachineReport& report) {
  nlohmann::json j;
  j["trajectories"] = report.trajectory_count;
  j["legal"] = report.legal_count;
  nlohmann::json streams = nlohmann::json::array();
  for (const DetectorStream& s : report.bank.streams) {
    streams.push_back({{"k", s.tour_length},
                       {"count", s.count},
                       {"probability", s.probability}});
  }
  j["streams"] = streams;
  j["min_fired"] = report.min_fired;
  j["grover_cost"] = report.grover_cost;
  j["grover_cost_note"] = report.grover_cost_note;
  return j.dump();
}

}  // namespace npduel::tsp
