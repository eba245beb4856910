#include "npduel/statevector.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

namespace npduel::qsim {

namespace {

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw ValidationError("qubit count " + std::to_string(num_qubits) +
                          " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

SingleQubitGate::SingleQubitGate(Amplitude m00, Amplitude m01, Amplitude m10,
                                 Amplitude m11)
    : m_{m00, m01, m10, m11} {
  for (const Amplitude& a : m_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ValidationError("gate entries must be finite");
    }
  }
  // U^dagger U = I, entrywise.
  const Amplitude col0[2] = {m_[0], m_[2]};
  const Amplitude col1[2] = {m_[1], m_[3]};
  auto dot = [](const Amplitude* a, const Amplitude* b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
  };
  const Amplitude g00 = dot(col0, col0);
  const Amplitude g01 = dot(col0, col1);
  const Amplitude g11 = dot(col1, col1);
  if (std::abs(g00 - 1.0) > kUnitarityTol || std::abs(g11 - 1.0) > kUnitarityTol ||
      std::abs(g01) > kUnitarityTol) {
    throw ValidationError("gate is not unitary within tolerance");
  }
}

const SingleQubitGate& SingleQubitGate::identity() {
  static const SingleQubitGate g(1.0, 0.0, 0.0, 1.0);
  return g;
}

const SingleQubitGate& SingleQubitGate::pauli_x() {
  static const SingleQubitGate g(0.0, 1.0, 1.0, 0.0);
  return g;
}

const SingleQubitGate& SingleQubitGate::pauli_z() {
  static const SingleQubitGate g(1.0, 0.0, 0.0, -1.0);
  return g;
}

const SingleQubitGate& SingleQubitGate::hadamard() {
  static const double h = 1.0 / std::numbers::sqrt2;
  static const SingleQubitGate g(h, h, h, -h);
  return g;
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
  check_qubit_count(num_qubits);
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (index >= dim) {
    throw ValidationError("basis index " + std::to_string(index) +
                          " outside [0, 2^" + std::to_string(num_qubits) + ")");
  }
  std::vector<Amplitude> amps(dim);
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<Amplitude> amps) {
  check_qubit_count(num_qubits);
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (amps.size() != dim) {
    throw ValidationError("amplitude count " + std::to_string(amps.size()) +
                          " != 2^" + std::to_string(num_qubits));
  }
  for (const Amplitude& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ValidationError("amplitudes must be finite");
    }
  }
  return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm_sqr() const {
  double total = 0.0;
  for (const Amplitude& a : amps_) total += std::norm(a);
  return total;
}

StateVector apply_gate(StateVector s, const SingleQubitGate& g, int qubit) {
  if (qubit < 0 || qubit >= s.num_qubits()) {
    throw ValidationError("qubit index " + std::to_string(qubit) + " out of range");
  }
  const std::uint64_t mask = std::uint64_t{1} << qubit;
  const std::uint64_t lo_mask = mask - 1;
  const std::uint64_t hi_mask = ~lo_mask;
  const std::uint64_t pairs = s.dimension() >> 1;
  const Amplitude m00 = g.at(0, 0), m01 = g.at(0, 1), m10 = g.at(1, 0), m11 = g.at(1, 1);
  auto& amps = s.amps_;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const std::uint64_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
    const std::uint64_t i1 = i0 | mask;
    const Amplitude a0 = amps[i0];
    const Amplitude a1 = amps[i1];
    amps[i0] = m00 * a0 + m01 * a1;
    amps[i1] = m10 * a0 + m11 * a1;
  }
  return s;
}

StateVector walsh_hadamard_all(StateVector s) {
  for (int q = 0; q < s.num_qubits(); ++q) {
    s = apply_gate(std::move(s), SingleQubitGate::hadamard(), q);
  }
  return s;
}

StateVector scale(StateVector s, Amplitude factor) {
  for (Amplitude& a : s.amps_) a *= factor;
  return s;
}

StateVector add(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw ValidationError("qubit count mismatch in add");
  }
  std::vector<Amplitude> amps(a.dimension());
  for (std::uint64_t i = 0; i < a.dimension(); ++i) {
    amps[i] = a.amplitude(i) + b.amplitude(i);
  }
  return StateVector::from_amplitudes(a.num_qubits(), std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int total = a.num_qubits() + b.num_qubits();
  if (total > kMaxQubits) {
    throw CapExceeded("tensor product of " + std::to_string(total) +
                      " qubits exceeds cap " + std::to_string(kMaxQubits));
  }
  std::vector<Amplitude> amps(std::uint64_t{1} << total);
  for (std::uint64_t ib = 0; ib < b.dimension(); ++ib) {
    const Amplitude bb = b.amplitude(ib);
    const std::uint64_t base = ib << a.num_qubits();
    for (std::uint64_t ia = 0; ia < a.dimension(); ++ia) {
      amps[base | ia] = a.amplitude(ia) * bb;
    }
  }
  return StateVector::from_amplitudes(total, std::move(amps));
}

namespace {

void require_normalized(const StateVector& s) {
  if (std::abs(s.norm_sqr() - 1.0) > kNormDriftTol) {
    throw ValidationError("state is not normalized");
  }
}

}  // namespace

MeasurementOutcome measure_all(const StateVector& s, Rng& rng) {
  require_normalized(s);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  const double u = dist(rng);
  double acc = 0.0;
  std::uint64_t outcome = s.dimension() - 1;
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    acc += std::norm(s.amplitude(i));
    if (u < acc) {
      outcome = i;
      break;
    }
  }
  return MeasurementOutcome{outcome, StateVector::basis_state(s.num_qubits(), outcome)};
}

std::pair<int, StateVector> measure_qubit(const StateVector& s, int qubit, Rng& rng) {
  if (qubit < 0 || qubit >= s.num_qubits()) {
    throw ValidationError("qubit index " + std::to_string(qubit) + " out of range");
  }
  require_normalized(s);
  const std::uint64_t mask = std::uint64_t{1} << qubit;
  double p1 = 0.0;
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    if (i & mask) p1 += std::norm(s.amplitude(i));
  }
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  // Strict comparison: u in [0,1), so an exactly-zero branch is never taken.
  const int bit = dist(rng) < p1 ? 1 : 0;
  const double p = bit ? p1 : 1.0 - p1;
  const double inv = 1.0 / std::sqrt(p);
  std::vector<Amplitude> amps(s.dimension());
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    if (static_cast<int>((i & mask) != 0) == bit) {
      amps[i] = s.amplitude(i) * inv;
    }
  }
  return {bit, StateVector::from_amplitudes(s.num_qubits(), std::move(amps))};
}

double probability_of(const StateVector& s,
                      const std::function<bool(std::uint64_t)>& predicate) {
  double total = 0.0;
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    if (predicate(i)) total += std::norm(s.amplitude(i));
  }
  return total;
}

bool is_entangled_2q(const StateVector& s, double tol) {
  if (s.num_qubits() != 2) {
    throw ValidationError("entanglement test requires exactly 2 qubits");
  }
  // det of [[c00, c01], [c10, c11]] with c_{q1 q0}; a product state
  // (a0|0>+a1|1>) x (b0|0>+b1|1>) has c_{ij} = b_i a_j, so det = 0.
  const Amplitude det =
      s.amplitude(0) * s.amplitude(3) - s.amplitude(1) * s.amplitude(2);
  return std::abs(det) > tol;
}

void dump_nonzero(const StateVector& s, std::ostream& out) {
  char line[96];
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    const Amplitude a = s.amplitude(i);
    if (a == 0.0) continue;
    std::snprintf(line, sizeof(line), "%llu\t%.17g\t%.17g\n",
                  static_cast<unsigned long long>(i), a.real(), a.imag());
    out << line;
  }
}

std::string dump_nonzero(const StateVector& s) {
  std::ostringstream out;
  dump_nonzero(s, out);
  return out.str();
}

}  // namespace npduel::qsim
