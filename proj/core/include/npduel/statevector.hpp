#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "npduel/errors.hpp"
#include "npduel/rng.hpp"

namespace npduel::qsim {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;
/// Construction-time unitarity tolerance (per matrix entry).
inline constexpr double kUnitarityTol = 1e-12;
/// Permitted |norm^2 - 1| drift of a state under repeated gate application.
inline constexpr double kNormDriftTol = 1e-9;

/// 2x2 unitary. Unitarity (U^dagger U = I within kUnitarityTol per entry) is
/// enforced at construction, so downstream code never re-checks it.
class SingleQubitGate {
 public:
  SingleQubitGate(Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11);

  static const SingleQubitGate& identity();
  static const SingleQubitGate& pauli_x();
  static const SingleQubitGate& pauli_z();
  static const SingleQubitGate& hadamard();

  Amplitude at(int row, int col) const { return m_[row * 2 + col]; }

 private:
  Amplitude m_[4];
};

/// Dense statevector over n qubits, 2^n amplitudes. Basis indices are
/// little-endian: bit b of the index is the value of qubit b. Value-semantic;
/// operations below return new states.
class StateVector {
 public:
  /// Amplitude 1 at `index`, 0 elsewhere.
  static StateVector basis_state(int num_qubits, std::uint64_t index);

  /// Takes the amplitudes as given (no normalization); components must be
  /// finite. Measurement and probability queries require a normalized state.
  static StateVector from_amplitudes(int num_qubits, std::vector<Amplitude> amps);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return amps_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  Amplitude amplitude(std::uint64_t index) const { return amps_.at(index); }

  double norm_sqr() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector(int num_qubits, std::vector<Amplitude> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  int num_qubits_;
  std::vector<Amplitude> amps_;

  friend StateVector apply_gate(StateVector s, const SingleQubitGate& g, int qubit);
  friend StateVector scale(StateVector s, Amplitude factor);
};

/// (I x ... x g x ... x I) s with g acting on `qubit`.
StateVector apply_gate(StateVector s, const SingleQubitGate& g, int qubit);

/// H applied to every qubit; on |0...0> this yields the uniform superposition.
StateVector walsh_hadamard_all(StateVector s);

/// Elementwise scaling (used for global phases and test superpositions).
StateVector scale(StateVector s, Amplitude factor);
StateVector add(const StateVector& a, const StateVector& b);

/// Combined register: `a` occupies the low qubits, so the amplitude at index
/// (ib * 2^{na} + ia) is a[ia] * b[ib].
StateVector tensor(const StateVector& a, const StateVector& b);

struct MeasurementOutcome {
  std::uint64_t basis_index;
  StateVector collapsed;
};

/// Samples basis index i with probability |c_i|^2; the collapsed state is
/// basis_state(n, i).
MeasurementOutcome measure_all(const StateVector& s, Rng& rng);

/// Projective measurement of one qubit; returns the bit and the renormalized
/// projection. The probability-0 branch is never sampled.
std::pair<int, StateVector> measure_qubit(const StateVector& s, int qubit, Rng& rng);

/// Sum of |c_i|^2 over indices satisfying the predicate.
double probability_of(const StateVector& s,
                      const std::function<bool(std::uint64_t)>& predicate);

/// 2-qubit product-state test: entangled iff |c00*c11 - c01*c10| > tol.
bool is_entangled_2q(const StateVector& s, double tol);

/// Debug dump: one line per nonzero amplitude, "index<TAB>re<TAB>im",
/// indices ascending. Golden-file format; do not change casually.
void dump_nonzero(const StateVector& s, std::ostream& out);
std::string dump_nonzero(const StateVector& s);

}  // namespace npduel::qsim
