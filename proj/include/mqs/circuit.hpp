#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mqs/types.hpp"

namespace mqs {

/// exp(-i theta I_{k,mu}), single-qubit rotation.
struct SingleSpinGate {
  int qubit = 1;
  Axis axis = Axis::Z;
  double angle = 0.0;
};

/// exp(-i theta 2 I_{kz} I_{lz}), the two-qubit coupling gate.
struct CouplingGate {
  int qubit_a = 1;
  int qubit_b = 2;
  double angle = 0.0;
};

/// exp(-i theta D) where D projects the listed qubit subset onto the bit
/// pattern given by labels (label 0 = projector E/2 + I_z). Lowers to a
/// diagonal with e^{-i theta} on exactly 2^{n-m} basis states.
struct SelectiveGate {
  std::vector<int> qubits;  // strictly ascending
  std::vector<int> labels;  // 0 or 1, one per qubit
  double angle = 0.0;
};

using Gate = std::variant<SingleSpinGate, CouplingGate, SelectiveGate>;

/// Gate list in temporal order: the first element is applied first to a
/// state, so the dense form multiplies later gates on the left.
struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
  std::string provenance;
  double global_phase = 0.0;  // dense form carries a factor e^{-i phase}
  long basic_ops = 0;         // basic unitary operations consumed by synthesis

  void push(Gate g) { gates.push_back(std::move(g)); }
  void append(const Circuit& other);
  std::size_t size() const { return gates.size(); }
};

/// Reverses gate order and negates angles (and the global phase).
Circuit inverse(const Circuit& c);

/// Conjugation by the full register of pi x-pulses: x-angles kept, y/z
/// angles negated, selective labels complemented. Realizes
/// X^{(x)n} U X^{(x)n} gate-by-gate with no extra gates.
Circuit spin_flip_conjugate(const Circuit& c);

struct GateCountReport {
  long single_spin = 0;
  long coupling = 0;
  long selective = 0;
  std::map<int, long> selective_by_size;
  long total() const { return single_spin + coupling + selective; }
};

Matrix gate_to_dense(const Gate& g, int n);
Matrix circuit_to_dense(const Circuit& c);  // n <= 12

void apply_gate(const Gate& g, Vector& v, int n);
Vector apply_to_state(const Circuit& c, const Vector& v);

GateCountReport count(const Circuit& c);

/// JSON serialization. Angles are encoded as hex-float strings so that
/// round-trips are bit-exact; output bytes are deterministic.
std::string serialize(const Circuit& c);
Circuit deserialize(const std::string& bytes);

}  // namespace mqs
