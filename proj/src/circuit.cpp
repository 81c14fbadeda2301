#include "mqs/circuit.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace mqs {

namespace {

using nlohmann::json;

void check_qubit(int q, int n) {
  if (q < 1 || q > n) {
    throw std::out_of_range("gate qubit " + std::to_string(q) +
                            " outside register 1.." + std::to_string(n));
  }
}

void validate_gate(const Gate& g, int n) {
  if (const auto* s = std::get_if<SingleSpinGate>(&g)) {
    check_qubit(s->qubit, n);
  } else if (const auto* c = std::get_if<CouplingGate>(&g)) {
    check_qubit(c->qubit_a, n);
    check_qubit(c->qubit_b, n);
    if (c->qubit_a == c->qubit_b) {
      throw std::invalid_argument("coupling gate needs two distinct qubits");
    }
  } else {
    const auto& sel = std::get<SelectiveGate>(g);
    if (sel.qubits.empty() || sel.qubits.size() != sel.labels.size()) {
      throw std::invalid_argument("selective gate qubit/label size mismatch");
    }
    int prev = 0;
    for (std::size_t i = 0; i < sel.qubits.size(); ++i) {
      check_qubit(sel.qubits[i], n);
      if (sel.qubits[i] <= prev) {
        throw std::invalid_argument("selective gate qubits must be strictly ascending");
      }
      prev = sel.qubits[i];
      if (sel.labels[i] != 0 && sel.labels[i] != 1) {
        throw std::invalid_argument("selective gate labels must be 0 or 1");
      }
    }
  }
}

std::string encode_angle(double a) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", a);
  return buf;
}

double decode_angle(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
      throw std::invalid_argument("bad angle encoding: " + s);
    }
    return v;
  }
  throw std::invalid_argument("angle must be a number or string");
}

const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

Axis axis_from(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  throw std::invalid_argument("bad axis: " + s);
}

}  // namespace

void Circuit::append(const Circuit& other) {
  if (other.n != n) {
    throw std::invalid_argument("Circuit::append: register size mismatch");
  }
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  global_phase += other.global_phase;
  basic_ops += other.basic_ops;
}

Circuit inverse(const Circuit& c) {
  Circuit out;
  out.n = c.n;
  out.provenance = c.provenance.empty() ? "" : c.provenance + "-inverse";
  out.global_phase = -c.global_phase;
  out.basic_ops = c.basic_ops;
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    std::visit([](auto& gg) { gg.angle = -gg.angle; }, g);
    out.gates.push_back(std::move(g));
  }
  return out;
}

Circuit spin_flip_conjugate(const Circuit& c) {
  Circuit out = c;
  for (auto& g : out.gates) {
    if (auto* s = std::get_if<SingleSpinGate>(&g)) {
      if (s->axis != Axis::X) s->angle = -s->angle;
    } else if (auto* sel = std::get_if<SelectiveGate>(&g)) {
      for (auto& lab : sel->labels) lab = 1 - lab;
    }
    // coupling gates are invariant under the full x flip
  }
  return out;
}

void apply_gate(const Gate& g, Vector& v, int n) {
  validate_gate(g, n);
  const Index N = Index{1} << n;
  if (const auto* s = std::get_if<SingleSpinGate>(&g)) {
    const double h = 0.5 * s->angle;
    const Complex c = std::cos(h);
    const Complex ms = Complex(0.0, -1.0) * std::sin(h);
    // 2x2 block exp(-i theta sigma_mu / 2) applied to the qubit's bit pairs
    Complex u00 = c, u01 = 0, u10 = 0, u11 = c;
    switch (s->axis) {
      case Axis::X: u01 = ms; u10 = ms; break;
      case Axis::Y: u01 = -Complex(0.0, 1.0) * ms; u10 = Complex(0.0, 1.0) * ms; break;
      case Axis::Z: u00 = c + ms; u11 = c - ms; break;
    }
    const Index bit = Index{1} << (n - s->qubit);
    for (Index i = 0; i < N; ++i) {
      if (i & bit) continue;
      const Index j = i | bit;
      const Complex a = v(i), b = v(j);
      v(i) = u00 * a + u01 * b;
      v(j) = u10 * a + u11 * b;
    }
  } else if (const auto* cp = std::get_if<CouplingGate>(&g)) {
    const Complex same = std::exp(Complex(0.0, -0.5 * cp->angle));
    const Complex diff = std::exp(Complex(0.0, 0.5 * cp->angle));
    const Index ba = Index{1} << (n - cp->qubit_a);
    const Index bb = Index{1} << (n - cp->qubit_b);
    for (Index i = 0; i < N; ++i) {
      const bool eq = static_cast<bool>(i & ba) == static_cast<bool>(i & bb);
      v(i) *= eq ? same : diff;
    }
  } else {
    const auto& sel = std::get<SelectiveGate>(g);
    const Complex ph = std::exp(Complex(0.0, -sel.angle));
    Index mask = 0, want = 0;
    for (std::size_t i = 0; i < sel.qubits.size(); ++i) {
      const Index bit = Index{1} << (n - sel.qubits[i]);
      mask |= bit;
      if (sel.labels[i] == 1) want |= bit;
    }
    for (Index i = 0; i < N; ++i) {
      if ((i & mask) == want) v(i) *= ph;
    }
  }
}

Vector apply_to_state(const Circuit& c, const Vector& v) {
  const Index N = Index{1} << c.n;
  if (v.size() != N) {
    throw std::invalid_argument("apply_to_state: state length mismatch");
  }
  Vector out = v;
  for (const auto& g : c.gates) apply_gate(g, out, c.n);
  if (c.global_phase != 0.0) out *= std::exp(Complex(0.0, -c.global_phase));
  return out;
}

Matrix gate_to_dense(const Gate& g, int n) {
  const Index N = Index{1} << n;
  Matrix out(N, N);
  Vector col = Vector::Zero(N);
  for (Index j = 0; j < N; ++j) {
    col.setZero();
    col(j) = 1.0;
    apply_gate(g, col, n);
    out.col(j) = col;
  }
  return out;
}

Matrix circuit_to_dense(const Circuit& c) {
  if (c.n > 12) {
    throw std::out_of_range("circuit_to_dense: n must be <= 12");
  }
  const Index N = Index{1} << c.n;
  Matrix out(N, N);
  Vector col = Vector::Zero(N);
  for (Index j = 0; j < N; ++j) {
    col.setZero();
    col(j) = 1.0;
    for (const auto& g : c.gates) apply_gate(g, col, c.n);
    out.col(j) = col;
  }
  if (c.global_phase != 0.0) out *= std::exp(Complex(0.0, -c.global_phase));
  return out;
}

GateCountReport count(const Circuit& c) {
  GateCountReport r;
  for (const auto& g : c.gates) {
    if (std::holds_alternative<SingleSpinGate>(g)) {
      ++r.single_spin;
    } else if (std::holds_alternative<CouplingGate>(g)) {
      ++r.coupling;
    } else {
      ++r.selective;
      ++r.selective_by_size[static_cast<int>(std::get<SelectiveGate>(g).qubits.size())];
    }
  }
  return r;
}

std::string serialize(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates) {
    json jg;
    if (const auto* s = std::get_if<SingleSpinGate>(&g)) {
      jg["gate"] = "single";
      jg["qubit"] = s->qubit;
      jg["axis"] = axis_name(s->axis);
      jg["angle"] = encode_angle(s->angle);
    } else if (const auto* cp = std::get_if<CouplingGate>(&g)) {
      jg["gate"] = "zz";
      jg["qubits"] = {cp->qubit_a, cp->qubit_b};
      jg["angle"] = encode_angle(cp->angle);
    } else {
      const auto& sel = std::get<SelectiveGate>(g);
      jg["gate"] = "sel";
      jg["qubits"] = sel.qubits;
      jg["labels"] = sel.labels;
      jg["angle"] = encode_angle(sel.angle);
    }
    gates.push_back(std::move(jg));
  }
  json top;
  top["n"] = c.n;
  top["provenance"] = c.provenance;
  top["gates"] = std::move(gates);
  if (c.global_phase != 0.0) top["phase"] = encode_angle(c.global_phase);
  return top.dump();
}

Circuit deserialize(const std::string& bytes) {
  json top;
  try {
    top = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("circuit parse error at byte " +
                             std::to_string(e.byte) + ": " + e.what());
  }
  Circuit c;
  c.n = top.at("n").get<int>();
  if (c.n < 1) throw std::invalid_argument("circuit n must be positive");
  c.provenance = top.value("provenance", std::string{});
  if (top.contains("phase")) c.global_phase = decode_angle(top.at("phase"));
  for (const auto& jg : top.at("gates")) {
    const std::string kind = jg.at("gate").get<std::string>();
    Gate g;
    if (kind == "single") {
      g = SingleSpinGate{jg.at("qubit").get<int>(),
                         axis_from(jg.at("axis").get<std::string>()),
                         decode_angle(jg.at("angle"))};
    } else if (kind == "zz") {
      const auto qs = jg.at("qubits").get<std::vector<int>>();
      if (qs.size() != 2) throw std::invalid_argument("zz gate needs 2 qubits");
      g = CouplingGate{qs[0], qs[1], decode_angle(jg.at("angle"))};
    } else if (kind == "sel") {
      g = SelectiveGate{jg.at("qubits").get<std::vector<int>>(),
                        jg.at("labels").get<std::vector<int>>(),
                        decode_angle(jg.at("angle"))};
    } else {
      throw std::invalid_argument("unknown gate kind: " + kind);
    }
    validate_gate(g, c.n);
    c.gates.push_back(std::move(g));
  }
  return c;
}

}  // namespace mqs
