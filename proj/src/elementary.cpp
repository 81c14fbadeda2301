#include "mqs/elementary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mqs {

namespace {

void check_ascending(const std::vector<int>& qs, int n, const char* who) {
  int prev = 0;
  for (int q : qs) {
    if (q < 1 || q > n) {
      throw std::out_of_range(std::string(who) + ": qubit out of range");
    }
    if (q <= prev) {
      throw std::invalid_argument(std::string(who) +
                                  ": indices must be strictly ascending");
    }
    prev = q;
  }
}

// exp(-i theta I_{k,ka} I_{l,la}) as a coupling gate inside a single-spin
// basis-change sandwich; axes are brought to z with y(-pi/2) / x(pi/2)
// rotations.
void emit_two_spin(Circuit& c, int k, Axis ka, int l, Axis la, double theta) {
  std::vector<Gate> pre, post;
  auto frame = [&](int q, Axis a) {
    if (a == Axis::X) {
      pre.push_back(SingleSpinGate{q, Axis::Y, -kPi / 2});
      post.insert(post.begin(), SingleSpinGate{q, Axis::Y, kPi / 2});
    } else if (a == Axis::Y) {
      pre.push_back(SingleSpinGate{q, Axis::X, kPi / 2});
      post.insert(post.begin(), SingleSpinGate{q, Axis::X, -kPi / 2});
    }
  };
  frame(k, ka);
  frame(l, la);
  for (auto& g : pre) c.push(std::move(g));
  c.push(CouplingGate{std::min(k, l), std::max(k, l), theta / 2});
  for (auto& g : post) c.push(std::move(g));
}

void emit_multibody_zz(Circuit& c, const std::vector<int>& idx, double theta) {
  const std::size_t m = idx.size();
  if (m == 1) {
    c.push(SingleSpinGate{idx[0], Axis::Z, theta});
    return;
  }
  if (m == 2) {
    c.push(CouplingGate{idx[0], idx[1], theta});
    return;
  }
  const int a = idx[m - 2];
  const int b = idx[m - 1];
  c.push(SingleSpinGate{a, Axis::X, -kPi / 2});
  c.push(CouplingGate{a, b, -kPi / 2});
  c.push(SingleSpinGate{a, Axis::Y, -kPi / 2});
  emit_multibody_zz(c, {idx.begin(), idx.end() - 1}, theta);
  c.push(SingleSpinGate{a, Axis::Y, kPi / 2});
  c.push(CouplingGate{a, b, kPi / 2});
  c.push(SingleSpinGate{a, Axis::X, kPi / 2});
}

}  // namespace

Circuit synth_multibody_zz(const std::vector<int>& indices, double theta, int n) {
  if (indices.empty()) {
    throw std::invalid_argument("synth_multibody_zz: empty index list");
  }
  std::vector<int> idx = indices;
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw std::invalid_argument("synth_multibody_zz: duplicate indices");
  }
  check_ascending(idx, n, "synth_multibody_zz");
  Circuit c;
  c.n = n;
  c.provenance = "multibody-zz";
  c.basic_ops = 1;
  emit_multibody_zz(c, idx, theta);
  return c;
}

Circuit synth_zero_quantum(int k, int l, double theta, int n) {
  if (k == l) {
    throw std::invalid_argument("synth_zero_quantum: k and l must differ");
  }
  if (k < 1 || k > n || l < 1 || l > n) {
    throw std::out_of_range("synth_zero_quantum: qubit out of range");
  }
  Circuit c;
  c.n = n;
  c.provenance = "zero-quantum-swap";
  if (theta == 0.0) return c;
  // V_kl(theta) = exp(-i theta I_kx I_ly) exp(+i theta I_ky I_lx),
  // rightmost factor applied first.
  emit_two_spin(c, k, Axis::Y, l, Axis::X, -theta);
  emit_two_spin(c, k, Axis::X, l, Axis::Y, theta);
  c.basic_ops = 2;
  return c;
}

Circuit NormalizedSelective::as_circuit() const {
  Circuit c = pre;
  c.push(canonical);
  c.append(post);
  return c;
}

NormalizedSelective normalize_selective(const std::vector<int>& subset,
                                        const std::vector<int>& labels,
                                        double theta, int n) {
  check_ascending(subset, n, "normalize_selective");
  if (subset.size() != labels.size()) {
    throw std::invalid_argument("normalize_selective: label count mismatch");
  }
  NormalizedSelective out;
  out.pre.n = out.post.n = n;
  out.pre.provenance = "selective-normalize-pre";
  out.post.provenance = "selective-normalize-post";
  // Label flips first, on the original qubits.
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (labels[i] == 1) {
      out.pre.push(SingleSpinGate{subset[i], Axis::X, kPi});
      out.post.gates.insert(out.post.gates.begin(),
                            SingleSpinGate{subset[i], Axis::X, -kPi});
    }
  }
  // Then compact the subset onto qubits 1..m with zero-quantum swaps.
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const int want = static_cast<int>(i) + 1;
    if (subset[i] != want) {
      const Circuit swap = synth_zero_quantum(want, subset[i], kPi, n);
      out.pre.append(swap);
      Circuit inv = inverse(swap);
      inv.gates.insert(inv.gates.end(), out.post.gates.begin(), out.post.gates.end());
      out.post.gates = std::move(inv.gates);
    }
  }
  const int m = static_cast<int>(subset.size());
  out.canonical.qubits.resize(m);
  out.canonical.labels.assign(m, 0);
  for (int i = 0; i < m; ++i) out.canonical.qubits[i] = i + 1;
  out.canonical.angle = theta;
  return out;
}

Circuit synth_basic_unitary(const ProductTerm& term, double theta, int n) {
  if (static_cast<int>(term.factors.size()) != n) {
    throw std::invalid_argument("synth_basic_unitary: factor count mismatch");
  }
  if (std::abs(term.coefficient.imag()) >
      1e-12 * std::max(1.0, std::abs(term.coefficient))) {
    throw std::invalid_argument(
        "synth_basic_unitary: coefficient must be real for a Hermitian term");
  }
  const double coeff = term.coefficient.real();

  std::vector<int> transverse;  // Spin factors
  std::vector<int> projectors;  // Projector factors
  for (int q = 1; q <= n; ++q) {
    switch (term.factors[q - 1].kind) {
      case SpinFactor::Kind::Spin: transverse.push_back(q); break;
      case SpinFactor::Kind::Projector: projectors.push_back(q); break;
      case SpinFactor::Kind::Identity: break;
    }
  }

  Circuit c;
  c.n = n;
  c.provenance = "basic-unitary";
  c.basic_ops = 1;

  if (coeff == 0.0) return c;
  if (transverse.empty() && projectors.empty()) {
    // Pure identity term: a global phase.
    c.global_phase = theta * coeff;
    return c;
  }

  std::vector<Gate> post;
  auto frame = [&](int q, Axis a) {
    if (a == Axis::X) {
      c.push(SingleSpinGate{q, Axis::Y, -kPi / 2});
      post.insert(post.begin(), SingleSpinGate{q, Axis::Y, kPi / 2});
    } else if (a == Axis::Y) {
      c.push(SingleSpinGate{q, Axis::X, kPi / 2});
      post.insert(post.begin(), SingleSpinGate{q, Axis::X, -kPi / 2});
    }
  };
  for (int q : transverse) frame(q, term.factors[q - 1].axis);
  for (int q : projectors) frame(q, term.factors[q - 1].axis);

  const std::size_t l = transverse.size();
  const double ang = l >= 1 ? theta * coeff / std::pow(2.0, double(l - 1))
                            : theta * coeff;

  if (projectors.empty()) {
    emit_multibody_zz(c, transverse, ang);
  } else if (transverse.empty()) {
    SelectiveGate sel;
    sel.qubits = projectors;
    for (int q : projectors) {
      sel.labels.push_back(term.factors[q - 1].sign > 0 ? 0 : 1);
    }
    sel.angle = ang;
    c.push(std::move(sel));
  } else {
    // Collapse the transverse z chain onto its first index, then split
    // I_z = (E/2 + I_z) - E/2 into two commuting selective rotations.
    std::vector<Gate> chain_post;
    std::vector<int> chain = transverse;
    while (chain.size() > 1) {
      const int a = chain[chain.size() - 2];
      const int b = chain.back();
      c.push(SingleSpinGate{a, Axis::X, -kPi / 2});
      c.push(CouplingGate{a, b, -kPi / 2});
      c.push(SingleSpinGate{a, Axis::Y, -kPi / 2});
      std::vector<Gate> stage = {SingleSpinGate{a, Axis::Y, kPi / 2},
                                 CouplingGate{a, b, kPi / 2},
                                 SingleSpinGate{a, Axis::X, kPi / 2}};
      chain_post.insert(chain_post.begin(), stage.begin(), stage.end());
      chain.pop_back();
    }
    SelectiveGate big;
    std::vector<std::pair<int, int>> qubit_labels;
    qubit_labels.emplace_back(transverse.front(), 0);
    for (int q : projectors) {
      qubit_labels.emplace_back(q, term.factors[q - 1].sign > 0 ? 0 : 1);
    }
    std::sort(qubit_labels.begin(), qubit_labels.end());
    for (const auto& [q, lab] : qubit_labels) {
      big.qubits.push_back(q);
      big.labels.push_back(lab);
    }
    big.angle = ang;
    SelectiveGate small;
    small.qubits = projectors;
    for (int q : projectors) {
      small.labels.push_back(term.factors[q - 1].sign > 0 ? 0 : 1);
    }
    small.angle = -ang / 2;
    c.push(std::move(big));
    c.push(std::move(small));
    for (auto& g : chain_post) c.push(std::move(g));
  }
  for (auto& g : post) c.push(std::move(g));
  return c;
}

}  // namespace mqs
