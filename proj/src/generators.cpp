#include "mqs/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "mqs/elementary.hpp"

namespace mqs {

namespace {

bool is_pow2(Index v) { return v > 0 && (v & (v - 1)) == 0; }

int trailing_zeros(Index v) {
  return std::countr_zero(static_cast<std::uint64_t>(v));
}

void check_block(const DiagonalBlockSpec& s) {
  const Index N = Index{1} << s.n;
  if (s.n < 1 || s.n > 20) throw std::out_of_range("block: n out of range");
  if (s.l < 0 || s.l > s.L || s.L >= N) {
    throw std::invalid_argument("block: need 0 <= l <= L < 2^n");
  }
}

SpinFactor fac_x() { return SpinFactor::spin(Axis::X); }
SpinFactor fac_p(int sign) { return SpinFactor::projector(sign, Axis::Z); }

using Terms = std::vector<ProductTerm>;

// Recursive product-operator expansion. Internal indices may reach the
// boundary |k| = 2^n - 1 (the corner projector), which the recursion needs
// even though the public operator family stops at 2^n - 2.
Terms expand_rec(int n, Index k) {
  if (k < 0) {
    Terms out = expand_rec(n, -k);
    for (auto& t : out) {
      for (auto& f : t.factors) {
        if (f.kind == SpinFactor::Kind::Projector) f.sign = -f.sign;
      }
    }
    return out;
  }
  const Index N = Index{1} << n;
  if (k > N - 1) throw std::logic_error("expand_rec: index out of range");
  if (k == 0) {
    ProductTerm t;
    t.coefficient = static_cast<double>(N);
    t.factors.assign(n, fac_x());
    return {std::move(t)};
  }
  if (k == N - 1) {
    ProductTerm t;
    t.coefficient = 1.0;
    t.factors.assign(n, fac_p(+1));
    return {std::move(t)};
  }
  if (k >= N / 2) {
    Terms out = expand_rec(n - 1, k - N / 2);
    for (auto& t : out) t.factors.insert(t.factors.begin(), fac_p(+1));
    return out;
  }
  if (k == 1) {
    Terms out;
    for (int j = 0; j < n; ++j) {
      ProductTerm t;
      t.coefficient = std::pow(2.0, double(j));
      t.factors.assign(j, fac_x());
      t.factors.push_back(fac_p(+1));
      t.factors.insert(t.factors.end(), n - j - 1, fac_p(-1));
      out.push_back(std::move(t));
    }
    return out;
  }
  if (k % 2 == 0) {
    const int tz = trailing_zeros(k);
    Terms out = expand_rec(n - tz, k >> tz);
    for (auto& t : out) {
      t.coefficient *= std::pow(2.0, double(tz));
      t.factors.insert(t.factors.end(), tz, fac_x());
    }
    return out;
  }
  // odd k >= 3: split at the last qubit
  const Index k1 = (k - 1) / 2;
  const Index l1 = (k + 1) / 2;
  Terms out;
  if (k1 % 2 == 0) {
    for (auto& t : expand_rec(n - 2, k1 / 2)) {
      t.coefficient *= 2.0;
      t.factors.push_back(fac_x());
      t.factors.push_back(fac_p(+1));
      out.push_back(std::move(t));
    }
    for (auto& t : expand_rec(n - 1, l1)) {
      t.factors.push_back(fac_p(-1));
      out.push_back(std::move(t));
    }
  } else {
    for (auto& t : expand_rec(n - 2, l1 / 2)) {
      t.coefficient *= 2.0;
      t.factors.push_back(fac_x());
      t.factors.push_back(fac_p(-1));
      out.push_back(std::move(t));
    }
    for (auto& t : expand_rec(n - 1, k1)) {
      t.factors.push_back(fac_p(+1));
      out.push_back(std::move(t));
    }
  }
  return out;
}

// Structural shape of an anti-diagonal index: optional leading projector
// (|k| >= 2^{n-1}), trailing x-string width, and the odd core index.
struct KShape {
  bool high = false;   // leading (E/2 + I_z) peel
  int suffix = 0;      // trailing zero count of the peeled index
  Index odd_core = 0;  // odd index on the core register
  int core_n = 0;      // core register width
};

KShape analyze_k(Index k, int n) {
  KShape s;
  Index a = std::abs(k);
  int reg = n;
  if (a >= (Index{1} << (n - 1))) {
    s.high = true;
    a -= Index{1} << (n - 1);
    reg -= 1;
  }
  if (a == 0) {
    s.suffix = 0;
    s.odd_core = 0;
    s.core_n = reg;
    return s;
  }
  s.suffix = trailing_zeros(a);
  s.odd_core = a >> s.suffix;
  s.core_n = reg - s.suffix;
  return s;
}

// The families whose expansions stay polynomial: b_0, b_{+-1}, b_{+-2^l},
// b_{2^r +- 2^m}, and their high-index peels.
bool polynomial_family(Index k, int n) {
  const KShape s = analyze_k(k, n);
  if (s.odd_core == 0 || s.odd_core == 1) return true;
  return is_pow2(s.odd_core - 1) || is_pow2(s.odd_core + 1);
}

}  // namespace

Matrix build_diag(const DiagonalBlockSpec& spec) {
  check_block(spec);
  const Index N = Index{1} << spec.n;
  Matrix out = Matrix::Zero(N, N);
  for (Index i = spec.l; i <= spec.L; ++i) out(i, i) = 1.0;
  return out;
}

Matrix build_diag(const GmSpec& spec, BasisOrdering ordering) {
  const auto& lay = spec.layout;
  if (spec.m < 0 || spec.m > lay.n) {
    throw std::out_of_range("build_diag: subspace index out of range");
  }
  const Index N = Index{1} << lay.n;
  Matrix out = Matrix::Zero(N, N);
  if (ordering == BasisOrdering::WeightLex) {
    for (Index i = lay.l[spec.m]; i <= lay.L[spec.m]; ++i) out(i, i) = 1.0;
  } else {
    for (Index i = 0; i < N; ++i) {
      if (weight_of(i, lay.n) == spec.m) out(i, i) = 1.0;
    }
  }
  return out;
}

Circuit synth_block_diagonal(const DiagonalBlockSpec& spec, double theta) {
  check_block(spec);
  Circuit c;
  c.n = spec.n;
  c.provenance = "block-diagonal";

  auto emit = [&](int reg, Index t) {
    SelectiveGate g;
    g.qubits.resize(reg);
    g.labels.resize(reg);
    for (int i = 0; i < reg; ++i) {
      g.qubits[i] = i + 1;
      g.labels[i] = static_cast<int>((t >> (reg - 1 - i)) & 1);
    }
    g.angle = theta;
    c.push(std::move(g));
    ++c.basic_ops;
  };

  int reg = spec.n;
  Index a = spec.l, b = spec.L;
  while (a <= b) {
    if (a == 0 && b == (Index{1} << reg) - 1) {
      c.global_phase += theta;  // all-ones block is a pure phase
      break;
    }
    if (a == b) {
      emit(reg, a);
      break;
    }
    const Index d = b - a + 1;
    const bool a_even = a % 2 == 0;
    const bool d_even = d % 2 == 0;
    if (a_even && d_even) {
      a /= 2;
      b = (b - 1) / 2;
    } else if (!a_even && !d_even) {  // trailing-zeros count even: peel at a
      emit(reg, a);
      a = (a + 1) / 2;
      b = (b - 1) / 2;
    } else if (a_even) {  // d odd: peel at b
      emit(reg, b);
      b = (b - 2) / 2;
      a /= 2;
    } else {  // d even, a odd: peel both ends
      emit(reg, a);
      emit(reg, b);
      a = (a + 1) / 2;
      b = (b - 2) / 2;
    }
    --reg;
  }
  return c;
}

Circuit naive_Gm(const GmSpec& spec, double theta, BasisOrdering ordering) {
  const auto& lay = spec.layout;
  if (spec.m < 0 || spec.m > lay.n) {
    throw std::out_of_range("naive_Gm: subspace index out of range");
  }
  if (lay.d[spec.m] > (Index{1} << 12)) {
    throw std::invalid_argument("naive_Gm: subspace dimension above 2^12");
  }
  Circuit c;
  c.n = lay.n;
  c.provenance = "naive-Gm";
  std::vector<Index> targets;
  if (ordering == BasisOrdering::WeightLex) {
    for (Index p = lay.l[spec.m]; p <= lay.L[spec.m]; ++p) targets.push_back(p);
  } else {
    const Index N = Index{1} << lay.n;
    for (Index i = 0; i < N; ++i) {
      if (weight_of(i, lay.n) == spec.m) targets.push_back(i);
    }
  }
  for (Index t : targets) {
    SelectiveGate g;
    g.qubits.resize(lay.n);
    g.labels.resize(lay.n);
    for (int i = 0; i < lay.n; ++i) {
      g.qubits[i] = i + 1;
      g.labels[i] = static_cast<int>((t >> (lay.n - 1 - i)) & 1);
    }
    g.angle = theta;
    c.push(std::move(g));
  }
  c.basic_ops = static_cast<long>(targets.size());
  return c;
}

Matrix build_b(const AntiDiagonalSpec& spec) {
  const Index N = Index{1} << spec.n;
  if (std::abs(spec.k) > N - 2) {
    throw std::out_of_range("build_b: |k| must be <= 2^n - 2");
  }
  Matrix out = Matrix::Zero(N, N);
  const Index c0 = N - 1 - std::abs(spec.k);  // row + col on the line
  for (Index row = 0; row < N; ++row) {
    const Index col = spec.k >= 0 ? c0 - row : (N - 1 + (-spec.k)) - row;
    if (col >= 0 && col < N) out(row, col) = 1.0;
  }
  return out;
}

OperatorSum expand_b(const AntiDiagonalSpec& spec) {
  const Index N = Index{1} << spec.n;
  if (std::abs(spec.k) > N - 2) {
    throw std::out_of_range("expand_b: |k| must be <= 2^n - 2");
  }
  OperatorSum out;
  out.n = spec.n;
  out.terms = expand_rec(spec.n, spec.k);
  return out;
}

std::pair<Matrix, Matrix> build_bbar(const BbarSpec& spec) {
  const Index N = Index{1} << spec.n;
  if (spec.k % 2 == 0 || spec.k < 1 || spec.k >= N - 1) {
    throw std::invalid_argument("build_bbar: k must be odd and in [1, 2^n - 2]");
  }
  const Index trim = (spec.k - 1) / 2;
  Matrix bbar = Matrix::Zero(N, N);
  for (Index row = trim; row <= N - 2 - trim; ++row) {
    bbar(row, N - 2 - row) = 1.0;
  }
  Matrix gbar = Matrix::Zero(N, N);
  for (Index i = trim; i <= N / 2 - 2; ++i) gbar(i, i) = 1.0;
  return {std::move(bbar), std::move(gbar)};
}

Circuit synth_Uk(Index k, int n) {
  const Index N = Index{1} << n;
  if (k % 2 == 0 || k < 1 || k > N - 2) {
    throw std::invalid_argument("synth_Uk: k must be odd and in [1, 2^n - 2]");
  }
  Circuit c;
  c.n = n;
  // binary expansion k = 2^{k_{l-1}} + ... + 2^{k_1} + 1, exponents descending
  std::vector<int> exps;
  for (int e = n - 1; e >= 1; --e) {
    if ((k >> e) & 1) exps.push_back(e);
  }
  // rightmost factor of the product acts first: emit in reverse, starting
  // with the parity factor exp(+i pi/2 b_0) when the factor count is odd
  if (exps.size() % 2 == 1) {
    c.append(synth_Bk(0, -kPi / 2, 1, n, BkRoute::Expansion));
  }
  for (std::size_t t = exps.size(); t-- > 0;) {
    const Index j = Index{1} << (exps[t] - 1);
    const Index signed_j = (t % 2 == 0) ? j : -j;
    // exp(+i pi/2 b_j) = exp(-i (-pi/2) b_j), exact expansion route
    c.append(synth_Bk(signed_j, -kPi / 2, 1, n, BkRoute::Expansion));
  }
  c.provenance = "Uk";
  return c;
}

Circuit synth_Bk(Index k, double theta, int trotter_L, int n, BkRoute route) {
  const Index N = Index{1} << n;
  if (std::abs(k) > N - 2) {
    throw std::out_of_range("synth_Bk: |k| must be <= 2^n - 2");
  }
  if (trotter_L < 1) throw std::invalid_argument("synth_Bk: trotter_L >= 1");
  if (route == BkRoute::Auto) {
    route = polynomial_family(k, n) ? BkRoute::Expansion : BkRoute::Conjugation;
  }

  if (route == BkRoute::Expansion) {
    Circuit c;
    c.n = n;
    for (const auto& t : expand_b({n, k}).terms) {
      c.append(synth_basic_unitary(t, theta, n));
    }
    c.provenance = "Bk-expansion";
    return c;
  }

  // Conjugation route. Negative indices are the spin-flip mirror of the
  // positive construction.
  if (k < 0) {
    Circuit c = spin_flip_conjugate(synth_Bk(-k, theta, trotter_L, n, route));
    c.provenance = "Bk-conjugation";
    return c;
  }
  const KShape shape = analyze_k(k, n);
  if (shape.odd_core == 0 ||
      shape.odd_core == (Index{1} << shape.core_n) - 1) {
    // x-string cores and corner-projector cores are single product terms;
    // nothing to conjugate.
    return synth_Bk(k, theta, trotter_L, n, BkRoute::Expansion);
  }
  const int t = shape.core_n;            // core register width
  const int core_lo = shape.high ? 2 : 1;  // first core qubit
  const Index Nc = Index{1} << t;
  const Index kc = shape.odd_core;

  Circuit c;
  c.n = n;

  // Trailing x-string to z frame.
  std::vector<Gate> frame_post;
  for (int q = core_lo + t; q <= n; ++q) {
    c.push(SingleSpinGate{q, Axis::Y, -kPi / 2});
    frame_post.insert(frame_post.begin(), SingleSpinGate{q, Axis::Y, kPi / 2});
  }

  // Factors shared by every product term: the leading projector and the
  // trailing z spins (carrying 2^{suffix}).
  auto lift_term = [&](const ProductTerm& core) {
    ProductTerm full;
    full.coefficient = core.coefficient * std::pow(2.0, double(shape.suffix));
    if (shape.high) full.factors.push_back(fac_p(+1));
    full.factors.insert(full.factors.end(), core.factors.begin(),
                        core.factors.end());
    full.factors.insert(full.factors.end(), shape.suffix,
                        SpinFactor::spin(Axis::Z));
    return full;
  };
  // Core-register circuits (U_k, Gbar) act as the identity on the peeled
  // qubit and the suffix; only the exponentiated terms carry the projector
  // prefix and the z string.
  auto embed_circuit = [&](const Circuit& core) {
    Circuit out;
    out.n = n;
    out.basic_ops = core.basic_ops;
    out.global_phase = core.global_phase;
    const int off = core_lo - 1;
    for (Gate g : core.gates) {
      if (auto* s = std::get_if<SingleSpinGate>(&g)) {
        s->qubit += off;
      } else if (auto* cp = std::get_if<CouplingGate>(&g)) {
        cp->qubit_a += off;
        cp->qubit_b += off;
      } else {
        auto& sel = std::get<SelectiveGate>(g);
        for (auto& q : sel.qubits) q += off;
      }
      out.gates.push_back(std::move(g));
    }
    return out;
  };

  // U_k on the core register, embedded.
  const Circuit uk = embed_circuit(synth_Uk(kc, t));

  c.append(inverse(uk));

  // Product-formula steps for exp(-i theta (bbar - D_c)) with the centered
  // operator; each step is exp(-i a b1) Gbar(pi) exp(+i a b1) Gbar(pi)^-1
  // lifted by the shared factors.
  const double alpha = theta / (2.0 * trotter_L);
  const Index trim = (kc - 1) / 2;
  const DiagonalBlockSpec gbar_block{t, trim, Nc / 2 - 2};
  const Circuit gbar_pos = embed_circuit(synth_block_diagonal(gbar_block, kPi));
  const Circuit gbar_neg = embed_circuit(synth_block_diagonal(gbar_block, -kPi));

  const Terms b1_terms = expand_rec(t, 1);
  auto b1_exp = [&](double a) {
    Circuit out;
    out.n = n;
    for (const auto& term : b1_terms) {
      out.append(synth_basic_unitary(lift_term(term), a, n));
    }
    return out;
  };
  const Circuit b1_pos = b1_exp(alpha);
  const Circuit b1_neg = b1_exp(-alpha);

  for (int step = 0; step < trotter_L; ++step) {
    c.append(gbar_neg);
    c.append(b1_neg);
    c.append(gbar_pos);
    c.append(b1_pos);
  }

  // Selective phase on the centered diagonal one, lifted.
  {
    ProductTerm dc;
    dc.coefficient = 1.0;
    const Index cpos = Nc / 2 - 1;
    for (int i = 0; i < t; ++i) {
      dc.factors.push_back(fac_p(((cpos >> (t - 1 - i)) & 1) ? -1 : +1));
    }
    c.append(synth_basic_unitary(lift_term(dc), theta, n));
  }

  c.append(uk);
  for (auto& g : frame_post) c.push(std::move(g));
  c.provenance = "Bk-conjugation";
  return c;
}

}  // namespace mqs
