#include "mqs/transfer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mqs/operators.hpp"

namespace mqs {

namespace {

void check_position(Index p, Index N, const char* who) {
  if (p < 0 || p >= N) {
    throw std::out_of_range(std::string(who) + ": position out of range");
  }
}

// Admissibility of k for source m, target mp: every target position
// N-k-1-l_m-l' must lie in [l_mp, L_mp]; targets are strictly decreasing in
// l', so the two endpoints decide.
bool admissible(const SubspaceLayout& lay, int m, int mp, Index k) {
  const Index N = Index{1} << lay.n;
  const Index top = N - k - 1 - lay.l[m];
  const Index bot = N - k - 1 - lay.L[m];
  return lay.l[mp] <= bot && top <= lay.L[mp] && N - 1 - k > 2 * lay.L[m];
}

int popcount_i(Index v) { return std::popcount(static_cast<std::uint64_t>(v)); }

}  // namespace

Matrix build_Qpsk(Index source_pos, Index target_pos, int n) {
  const Index N = Index{1} << n;
  check_position(source_pos, N, "build_Qpsk");
  check_position(target_pos, N, "build_Qpsk");
  if (source_pos == target_pos) {
    throw std::invalid_argument("build_Qpsk: positions must be distinct");
  }
  Matrix q = Matrix::Zero(N, N);
  q(source_pos, target_pos) = 0.5;
  q(target_pos, source_pos) = 0.5;
  return q;
}

Matrix build_Upsk_closed(Index source_pos, Index target_pos, double theta, int n) {
  const Index N = Index{1} << n;
  check_position(source_pos, N, "build_Upsk_closed");
  check_position(target_pos, N, "build_Upsk_closed");
  if (source_pos == target_pos) {
    throw std::invalid_argument("build_Upsk_closed: positions must be distinct");
  }
  Matrix u = Matrix::Identity(N, N);
  const double c = std::cos(theta / 2);
  const Complex s = Complex(0.0, -1.0) * std::sin(theta / 2);
  u(source_pos, source_pos) = c;
  u(target_pos, target_pos) = c;
  u(source_pos, target_pos) = s;
  u(target_pos, source_pos) = s;
  return u;
}

IndexWindow solve_index_window(const SubspaceLayout& lay, int m, int mp) {
  const int n = lay.n;
  if (m < 0 || mp > n || m >= mp || mp > n - m) {
    throw std::invalid_argument(
        "solve_index_window: need 0 <= m < m' <= n - m");
  }
  const Index N = Index{1} << n;
  IndexWindow w{N, -1};
  bool open = false;
  for (Index k = 0; k <= N - 2; ++k) {
    bool ok;
    if (lay.d[m] <= 4096) {
      ok = N - 1 - k > 2 * lay.L[m];
      for (Index lp = 0; ok && lp < lay.d[m]; ++lp) {
        const Index tgt = N - k - 1 - lay.l[m] - lp;
        ok = lay.l[mp] <= tgt && tgt <= lay.L[mp];
      }
    } else {
      // targets decrease monotonically in l'; endpoints suffice
      ok = admissible(lay, m, mp, k);
    }
    if (ok) {
      w.k_min = std::min(w.k_min, k);
      w.k_max = std::max(w.k_max, k);
      open = true;
    } else if (open) {
      break;  // windows are contiguous
    }
  }
  if (!open) {
    throw std::runtime_error("solve_index_window: empty window");
  }
  return w;
}

ChosenK choose_k(const SubspaceLayout& lay, int m) {
  const int n = lay.n;
  const int peak = lay.peak();
  if (m < 0 || m >= peak) {
    throw std::invalid_argument("choose_k: need 0 <= m < peak subspace");
  }
  const IndexWindow window = solve_index_window(lay, m, peak);

  ChosenK out;
  if (lay.l[m + 1] * 2 <= lay.d[peak]) {
    // regime A: the single-term operator index
    out.candidate = Index{1} << (n - 1);
  } else {
    // regime B: two-power index from the Stirling-sized step ladder
    double n0d, k0d;
    const double nn = static_cast<double>(n);
    if (n % 2 == 0) {
      n0d = std::log2(0.5 * nn * std::sqrt(nn) * std::sqrt(kPi / 2) *
                      (1 + 2 / nn));
      k0d = std::log2(std::sqrt(nn) * std::sqrt(kPi / 2) / (1 + 2 / nn));
    } else {
      n0d = std::log2(std::sqrt(kPi / 2) * (nn + 3) / 4 *
                      ((1 + nn) * std::sqrt(nn - 1) / nn) *
                      std::sqrt(std::pow(1 + 1 / nn, nn) /
                                std::pow(1 + 1 / (nn - 1), nn - 1)));
      k0d = std::log2(std::sqrt(nn) * std::sqrt(kPi / 2) / (1 + 2 / nn));
    }
    const int n0 = static_cast<int>(std::floor(n0d));
    const int k0 = static_cast<int>(std::floor(k0d));
    const Index base = Index{1} << (n - k0 - 1);
    const Index step = Index{1} << (n - n0 - 1);
    // smallest mu (possibly negative) with base + mu step >= k_min
    const Index diff = window.k_min - base;
    const Index mu = diff > 0 ? (diff + step - 1) / step : -((-diff) / step);
    out.candidate = base + mu * step;
  }

  if (window.contains(out.candidate)) {
    out.k = out.candidate;
    return out;
  }
  // Fallback: sparsest binary expansion inside the window, nearest to the
  // candidate on ties.
  out.fallback = true;
  Index best = window.k_min;
  for (Index k = window.k_min; k <= window.k_max; ++k) {
    const int pc = popcount_i(k);
    const int bc = popcount_i(best);
    if (pc < bc ||
        (pc == bc && std::abs(k - out.candidate) < std::abs(best - out.candidate))) {
      best = k;
    }
  }
  out.k = best;
  return out;
}

QpmOperator build_Qpm(const SubspaceLayout& lay, int m, Index k) {
  const int n = lay.n;
  const Index N = Index{1} << n;
  if (m < 0 || m > n) throw std::out_of_range("build_Qpm: bad subspace");
  if (N - 1 - k <= 2 * lay.L[m]) {
    throw std::invalid_argument("build_Qpm: index violates N-1-k > 2 L_m");
  }
  // locate the target subspace and validate the window
  const Index top = N - k - 1 - lay.l[m];
  const Index bot = N - k - 1 - lay.L[m];
  check_position(top, N, "build_Qpm");
  check_position(bot, N, "build_Qpm");
  int mp = -1;
  for (int s = 0; s <= n; ++s) {
    if (lay.l[s] <= bot && top <= lay.L[s]) {
      mp = s;
      break;
    }
  }
  if (mp < 0 || mp == m) {
    throw std::invalid_argument(
        "build_Qpm: k does not pair subspace m with a single larger subspace");
  }

  const Matrix g = build_diag(GmSpec{lay, m}, BasisOrdering::WeightLex);
  const Matrix b = build_b({n, k});
  // reduction premise: the anti-diagonal line must not touch the source block
  // twice; with the window checks above this is the zero submatrix check.
  if (b.block(lay.l[m], lay.l[m], lay.d[m], lay.d[m]).cwiseAbs().maxCoeff() >
      0.0) {
    throw std::invalid_argument("build_Qpm: source block overlaps the line");
  }

  QpmOperator out;
  out.dense = 0.5 * anticommutator(g, b);
  out.target_subspace = mp;
  for (Index lp = 0; lp < lay.d[m]; ++lp) {
    out.pairs.emplace_back(lay.l[m] + lp, N - k - 1 - lay.l[m] - lp);
  }
  return out;
}

bool check_conjugation_reduction(const SubspaceLayout& lay, int m, Index k, double* deviation) {
  const int n = lay.n;
  if (n > 12) throw std::out_of_range("check_conjugation_reduction: n must be <= 12");
  const Matrix g = build_diag(GmSpec{lay, m}, BasisOrdering::WeightLex);
  const Matrix b = build_b({n, k});
  const Matrix G = expm_hermitian(g, kPi);
  const Matrix lhs = G * b * G.inverse();
  const Matrix rhs = b - 2.0 * anticommutator(b, g);
  const double dev = max_abs_diff(lhs, rhs);
  if (deviation) *deviation = dev;
  return dev < kEqTol;
}

Circuit synth_Upm(const TransferSpec& spec, GmRoute gm_route) {
  const auto& lay = spec.layout;
  const int n = lay.n;
  const int mp = spec.resolved_target();
  Index k = spec.k;
  if (k < 0) {
    k = mp == lay.peak() ? choose_k(lay, spec.m).k
                         : solve_index_window(lay, spec.m, mp).k_min;
  }
  if (!solve_index_window(lay, spec.m, mp).contains(k)) {
    throw std::invalid_argument("synth_Upm: k outside the admissible window");
  }
  const int L = spec.trotter_L;
  if (L < 1) throw std::invalid_argument("synth_Upm: trotter_L >= 1");

  Circuit c;
  c.n = n;

  const GmSpec gm{lay, spec.m};
  Circuit g_pos, g_neg;
  if (gm_route == GmRoute::Naive) {
    g_pos = naive_Gm(gm, kPi, BasisOrdering::WeightLex);
    g_neg = naive_Gm(gm, -kPi, BasisOrdering::WeightLex);
  } else {
    g_pos = synth_block_diagonal({n, lay.l[spec.m], lay.L[spec.m]}, kPi);
    g_neg = synth_block_diagonal({n, lay.l[spec.m], lay.L[spec.m]}, -kPi);
  }
  const Circuit b_pos = synth_Bk(k, spec.theta / (4.0 * L), spec.trotter_L, n);
  const Circuit b_neg = synth_Bk(k, -spec.theta / (4.0 * L), spec.trotter_L, n);

  for (int step = 0; step < L; ++step) {
    c.append(g_neg);
    c.append(b_neg);
    c.append(g_pos);
    c.append(b_pos);
  }
  c.provenance = gm_route == GmRoute::Naive
                     ? "Upm"
                     : "Upm(block-Gm; gate counts are for weight-ordered "
                       "positions, ordering bridge not included)";
  return c;
}

Circuit symmetric_flip(int n) {
  Circuit c;
  c.n = n;
  c.provenance = "symmetric-flip";
  for (int q = 1; q <= n; ++q) c.push(SingleSpinGate{q, Axis::X, kPi});
  c.basic_ops = n;
  return c;
}

Vector transfer_state(const Vector& state, const TransferSpec& spec,
                      bool use_exact) {
  const auto& lay = spec.layout;
  const Index N = Index{1} << lay.n;
  if (spec.m < 0 || spec.m > lay.n) {
    throw std::out_of_range("transfer_state: bad subspace index");
  }
  if (state.size() != N) {
    throw std::invalid_argument("transfer_state: state length mismatch");
  }
  if (std::abs(state.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("transfer_state: state is not normalized");
  }
  double outside = 0.0;
  for (Index i = 0; i < N; ++i) {
    if (i < lay.l[spec.m] || i > lay.L[spec.m]) outside += std::norm(state(i));
  }
  if (outside > 1e-8) {
    throw std::invalid_argument(
        "transfer_state: support outside the source subspace");
  }
  if (use_exact) {
    Index k = spec.k;
    if (k < 0) {
      const int mp = spec.resolved_target();
      k = mp == lay.peak() ? choose_k(lay, spec.m).k
                           : solve_index_window(lay, spec.m, mp).k_min;
    }
    const QpmOperator q = build_Qpm(lay, spec.m, k);
    return expm_hermitian(q.dense, spec.theta) * state;
  }
  return apply_to_state(synth_Upm(spec), state);
}

Vector random_subspace_state(const SubspaceLayout& lay, int m,
                             std::uint64_t seed) {
  if (m < 0 || m > lay.n) {
    throw std::out_of_range("random_subspace_state: bad subspace index");
  }
  const Index N = Index{1} << lay.n;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v = Vector::Zero(N);
  for (Index p = lay.l[m]; p <= lay.L[m]; ++p) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(p) = Complex(re, im);
  }
  v.normalize();
  return v;
}

}  // namespace mqs
