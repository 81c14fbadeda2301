#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mqs/circuit.hpp"
#include "mqs/generators.hpp"
#include "mqs/subspace.hpp"

namespace mqs {

/// A requested subspace transfer. Positions and index arithmetic live in
/// weight-lex ordering, where every subspace is a contiguous block.
struct TransferSpec {
  SubspaceLayout layout;
  int m = 0;            ///< source subspace
  int target = -1;      ///< target subspace; -1 picks the largest
  double theta = kPi;   ///< complete transfer at pi
  int trotter_L = 1;
  Index k = -1;         ///< anti-diagonal index; -1 lets the solver choose

  int resolved_target() const { return target < 0 ? layout.peak() : target; }
};

/// Admissible anti-diagonal indices for a transfer, inclusive.
struct IndexWindow {
  Index k_min = 0;
  Index k_max = -1;
  bool contains(Index k) const { return k_min <= k && k <= k_max; }
  Index width() const { return k_max - k_min; }
};

/// The subspace-selective operator Q_pm = (g_m b_k + b_k g_m) / 2 together
/// with its source/target position pairs.
struct QpmOperator {
  Matrix dense;
  std::vector<std::pair<Index, Index>> pairs;
  int target_subspace = 0;
};

/// Result of the closed-form index choice; when the candidate misses the
/// brute-force window, the nearest in-window index with the sparsest binary
/// expansion is substituted and flagged.
struct ChosenK {
  Index k = 0;
  Index candidate = 0;
  bool fallback = false;
};

Matrix build_Qpsk(Index source_pos, Index target_pos, int n);

/// Closed-form state-selective rotation: identity except for the 2x2
/// cos/sin block on the two positions. Equals expm_hermitian(Q_psk, theta).
Matrix build_Upsk_closed(Index source_pos, Index target_pos, double theta, int n);

/// Brute-force scan of the admissibility condition over every k: all d(m)
/// targets must land inside the target subspace block and the anti-diagonal
/// line must clear twice the source block.
IndexWindow solve_index_window(const SubspaceLayout& layout, int m, int m_prime);

/// Closed-form k for transfers into the largest subspace: 2^{n-1} while
/// l_{m+1} <= d(peak)/2, otherwise the two-power form 2^{n-k0-1} + mu
/// 2^{n-n0-1}; always validated against the brute-force window.
ChosenK choose_k(const SubspaceLayout& layout, int m);

QpmOperator build_Qpm(const SubspaceLayout& layout, int m, Index k);

/// Whether G_m(pi) b_k G_m(pi)^{-1} = b_k - 2 [b_k, g_m]_+ holds dense
/// (expected under the window preconditions). Optionally reports the
/// deviation.
bool check_conjugation_reduction(const SubspaceLayout& layout, int m, Index k,
                double* deviation = nullptr);

enum class GmRoute {
  Naive,  ///< d(m) selective rotations, exact; for verification builds
  Block,  ///< block reduction, < 2n gates; for count reporting
};

/// Product-formula circuit for U_pm(theta) = exp(-i theta Q_pm):
/// [exp(-i theta/4 b_k / L) G_m(pi) exp(+i theta/4 b_k / L) G_m(pi)^{-1}]^L.
Circuit synth_Upm(const TransferSpec& spec, GmRoute gm_route = GmRoute::Naive);

/// n pi x-pulses; conjugation swaps the weight-m and weight-(n-m)
/// subspaces.
Circuit symmetric_flip(int n);

/// Applies the transfer to a state supported in subspace m (weight
/// ordering): dense exp(-i theta Q_pm) when use_exact, otherwise the
/// synthesized circuit.
Vector transfer_state(const Vector& state, const TransferSpec& spec,
                      bool use_exact);

/// Seeded complex-Gaussian state on the subspace-m positions, normalized.
Vector random_subspace_state(const SubspaceLayout& layout, int m,
                             std::uint64_t seed);

}  // namespace mqs
