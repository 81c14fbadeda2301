#pragma once

#include <utility>

#include "mqs/circuit.hpp"
#include "mqs/operators.hpp"
#include "mqs/subspace.hpp"

namespace mqs {

/// Contiguous block of one-valued diagonal entries over binary indices l..L.
struct DiagonalBlockSpec {
  int n = 0;
  Index l = 0;
  Index L = 0;
};

/// Projector g_m onto subspace m of the layout.
struct GmSpec {
  SubspaceLayout layout;
  int m = 0;
};

/// Anti-diagonal operator b_k: symmetric 0/1 matrix with 2^n - |k| ones on
/// the line row = -col + 2^n - 1 - k (mirrored for k < 0).
struct AntiDiagonalSpec {
  int n = 0;
  Index k = 0;
};

/// Centered anti-diagonal operator bbar_{k1} (odd k): b_1's line with
/// 2^n - k ones centered, (k-1)/2 zeros trimmed at each end; paired with
/// the diagonal block gbar_k over positions (k-1)/2 .. 2^{n-1}-2.
struct BbarSpec {
  int n = 0;
  Index k = 1;
};

Matrix build_diag(const DiagonalBlockSpec& spec);
Matrix build_diag(const GmSpec& spec, BasisOrdering ordering);

/// Parity-driven reduction of exp(-i theta Diag(block)) into selective
/// rotations over shrinking leading registers; fewer than 2n gates.
Circuit synth_block_diagonal(const DiagonalBlockSpec& spec, double theta);

/// exp(-i theta g_m) as exactly d(m) full-register selective rotations,
/// one per subspace basis state.
Circuit naive_Gm(const GmSpec& spec, double theta, BasisOrdering ordering);

Matrix build_b(const AntiDiagonalSpec& spec);

/// Exact commuting product-operator expansion of b_k. Term counts: 1 for
/// k = 0, n for |k| = 1, n - l for |k| = 2^l, (r-m+1)(n-r)-1 and
/// (r-m)(n-r)+1 for |k| = 2^r +- 2^m, at most 2^{n-1} in general.
OperatorSum expand_b(const AntiDiagonalSpec& spec);

std::pair<Matrix, Matrix> build_bbar(const BbarSpec& spec);  // (bbar, gbar)

/// Conjugating unitary with U_k bbar_{k1} U_k^+ = b_k (odd k), as a product
/// of exp(+i pi/2 b_{+-j}) factors over the binary expansion of k - 1.
/// Fewer than n^2 basic operations.
Circuit synth_Uk(Index k, int n);

enum class BkRoute {
  Auto,         ///< expansion when the term count is polynomial, else conjugation
  Expansion,    ///< exact commuting-term product (may be exponential in size)
  Conjugation,  ///< U_k-conjugated centered form with the product-formula core
};

/// Circuit for B_k(theta) = exp(-i theta b_k). The expansion route is exact;
/// the conjugation route uses trotter_L product-formula steps and at most
/// 2n^2 + 6 trotter_L n basic operations.
Circuit synth_Bk(Index k, double theta, int trotter_L, int n,
                 BkRoute route = BkRoute::Auto);

}  // namespace mqs
