#pragma once

#include <vector>

#include "mqs/types.hpp"

namespace mqs {

/// Decomposition of the 2^n-dimensional Hilbert space into the n+1
/// subspaces of fixed total magnetic quantum number. d[m] = binomial(n, m);
/// l[m]..L[m] are the contiguous position offsets of subspace m in
/// weight-sorted basis order.
struct SubspaceLayout {
  int n = 0;
  std::vector<Index> d;
  std::vector<Index> l;
  std::vector<Index> L;

  /// Index of the largest subspace: n/2 for even n, (n-1)/2 for odd n.
  int peak() const { return n / 2; }
};

enum class BasisOrdering { Binary, WeightLex };

/// Bijection between weight-lex positions and binary basis indices.
/// forward[pos] is the binary index of the pos-th state when states are
/// sorted by weight ascending, ties broken by ascending binary index.
struct BasisPermutation {
  int n = 0;
  std::vector<Index> forward;
  std::vector<Index> inverse;
};

SubspaceLayout build_layout(int n);  // 1 <= n <= 20

int weight_of(Index binary_index, int n);

/// Weight-lex position of a binary basis index: l_m plus the rank of the
/// index among weight-m indices in ascending order.
Index weight_rank(Index binary_index, const SubspaceLayout& layout);

BasisPermutation build_permutation(const SubspaceLayout& layout);

/// Permutation matrix P with P_{pos, forward(pos)} = 1: conjugating a
/// binary-ordered operator by P yields its weight-ordered representation.
Matrix permutation_dense(const SubspaceLayout& layout);  // n <= 12

/// Probability mass per subspace m for a unit-norm state under the given
/// basis ordering. Rejects non-normalized input (tolerance 1e-8).
std::vector<double> subspace_support(const Vector& state,
                                     const SubspaceLayout& layout,
                                     BasisOrdering ordering);

}  // namespace mqs
