#include "mqs/subspace.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace mqs {

namespace {

Index binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Index r = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

SubspaceLayout build_layout(int n) {
  if (n < 1 || n > 20) {
    throw std::out_of_range("build_layout: n must be in 1..20");
  }
  SubspaceLayout out;
  out.n = n;
  out.d.resize(n + 1);
  out.l.resize(n + 1);
  out.L.resize(n + 1);
  Index off = 0;
  for (int m = 0; m <= n; ++m) {
    out.d[m] = binomial(n, m);
    out.l[m] = off;
    off += out.d[m];
    out.L[m] = off - 1;
  }
  return out;
}

int weight_of(Index binary_index, int n) {
  if (binary_index < 0 || binary_index >= (Index{1} << n)) {
    throw std::out_of_range("weight_of: index out of range");
  }
  return std::popcount(static_cast<std::uint64_t>(binary_index));
}

Index weight_rank(Index binary_index, const SubspaceLayout& layout) {
  const int n = layout.n;
  const int m = weight_of(binary_index, n);
  // Combinatorial rank within the weight class, most significant bit first.
  Index rank = 0;
  int ones = m;
  for (int bit = n - 1; bit >= 0 && ones > 0; --bit) {
    if ((binary_index >> bit) & 1) {
      rank += binomial(bit, ones);
      --ones;
    }
  }
  return layout.l[m] + rank;
}

BasisPermutation build_permutation(const SubspaceLayout& layout) {
  const Index N = Index{1} << layout.n;
  BasisPermutation p;
  p.n = layout.n;
  p.forward.resize(N);
  p.inverse.resize(N);
  for (Index x = 0; x < N; ++x) {
    const Index pos = weight_rank(x, layout);
    p.forward[pos] = x;
    p.inverse[x] = pos;
  }
  return p;
}

Matrix permutation_dense(const SubspaceLayout& layout) {
  if (layout.n > 12) {
    throw std::out_of_range("permutation_dense: n must be <= 12");
  }
  const auto p = build_permutation(layout);
  const Index N = Index{1} << layout.n;
  Matrix P = Matrix::Zero(N, N);
  for (Index pos = 0; pos < N; ++pos) P(pos, p.forward[pos]) = 1.0;
  return P;
}

std::vector<double> subspace_support(const Vector& state,
                                     const SubspaceLayout& layout,
                                     BasisOrdering ordering) {
  const Index N = Index{1} << layout.n;
  if (state.size() != N) {
    throw std::invalid_argument("subspace_support: state length mismatch");
  }
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-8) {
    throw std::invalid_argument("subspace_support: state is not normalized");
  }
  std::vector<double> mass(layout.n + 1, 0.0);
  for (Index i = 0; i < N; ++i) {
    int m;
    if (ordering == BasisOrdering::Binary) {
      m = weight_of(i, layout.n);
    } else {
      m = static_cast<int>(std::upper_bound(layout.l.begin(), layout.l.end(), i) -
                           layout.l.begin()) - 1;
    }
    mass[m] += std::norm(state(i));
  }
  return mass;
}

}  // namespace mqs
