#pragma once

#include <vector>

#include "mqs/types.hpp"

namespace mqs {

/// Single-spin factor of a product operator: the identity E, a spin
/// component I_mu = sigma_mu / 2, or a projector P(a, mu) = E/2 + a * I_mu
/// with sign a in {+1, -1}. Every factor is Hermitian and lowers to a
/// fixed 2x2 matrix.
struct SpinFactor {
  enum class Kind { Identity, Spin, Projector };

  Kind kind = Kind::Identity;
  Axis axis = Axis::Z;  // meaningful for Spin and Projector
  int sign = +1;        // meaningful for Projector

  static SpinFactor identity() { return {}; }
  static SpinFactor spin(Axis mu) { return {Kind::Spin, mu, +1}; }
  static SpinFactor projector(int a, Axis mu) { return {Kind::Projector, mu, a}; }

  bool operator==(const SpinFactor&) const = default;
};

/// coefficient * (factor_1 tensor ... tensor factor_n), qubit 1 first.
/// Qubit 1 maps to the most significant bit of the binary basis index.
struct ProductTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<SpinFactor> factors;

  ProductTerm() = default;
  ProductTerm(Complex c, std::vector<SpinFactor> f)
      : coefficient(c), factors(std::move(f)) {}
};

struct OperatorSum {
  int n = 0;
  std::vector<ProductTerm> terms;
};

Eigen::Matrix2cd factor_matrix(const SpinFactor& f);

/// Exact tensor-product lowering of a term to its 2^n x 2^n matrix.
/// Throws std::invalid_argument when the factor list length differs from n.
Matrix lower(const ProductTerm& term, int n);
Matrix lower(const OperatorSum& sum);

bool is_hermitian(const Matrix& a, double tol = kHermTol);

/// exp(-i theta A) for Hermitian A via spectral decomposition.
/// Rejects non-Hermitian input.
Matrix expm_hermitian(const Matrix& a, double theta);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

/// Max entry magnitude of A - e^{i phi} B with the global phase phi chosen
/// to align the largest-magnitude entry pair. Zero for A = B up to phase.
double phase_aligned_distance(const Matrix& a, const Matrix& b);

/// Max entry magnitude of A - B.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace mqs
