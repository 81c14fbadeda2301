#include "mqs/operators.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace mqs {

namespace {

Eigen::Matrix2cd pauli_half(Axis mu) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  const Complex i(0.0, 1.0);
  switch (mu) {
    case Axis::X:
      m(0, 1) = 0.5;
      m(1, 0) = 0.5;
      break;
    case Axis::Y:
      m(0, 1) = -0.5 * i;
      m(1, 0) = 0.5 * i;
      break;
    case Axis::Z:
      m(0, 0) = 0.5;
      m(1, 1) = -0.5;
      break;
  }
  return m;
}

}  // namespace

Eigen::Matrix2cd factor_matrix(const SpinFactor& f) {
  switch (f.kind) {
    case SpinFactor::Kind::Identity:
      return Eigen::Matrix2cd::Identity();
    case SpinFactor::Kind::Spin:
      return pauli_half(f.axis);
    case SpinFactor::Kind::Projector:
      return 0.5 * Eigen::Matrix2cd::Identity() +
             static_cast<double>(f.sign) * pauli_half(f.axis);
  }
  throw std::logic_error("factor_matrix: bad kind");
}

Matrix lower(const ProductTerm& term, int n) {
  if (static_cast<int>(term.factors.size()) != n) {
    throw std::invalid_argument("lower: term has " +
                                std::to_string(term.factors.size()) +
                                " factors, register has " + std::to_string(n));
  }
  const Index N = Index{1} << n;
  std::vector<Eigen::Matrix2cd> mats(term.factors.size());
  for (std::size_t q = 0; q < term.factors.size(); ++q) {
    mats[q] = factor_matrix(term.factors[q]);
  }

  Matrix out = Matrix::Zero(N, N);
  // Walk nonzero column continuations per row; every factor matrix has at
  // most two nonzeros per row, so the accumulator stays small for the
  // sparse factor kinds.
  std::vector<std::pair<Index, Complex>> acc;
  std::vector<std::pair<Index, Complex>> next;
  for (Index row = 0; row < N; ++row) {
    acc.assign(1, {Index{0}, term.coefficient});
    for (int q = 0; q < n; ++q) {
      const int rb = static_cast<int>((row >> (n - 1 - q)) & 1);
      next.clear();
      for (int cb = 0; cb < 2; ++cb) {
        const Complex v = mats[q](rb, cb);
        if (v == Complex{0.0, 0.0}) continue;
        for (const auto& [col, amp] : acc) {
          next.emplace_back((col << 1) | cb, amp * v);
        }
      }
      std::swap(acc, next);
      if (acc.empty()) break;
    }
    for (const auto& [col, amp] : acc) out(row, col) += amp;
  }
  return out;
}

Matrix lower(const OperatorSum& sum) {
  const Index N = Index{1} << sum.n;
  Matrix out = Matrix::Zero(N, N);
  for (const auto& t : sum.terms) out += lower(t, sum.n);
  return out;
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() < tol;
}

Matrix expm_hermitian(const Matrix& a, double theta) {
  if (!is_hermitian(a)) {
    throw std::invalid_argument("expm_hermitian: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("expm_hermitian: eigendecomposition failed");
  }
  const auto& w = es.eigenvalues();
  Vector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -theta * w(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("commutator: dimension mismatch");
  }
  return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("anticommutator: dimension mismatch");
  }
  return a * b + b * a;
}

double phase_aligned_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("phase_aligned_distance: dimension mismatch");
  }
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  Complex phase{1.0, 0.0};
  if (std::abs(b(r, c)) > 1e-14) {
    const Complex ratio = a(r, c) / b(r, c);
    if (std::abs(ratio) > 1e-14) phase = ratio / std::abs(ratio);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace mqs
