#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

namespace mqs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = std::int64_t;

enum class Axis { X, Y, Z };

/// Default tolerance for exact algebraic identities on max entry difference.
inline constexpr double kEqTol = 1e-10;

/// Hermiticity threshold: max |A - A^+| entry.
inline constexpr double kHermTol = 1e-12;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace mqs
