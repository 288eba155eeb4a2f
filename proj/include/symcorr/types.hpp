#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace symcorr {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Row-major 2x2 complex matrix {u00, u01, u10, u11}.
using Mat2 = std::array<cplx, 4>;

/// Dense representation cap: 12 qubits, matrix dimension 4096.
inline constexpr int kMaxQubits = 12;

inline constexpr double kPi = 3.14159265358979323846;

/// Bad input: wrong dimensions, out-of-range parameters, malformed cuts.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value that should be a density matrix is not one (trace, hermiticity,
/// negative eigenvalues beyond numerical noise).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation was refused because it exceeds a size or cost cap.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric-mode routine called on a state without the required symmetry.
class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symcorr
