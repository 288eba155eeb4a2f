#pragma once

#include <vector>

#include "symcorr/types.hpp"

namespace symcorr {

/// R(theta, phi) = cos(theta) 1 + i sin(theta) (cos(phi) sigma_y + sin(phi) sigma_x)
///               = [[cos t, sin t e^{i phi}], [-sin t e^{-i phi}, cos t]].
/// The rotated computational basis R|k> defines a local projective
/// measurement; theta and theta + pi/2 give the same set of projectors.
Mat2 rotation_matrix(double theta, double phi);

/// Per-qubit rotation angles.
struct RotationAngles {
  std::vector<double> theta;
  std::vector<double> phi;

  static RotationAngles uniform(int n, double theta, double phi);
  int size() const { return static_cast<int>(theta.size()); }
};

/// How the two halves of a computation are chosen in symmetric or general
/// (brute-force) discord evaluations.
enum class DiscordMode { symmetric, general };

}  // namespace symcorr
