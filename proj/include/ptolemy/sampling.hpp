#pragma once

// Seeded random inputs for the property checks: scalars, boundary and
// variety points, well-separated quadruples, and R-circle parameter draws.
// Rejection loops consume only the caller's Rng, so every sample is a pure
// function of its stream.

#include <array>

#include "ptolemy/crossratio.hpp"
#include "ptolemy/rng.hpp"

namespace ptolemy {

// Coefficients uniform in [lo, hi] on the field's active slots.
[[nodiscard]] Scalar random_scalar(Field f, Rng& rng, double lo = -1.0, double hi = 1.0);
// Same, with the real slot forced to zero.
[[nodiscard]] Scalar random_imaginary(Field f, Rng& rng, double lo = -1.0, double hi = 1.0);
// Unit modulus (rejecting tiny draws before normalizing).
[[nodiscard]] Scalar random_unit(Field f, Rng& rng);
[[nodiscard]] Scalar random_unit_imaginary(Field f, Rng& rng);

// Finite point with zeta and v coefficients uniform in [-1, 1].
[[nodiscard]] BoundaryPoint random_boundary_point(Field f, int n, Rng& rng);
// Finite variety point: y and Im(x) uniform in [-1, 1], Re(x) = -|y|^2/2.
[[nodiscard]] OctPoint random_oct_point(Rng& rng);

// Distinct quadruple with min pairwise distance >= min_sep; with probability
// inf_prob one slot (uniformly chosen) is the point at infinity.
[[nodiscard]] Quadruple random_quadruple(Field f, int n, Rng& rng, double min_sep = 1e-3,
                                         double inf_prob = 0.1);
[[nodiscard]] OctQuadruple random_oct_quadruple(Rng& rng, double min_sep = 1e-3,
                                                double inf_prob = 0.1);

// Four R-circle parameters, uniform in [-3, 3] with min pairwise gap 0.3.
[[nodiscard]] std::array<double, 4> random_rcircle_params(Rng& rng, double min_gap = 0.3);

}  // namespace ptolemy
