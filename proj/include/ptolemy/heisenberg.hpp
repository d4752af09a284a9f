#pragma once

// The generalized Heisenberg group structure on the finite boundary
// (associative fields) and the 15-dimensional octonionic variety, each with
// its gauge and metric.  Distances to the point at infinity are IEEE +inf;
// d(inf, inf) = 0.

#include "ptolemy/hermitian.hpp"

namespace ptolemy {

// (zeta, v) * (zeta', v') = (zeta + zeta', v + v' + 2 Im sum conj(zeta'_i) zeta_i).
// Both operands must be finite; the law preserves Im-purity of v exactly.
[[nodiscard]] BoundaryPoint group_mul(const BoundaryPoint& p, const BoundaryPoint& q);
[[nodiscard]] BoundaryPoint group_inv(const BoundaryPoint& p);

// |(zeta, v)| = |-|zeta|^2 + v|^{1/2}.
[[nodiscard]] double gauge(const BoundaryPoint& p);

// d(p, q) = gauge(inv(p) * q).  For K = R this is the Euclidean distance on
// the zeta coordinates.
[[nodiscard]] double dist(const BoundaryPoint& p, const BoundaryPoint& q);

// The same metric through lifts: |<lift p, lift q>|^{1/2}.  Agrees with dist
// within 1e-10 relative on finite pairs; kept as an independent path.
[[nodiscard]] double dist_via_lift(const BoundaryPoint& p, const BoundaryPoint& q);

// Point of the octonionic variety {(x, y) : 2 Re(x) + |y|^2 = 0}, or infinity.
struct OctPoint {
  bool infinite{false};
  Scalar x{Scalar::zero(Field::O)};
  Scalar y{Scalar::zero(Field::O)};
};

[[nodiscard]] double oct_variety_residual(const Scalar& x, const Scalar& y);

// Re(x) is recomputed as -|y|^2/2 whenever the variety residual exceeds 1e-12.
[[nodiscard]] OctPoint make_oct_point(Scalar x, Scalar y);
[[nodiscard]] OctPoint oct_origin();
[[nodiscard]] OctPoint oct_infinity();

// (t, s) * (x, y) = (t + x - conj(s) y, s + y); stays on the variety exactly.
[[nodiscard]] OctPoint oct_group_mul(const OctPoint& p, const OctPoint& q);
// (conj(x), -y); a two-sided inverse.
[[nodiscard]] OctPoint oct_inv(const OctPoint& p);

// |x|^{1/2}; equals oct_dist(p, origin).
[[nodiscard]] double oct_gauge(const OctPoint& p);

// d((x,y),(w,z)) = |x + conj(w) + conj(z) y|^{1/2}; symmetric because the two
// argument orders give conjugate octonions.
[[nodiscard]] double oct_dist(const OctPoint& p, const OctPoint& q);

}  // namespace ptolemy
