#pragma once

// Vectors in K^{n,1}, the signature-(n,1) Hermitian form, standard lifts of
// boundary and interior points of the Siegel domain model, and the interior
// hyperbolic distance.  Associative fields only; the octonionic boundary
// lives in heisenberg.hpp.

#include <vector>

#include "ptolemy/algebra.hpp"

namespace ptolemy {

struct Vec {
  Field field{Field::R};
  std::vector<Scalar> e;
};

// <z,w> = conj(w_last) z_first + sum over middle entries of conj(w_i) z_i
//         + conj(w_first) z_last.
// Requires an associative field and matching sizes >= 2.
[[nodiscard]] Scalar herm_form(const Vec& z, const Vec& w);

// Componentwise Hermitian dot with conjugation on the second argument:
// <<a,b>> = sum conj(b_i) a_i.  This is the convention whose imaginary part
// is the symplectic term of the group law.
[[nodiscard]] Scalar hermitian_dot(const Vec& a, const Vec& b);

// A point of the boundary: either the point at infinity or a pair (zeta, v)
// with zeta in K^{n-1} and v purely imaginary (identically zero when K = R).
struct BoundaryPoint {
  Field field{Field::R};
  int n{2};
  bool infinite{false};
  std::vector<Scalar> zeta;
  Scalar v{Scalar::zero(Field::R)};
};

// Validates: associative field; n >= 2, or n == 1 with empty zeta and K != R;
// |Re(v)| <= 1e-9 (then stored as exactly zero); for K = R, v == 0.
[[nodiscard]] BoundaryPoint make_boundary_point(Field f, int n, std::vector<Scalar> zeta, Scalar v);
[[nodiscard]] BoundaryPoint boundary_origin(Field f, int n);
[[nodiscard]] BoundaryPoint boundary_infinity(Field f, int n);

// Standard lift: (zeta, v) -> (-|zeta|^2 + v, sqrt2 zeta_1, ..., sqrt2 zeta_{n-1}, 1);
// infinity -> (1, 0, ..., 0).  Lifts of boundary points are null vectors.
[[nodiscard]] Vec lift(const BoundaryPoint& p);

// Interior point of the Siegel domain: 2 Re(z_1) + sum_{i>=2} |z_i|^2 < 0.
struct InteriorPoint {
  Field field{Field::R};
  int n{1};
  std::vector<Scalar> z;
};

[[nodiscard]] InteriorPoint make_interior_point(Field f, int n, std::vector<Scalar> z);
[[nodiscard]] Vec lift(const InteriorPoint& p);

// cosh^2(rho/2) = <z,w><w,z> / (<z,z><w,w>) on lifts; the ratio is clamped to
// 1 when it falls within 1e-12 below (rounding), and rejected further below.
[[nodiscard]] double hyperbolic_distance(const InteriorPoint& a, const InteriorPoint& b);

}  // namespace ptolemy
