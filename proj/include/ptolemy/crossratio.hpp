#pragma once

// Cross-ratios of boundary quadruples: the K-valued triple (X1, X2, X3) with
// its symmetry, inverse, and fundamental relations for associative fields,
// and the real pair (X1, X2) with its quadratic inequality for the
// octonionic plane.  All K-valued cross-ratios are evaluated on standard
// lifts, left to right.

#include <array>

#include "ptolemy/heisenberg.hpp"

namespace ptolemy {

struct Quadruple {
  std::array<BoundaryPoint, 4> p;
};

struct OctQuadruple {
  std::array<OctPoint, 4> p;
};

// Pairwise distinct (dist > 1e-10, or exactly one of a pair infinite);
// common field and n.
[[nodiscard]] Quadruple make_quadruple(BoundaryPoint p1, BoundaryPoint p2, BoundaryPoint p3,
                                       BoundaryPoint p4);
[[nodiscard]] OctQuadruple make_oct_quadruple(OctPoint p1, OctPoint p2, OctPoint p3, OctPoint p4);

// X(z1, z2, z3, z4) = <z4,z2> <z4,z1>^{-1} <z3,z1> <z3,z2>^{-1}.
[[nodiscard]] Scalar cross_ratio_from_lifts(const std::array<Vec, 4>& z);

// Cross-ratio of (p_{order[0]}, ..., p_{order[3]}) on standard lifts;
// order entries are 1-based.
[[nodiscard]] Scalar cross_ratio(const Quadruple& q, const std::array<int, 4>& order);
[[nodiscard]] Scalar cross_ratio(const Quadruple& q);

struct CrossRatioTriple {
  Scalar X1, X2, X3;  // orders 1234, 1324, 2314
};
[[nodiscard]] CrossRatioTriple triple(const Quadruple& q);

// Left-minus-right residuals of the permutation relations, in order:
//  0..2  |X1| against the 2143, 3412, 4321 orders
//  3..5  Re(X1) against the same orders
//  6     coefficient gap of the 1243 order against X1^{-1}
//  7     coefficient gap of the 1342 order against X2^{-1}
//  8,9   |.| and Re of the 1432 order against X3^{-1}
//  10,11 |.| and Re of the 1423 order against X3
[[nodiscard]] std::array<double, 12> symmetry_residuals(const Quadruple& q);

// r1 = |X2| - |X1| |X3|  (an identity, so r1 ~ 0)
// r2 = 2 |X1|^2 Re(X3) - (|X1|^2 + |X2|^2 - 2 Re(X1) - 2 Re(X2) + 1)  (r2 >= 0;
//      r2 ~ 0 exactly in the known equality cases, e.g. every quadruple at n = 2)
struct FundamentalResiduals {
  double r1, r2;
};
[[nodiscard]] FundamentalResiduals fundamental_residuals(const CrossRatioTriple& t);
[[nodiscard]] FundamentalResiduals fundamental_residuals(const Quadruple& q);

// The octonionic real cross-ratio pair, from squared-distance ratios with the
// infinite factors of a point at infinity cancelled symbolically.
struct OctCrossPair {
  double X1, X2;
};
[[nodiscard]] OctCrossPair oct_cross_pair(const OctQuadruple& q);

// -(X1^2 + X2^2 - 2 X1 X2 - 2 X1 - 2 X2 + 1); nonnegative when the
// inequality holds, zero exactly on a common R-circle.
[[nodiscard]] double oct_inequality_residual(const OctCrossPair& x);

// (|X1|^{1/2}, |X2|^{1/2}) straight from distance ratios.  Valid for any
// quadruple with at most one point at infinity; exact counterpart of the
// Hermitian-product route on standard lifts, better conditioned near
// degenerate configurations.
struct RootCrossPair {
  double rX1, rX2;
};
[[nodiscard]] RootCrossPair root_cross_pair(const Quadruple& q);
[[nodiscard]] RootCrossPair root_cross_pair(const OctQuadruple& q);

}  // namespace ptolemy
