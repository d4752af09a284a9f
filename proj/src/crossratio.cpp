#include "ptolemy/crossratio.hpp"

#include <cmath>

namespace ptolemy {

Scalar cross_ratio_from_lifts(const std::array<Vec, 4>& z) {
  const Scalar h42 = herm_form(z[3], z[1]);
  const Scalar h41 = herm_form(z[3], z[0]);
  const Scalar h31 = herm_form(z[2], z[0]);
  const Scalar h32 = herm_form(z[2], z[1]);
  return ((h42 * inverse(h41)) * h31) * inverse(h32);
}

namespace {

std::array<Vec, 4> lifts_of(const Quadruple& q) {
  return {lift(q.p[0]), lift(q.p[1]), lift(q.p[2]), lift(q.p[3])};
}

// Order entries are the 1-based positions used in the bracket notation.
Scalar cross_of(const std::array<Vec, 4>& z, const std::array<int, 4>& order) {
  return cross_ratio_from_lifts({z[static_cast<std::size_t>(order[0] - 1)], z[static_cast<std::size_t>(order[1] - 1)],
                                 z[static_cast<std::size_t>(order[2] - 1)], z[static_cast<std::size_t>(order[3] - 1)]});
}

// Root cross pair from pairwise distances, with the infinite factors cancelled
// symbolically: each d(p_k, .) appears once in the numerator and once in the
// denominator of both ratios, so an infinite point simply drops out.
RootCrossPair root_pair_from_dists(const std::array<std::array<double, 4>, 4>& d, int inf_idx) {
  switch (inf_idx) {
    case 0:
      return {d[1][3] / d[1][2], d[2][3] / d[1][2]};
    case 1:
      return {d[0][2] / d[0][3], d[2][3] / d[0][3]};
    case 2:
      return {d[1][3] / d[0][3], d[0][1] / d[0][3]};
    case 3:
      return {d[0][2] / d[1][2], d[0][1] / d[1][2]};
    default:
      return {(d[1][3] * d[0][2]) / (d[0][3] * d[1][2]), (d[2][3] * d[0][1]) / (d[0][3] * d[1][2])};
  }
}

template <typename Point, typename DistFn>
RootCrossPair root_pair_impl(const std::array<Point, 4>& p, DistFn dist_fn) {
  int inf_idx = -1;
  for (int i = 0; i < 4; ++i)
    if (p[static_cast<std::size_t>(i)].infinite) inf_idx = i;
  std::array<std::array<double, 4>, 4> d{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (i == inf_idx || j == inf_idx) continue;
      const double v = dist_fn(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  return root_pair_from_dists(d, inf_idx);
}

}  // namespace

Quadruple make_quadruple(BoundaryPoint p1, BoundaryPoint p2, BoundaryPoint p3, BoundaryPoint p4) {
  Quadruple q{{std::move(p1), std::move(p2), std::move(p3), std::move(p4)}};
  const Field f = q.p[0].field;
  const int n = q.p[0].n;
  for (const auto& pt : q.p)
    if (pt.field != f || pt.n != n) throw std::invalid_argument("quadruple points disagree on field or n");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (dist(q.p[static_cast<std::size_t>(i)], q.p[static_cast<std::size_t>(j)]) <= 1e-10)
        throw std::invalid_argument("quadruple points must be pairwise distinct");
  return q;
}

OctQuadruple make_oct_quadruple(OctPoint p1, OctPoint p2, OctPoint p3, OctPoint p4) {
  OctQuadruple q{{std::move(p1), std::move(p2), std::move(p3), std::move(p4)}};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (oct_dist(q.p[static_cast<std::size_t>(i)], q.p[static_cast<std::size_t>(j)]) <= 1e-10)
        throw std::invalid_argument("quadruple points must be pairwise distinct");
  return q;
}

Scalar cross_ratio(const Quadruple& q, const std::array<int, 4>& order) {
  int seen = 0;
  for (int i : order) {
    if (i < 1 || i > 4) throw std::invalid_argument("order entries must lie in 1..4");
    if (seen & (1 << i)) throw std::invalid_argument("order entries must be distinct");
    seen |= 1 << i;
  }
  return cross_of(lifts_of(q), order);
}

Scalar cross_ratio(const Quadruple& q) { return cross_ratio(q, {1, 2, 3, 4}); }

CrossRatioTriple triple(const Quadruple& q) {
  const auto z = lifts_of(q);
  return {cross_of(z, {1, 2, 3, 4}), cross_of(z, {1, 3, 2, 4}), cross_of(z, {2, 3, 1, 4})};
}

std::array<double, 12> symmetry_residuals(const Quadruple& q) {
  const auto z = lifts_of(q);
  const Scalar x1 = cross_of(z, {1, 2, 3, 4});
  const Scalar x2 = cross_of(z, {1, 3, 2, 4});
  const Scalar x3 = cross_of(z, {2, 3, 1, 4});
  const double m1 = modulus(x1);
  std::array<double, 12> r{};
  r[0] = m1 - modulus(cross_of(z, {2, 1, 4, 3}));
  r[1] = m1 - modulus(cross_of(z, {3, 4, 1, 2}));
  r[2] = m1 - modulus(cross_of(z, {4, 3, 2, 1}));
  r[3] = re(x1) - re(cross_of(z, {2, 1, 4, 3}));
  r[4] = re(x1) - re(cross_of(z, {3, 4, 1, 2}));
  r[5] = re(x1) - re(cross_of(z, {4, 3, 2, 1}));
  r[6] = max_abs_diff(cross_of(z, {1, 2, 4, 3}), inverse(x1));
  r[7] = max_abs_diff(cross_of(z, {1, 3, 4, 2}), inverse(x2));
  const Scalar c1432 = cross_of(z, {1, 4, 3, 2});
  r[8] = modulus(c1432) - 1.0 / modulus(x3);
  r[9] = re(c1432) - re(inverse(x3));
  const Scalar c1423 = cross_of(z, {1, 4, 2, 3});
  r[10] = modulus(c1423) - modulus(x3);
  r[11] = re(c1423) - re(x3);
  return r;
}

FundamentalResiduals fundamental_residuals(const CrossRatioTriple& t) {
  const double a1 = modulus(t.X1);
  const double a2 = modulus(t.X2);
  const double a3 = modulus(t.X3);
  FundamentalResiduals out;
  out.r1 = a2 - a1 * a3;
  out.r2 = 2.0 * a1 * a1 * re(t.X3) - (a1 * a1 + a2 * a2 - 2.0 * re(t.X1) - 2.0 * re(t.X2) + 1.0);
  return out;
}

FundamentalResiduals fundamental_residuals(const Quadruple& q) { return fundamental_residuals(triple(q)); }

RootCrossPair root_cross_pair(const Quadruple& q) {
  return root_pair_impl(q.p, [](const BoundaryPoint& a, const BoundaryPoint& b) { return dist(a, b); });
}

RootCrossPair root_cross_pair(const OctQuadruple& q) {
  return root_pair_impl(q.p, [](const OctPoint& a, const OctPoint& b) { return oct_dist(a, b); });
}

OctCrossPair oct_cross_pair(const OctQuadruple& q) {
  const RootCrossPair r = root_cross_pair(q);
  return {r.rX1 * r.rX1, r.rX2 * r.rX2};
}

double oct_inequality_residual(const OctCrossPair& x) {
  return -(x.X1 * x.X1 + x.X2 * x.X2 - 2.0 * x.X1 * x.X2 - 2.0 * x.X1 - 2.0 * x.X2 + 1.0);
}

}  // namespace ptolemy
