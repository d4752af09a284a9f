#include "ptolemy/ptolemy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ptolemy {

std::string_view separation_name(Separation s) {
  switch (s) {
    case Separation::pair_12_34:
      return "pair_12_34";
    case Separation::pair_13_24:
      return "pair_13_24";
    default:
      return "pair_14_23";
  }
}

Separation separation(double t1, double t2, double t3, double t4) {
  const std::array<double, 4> t{t1, t2, t3, t4};
  std::array<double, 4> theta{};
  for (int i = 0; i < 4; ++i) {
    const double x = t[static_cast<std::size_t>(i)];
    if (std::isnan(x)) throw std::invalid_argument("circle parameter is NaN");
    theta[static_cast<std::size_t>(i)] = std::isinf(x) ? std::numbers::pi / 2.0 : std::atan(x);
  }
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return theta[static_cast<std::size_t>(a)] < theta[static_cast<std::size_t>(b)]; });
  for (int i = 0; i < 3; ++i)
    if (theta[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] ==
        theta[static_cast<std::size_t>(order[static_cast<std::size_t>(i + 1)])])
      throw std::invalid_argument("circle parameters must be distinct");
  // Cyclic neighbours alternate between the two pairs, so the partner of t1
  // sits two places away in sorted order.
  int pos = 0;
  while (order[static_cast<std::size_t>(pos)] != 0) ++pos;
  switch (order[static_cast<std::size_t>((pos + 2) % 4)]) {
    case 1:
      return Separation::pair_12_34;
    case 2:
      return Separation::pair_13_24;
    default:
      return Separation::pair_14_23;
  }
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::strict:
      return "strict";
    case Verdict::equality_case_1:
      return "equality_case_1";
    case Verdict::equality_case_2:
      return "equality_case_2";
    case Verdict::equality_case_3:
      return "equality_case_3";
    default:
      return "violation";
  }
}

Verdict equality_case_for(Separation s) {
  switch (s) {
    case Separation::pair_14_23:
      return Verdict::equality_case_1;
    case Separation::pair_13_24:
      return Verdict::equality_case_2;
    default:
      return Verdict::equality_case_3;
  }
}

std::array<double, 3> normalized_ptolemy_residuals(const RootCrossPair& r) {
  return {r.rX1 + r.rX2 - 1.0, r.rX2 - r.rX1 + 1.0, r.rX1 - r.rX2 + 1.0};
}

namespace {

template <typename Point, typename DistFn>
PtolemyReport check_impl(const std::array<Point, 4>& p, const RootCrossPair& r, DistFn dist_fn, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
  bool has_inf = false;
  for (const auto& pt : p) has_inf = has_inf || pt.infinite;
  PtolemyReport out;
  const std::array<double, 3> nr = normalized_ptolemy_residuals(r);
  if (has_inf) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    out.products = {inf, inf, inf};
    out.residuals = nr;
  } else {
    const double d12 = dist_fn(p[0], p[1]);
    const double d13 = dist_fn(p[0], p[2]);
    const double d14 = dist_fn(p[0], p[3]);
    const double d23 = dist_fn(p[1], p[2]);
    const double d24 = dist_fn(p[1], p[3]);
    const double d34 = dist_fn(p[2], p[3]);
    out.products = {d13 * d24, d12 * d34, d23 * d14};
    out.residuals = {out.products[0] + out.products[1] - out.products[2],
                     out.products[1] + out.products[2] - out.products[0],
                     out.products[0] + out.products[2] - out.products[1]};
  }
  const double worst = *std::min_element(nr.begin(), nr.end());
  if (worst < -tol) {
    out.verdict = Verdict::violation;
    return out;
  }
  int closest = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(nr[static_cast<std::size_t>(k)]) < std::abs(nr[static_cast<std::size_t>(closest)])) closest = k;
  if (std::abs(nr[static_cast<std::size_t>(closest)]) <= tol)
    out.verdict = static_cast<Verdict>(static_cast<int>(Verdict::equality_case_1) + closest);
  else
    out.verdict = Verdict::strict;
  return out;
}

}  // namespace

PtolemyReport ptolemy_check(const Quadruple& q, double tol) {
  return check_impl(q.p, root_cross_pair(q), [](const BoundaryPoint& a, const BoundaryPoint& b) { return dist(a, b); },
                    tol);
}

PtolemyReport ptolemy_check(const OctQuadruple& q, double tol) {
  return check_impl(q.p, root_cross_pair(q), [](const OctPoint& a, const OctPoint& b) { return oct_dist(a, b); }, tol);
}

RCircle standard_rcircle(Field f, int n) {
  const int eff_n = (f == Field::O) ? 2 : n;
  if (f != Field::O && eff_n < 2) throw std::invalid_argument("standard R-circle needs n >= 2");
  return RCircle{Motion{f, eff_n, {}}};
}

BoundaryPoint rcircle_point(const RCircle& c, double t) {
  const Motion& m = c.motion;
  if (!associative(m.field)) throw std::invalid_argument("use oct_rcircle_point for octonionic circles");
  if (m.n < 2) throw std::invalid_argument("standard R-circle needs n >= 2");
  if (std::isnan(t)) throw std::invalid_argument("circle parameter is NaN");
  if (std::isinf(t)) return apply(m, boundary_infinity(m.field, m.n));
  BoundaryPoint p = boundary_origin(m.field, m.n);
  p.zeta[0] = Scalar::real(m.field, t);
  return apply(m, p);
}

OctPoint oct_rcircle_point(const RCircle& c, double t) {
  const Motion& m = c.motion;
  if (m.field != Field::O) throw std::invalid_argument("oct_rcircle_point needs an octonionic circle");
  if (std::isnan(t)) throw std::invalid_argument("circle parameter is NaN");
  if (std::isinf(t)) return apply(m, oct_infinity());
  return apply(m, make_oct_point(Scalar::real(Field::O, -t * t), Scalar::real(Field::O, std::numbers::sqrt2 * t)));
}

}  // namespace ptolemy
