#include "ptolemy/heisenberg.hpp"

#include <cmath>
#include <limits>

namespace ptolemy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_group_pair(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.field != q.field || p.n != q.n) throw std::invalid_argument("boundary point mismatch");
  if (p.infinite || q.infinite) throw std::domain_error("group law is defined on finite points only");
}

// -|zeta|^2 + v as a scalar.
Scalar vertex(const BoundaryPoint& p) {
  double nsq = 0.0;
  for (const Scalar& s : p.zeta) nsq += modulus_sq(s);
  Scalar w = p.v;
  w.c[0] = -nsq;
  return w;
}

}  // namespace

BoundaryPoint group_mul(const BoundaryPoint& p, const BoundaryPoint& q) {
  check_group_pair(p, q);
  BoundaryPoint out = p;
  Scalar twist = Scalar::zero(p.field);
  for (std::size_t i = 0; i < p.zeta.size(); ++i) {
    out.zeta[i] = p.zeta[i] + q.zeta[i];
    twist = twist + conj(q.zeta[i]) * p.zeta[i];
  }
  out.v = p.v + q.v + 2.0 * imag(twist);
  return out;
}

BoundaryPoint group_inv(const BoundaryPoint& p) {
  if (p.infinite) throw std::domain_error("group law is defined on finite points only");
  BoundaryPoint out = p;
  for (Scalar& s : out.zeta) s = -s;
  out.v = -p.v;
  return out;
}

double gauge(const BoundaryPoint& p) {
  if (p.infinite) throw std::domain_error("gauge of the point at infinity");
  return std::sqrt(modulus(vertex(p)));
}

double dist(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.field != q.field || p.n != q.n) throw std::invalid_argument("boundary point mismatch");
  if (p.infinite && q.infinite) return 0.0;
  if (p.infinite || q.infinite) return kInf;
  return gauge(group_mul(group_inv(p), q));
}

double dist_via_lift(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.field != q.field || p.n != q.n) throw std::invalid_argument("boundary point mismatch");
  if (p.infinite && q.infinite) return 0.0;
  if (p.infinite || q.infinite) return kInf;
  return std::sqrt(modulus(herm_form(lift(p), lift(q))));
}

double oct_variety_residual(const Scalar& x, const Scalar& y) {
  return std::abs(2.0 * re(x) + modulus_sq(y));
}

OctPoint make_oct_point(Scalar x, Scalar y) {
  if (x.field != Field::O || y.field != Field::O) throw std::invalid_argument("octonionic point needs O scalars");
  if (oct_variety_residual(x, y) > 1e-12) x.c[0] = -0.5 * modulus_sq(y);
  OctPoint p;
  p.infinite = false;
  p.x = x;
  p.y = y;
  return p;
}

OctPoint oct_origin() { return OctPoint{}; }

OctPoint oct_infinity() {
  OctPoint p;
  p.infinite = true;
  return p;
}

OctPoint oct_group_mul(const OctPoint& p, const OctPoint& q) {
  if (p.infinite || q.infinite) throw std::domain_error("group law is defined on finite points only");
  return make_oct_point(p.x + q.x - conj(p.y) * q.y, p.y + q.y);
}

OctPoint oct_inv(const OctPoint& p) {
  if (p.infinite) throw std::domain_error("group law is defined on finite points only");
  return make_oct_point(conj(p.x), -p.y);
}

double oct_gauge(const OctPoint& p) {
  if (p.infinite) throw std::domain_error("gauge of the point at infinity");
  return std::sqrt(modulus(p.x));
}

double oct_dist(const OctPoint& p, const OctPoint& q) {
  if (p.infinite && q.infinite) return 0.0;
  if (p.infinite || q.infinite) return kInf;
  return std::sqrt(modulus(p.x + conj(q.x) + conj(q.y) * p.y));
}

}  // namespace ptolemy
