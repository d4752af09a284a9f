#include "ptolemy/hermitian.hpp"

#include <cmath>
#include <numbers>

namespace ptolemy {

namespace {

void check_pair(const Vec& z, const Vec& w) {
  if (z.field != w.field) throw std::invalid_argument("vector field mismatch");
  if (z.e.size() != w.e.size()) throw std::invalid_argument("vector size mismatch");
}

}  // namespace

Scalar herm_form(const Vec& z, const Vec& w) {
  check_pair(z, w);
  if (!associative(z.field)) throw std::domain_error("Hermitian form requires an associative field");
  const std::size_t sz = z.e.size();
  if (sz < 2) throw std::invalid_argument("Hermitian form needs vectors of size >= 2");
  Scalar acc = conj(w.e[sz - 1]) * z.e[0];
  for (std::size_t i = 1; i + 1 < sz; ++i) acc = acc + conj(w.e[i]) * z.e[i];
  return acc + conj(w.e[0]) * z.e[sz - 1];
}

Scalar hermitian_dot(const Vec& a, const Vec& b) {
  check_pair(a, b);
  Scalar acc = Scalar::zero(a.field);
  for (std::size_t i = 0; i < a.e.size(); ++i) acc = acc + conj(b.e[i]) * a.e[i];
  return acc;
}

BoundaryPoint make_boundary_point(Field f, int n, std::vector<Scalar> zeta, Scalar v) {
  if (!associative(f)) throw std::invalid_argument("boundary points over O use the octonionic variety type");
  if (n < 1) throw std::invalid_argument("boundary point needs n >= 1");
  if (n == 1 && f == Field::R) throw std::invalid_argument("n = 1 requires K != R");
  if (static_cast<int>(zeta.size()) != n - 1) throw std::invalid_argument("zeta must have n - 1 entries");
  for (const Scalar& s : zeta) {
    if (s.field != f) throw std::invalid_argument("zeta entry field mismatch");
  }
  if (v.field != f) throw std::invalid_argument("v field mismatch");
  if (std::abs(re(v)) > 1e-9) throw std::invalid_argument("v must be purely imaginary");
  v.c[0] = 0.0;
  if (f == Field::R && modulus_sq(v) != 0.0) throw std::invalid_argument("v must vanish for K = R");
  BoundaryPoint p;
  p.field = f;
  p.n = n;
  p.infinite = false;
  p.zeta = std::move(zeta);
  p.v = v;
  return p;
}

BoundaryPoint boundary_origin(Field f, int n) {
  return make_boundary_point(f, n, std::vector<Scalar>(static_cast<std::size_t>(n - 1), Scalar::zero(f)),
                             Scalar::zero(f));
}

BoundaryPoint boundary_infinity(Field f, int n) {
  if (!associative(f)) throw std::invalid_argument("boundary points over O use the octonionic variety type");
  BoundaryPoint p;
  p.field = f;
  p.n = n;
  p.infinite = true;
  p.v = Scalar::zero(f);
  return p;
}

Vec lift(const BoundaryPoint& p) {
  Vec out;
  out.field = p.field;
  out.e.assign(static_cast<std::size_t>(p.n) + 1, Scalar::zero(p.field));
  if (p.infinite) {
    out.e[0] = Scalar::one(p.field);
    return out;
  }
  double nsq = 0.0;
  for (const Scalar& s : p.zeta) nsq += modulus_sq(s);
  out.e[0] = Scalar::real(p.field, -nsq) + p.v;
  for (std::size_t i = 0; i < p.zeta.size(); ++i) out.e[i + 1] = std::numbers::sqrt2 * p.zeta[i];
  out.e[static_cast<std::size_t>(p.n)] = Scalar::one(p.field);
  return out;
}

InteriorPoint make_interior_point(Field f, int n, std::vector<Scalar> z) {
  if (!associative(f)) throw std::invalid_argument("interior points are defined for associative fields");
  if (n < 1) throw std::invalid_argument("interior point needs n >= 1");
  if (static_cast<int>(z.size()) != n) throw std::invalid_argument("interior point needs n coordinates");
  double siegel = 2.0 * re(z[0]);
  for (std::size_t i = 1; i < z.size(); ++i) siegel += modulus_sq(z[i]);
  if (!(siegel < 0.0)) throw std::invalid_argument("point is not interior: 2 Re(z1) + sum |z_i|^2 >= 0");
  for (const Scalar& s : z) {
    if (s.field != f) throw std::invalid_argument("coordinate field mismatch");
  }
  InteriorPoint p;
  p.field = f;
  p.n = n;
  p.z = std::move(z);
  return p;
}

Vec lift(const InteriorPoint& p) {
  Vec out;
  out.field = p.field;
  out.e = p.z;
  out.e.push_back(Scalar::one(p.field));
  return out;
}

double hyperbolic_distance(const InteriorPoint& a, const InteriorPoint& b) {
  if (a.field != b.field || a.n != b.n) throw std::invalid_argument("interior point mismatch");
  const Vec za = lift(a);
  const Vec zb = lift(b);
  const double num = modulus_sq(herm_form(za, zb));
  const double den = re(herm_form(za, za)) * re(herm_form(zb, zb));
  double ratio = num / den;
  if (ratio < 1.0) {
    if (ratio < 1.0 - 1e-12) throw std::domain_error("cosh^2 ratio below 1 beyond tolerance");
    ratio = 1.0;
  }
  return 2.0 * std::acosh(std::sqrt(ratio));
}

}  // namespace ptolemy
