#include "ptolemy/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace ptolemy {

Scalar random_scalar(Field f, Rng& rng, double lo, double hi) {
  Scalar s = Scalar::zero(f);
  for (std::uint8_t slot : slots(f)) s.c[slot] = rng.uniform(lo, hi);
  return s;
}

Scalar random_imaginary(Field f, Rng& rng, double lo, double hi) {
  Scalar s = Scalar::zero(f);
  for (std::uint8_t slot : slots(f))
    if (slot != 0) s.c[slot] = rng.uniform(lo, hi);
  return s;
}

Scalar random_unit(Field f, Rng& rng) {
  for (;;) {
    const Scalar s = random_scalar(f, rng);
    const double m = modulus(s);
    if (m >= 0.1) return (1.0 / m) * s;
  }
}

Scalar random_unit_imaginary(Field f, Rng& rng) {
  if (f == Field::R) throw std::invalid_argument("R has no unit imaginaries");
  for (;;) {
    const Scalar s = random_imaginary(f, rng);
    const double m = modulus(s);
    if (m >= 0.1) return (1.0 / m) * s;
  }
}

BoundaryPoint random_boundary_point(Field f, int n, Rng& rng) {
  std::vector<Scalar> zeta(static_cast<std::size_t>(n - 1), Scalar::zero(f));
  for (Scalar& s : zeta) s = random_scalar(f, rng);
  return make_boundary_point(f, n, std::move(zeta), random_imaginary(f, rng));
}

OctPoint random_oct_point(Rng& rng) {
  const Scalar y = random_scalar(Field::O, rng);
  Scalar x = random_imaginary(Field::O, rng);
  x.c[0] = -0.5 * modulus_sq(y);
  return make_oct_point(x, y);
}

Quadruple random_quadruple(Field f, int n, Rng& rng, double min_sep, double inf_prob) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::array<BoundaryPoint, 4> p;
    for (auto& pt : p) pt = random_boundary_point(f, n, rng);
    if (rng.uniform() < inf_prob) p[rng.below(4)] = boundary_infinity(f, n);
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = i + 1; j < 4 && ok; ++j)
        if (dist(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) < min_sep) ok = false;
    if (ok) return make_quadruple(p[0], p[1], p[2], p[3]);
  }
  throw std::runtime_error("could not sample a separated quadruple");
}

OctQuadruple random_oct_quadruple(Rng& rng, double min_sep, double inf_prob) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::array<OctPoint, 4> p;
    for (auto& pt : p) pt = random_oct_point(rng);
    if (rng.uniform() < inf_prob) p[rng.below(4)] = oct_infinity();
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = i + 1; j < 4 && ok; ++j)
        if (oct_dist(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) < min_sep) ok = false;
    if (ok) return make_oct_quadruple(p[0], p[1], p[2], p[3]);
  }
  throw std::runtime_error("could not sample a separated quadruple");
}

std::array<double, 4> random_rcircle_params(Rng& rng, double min_gap) {
  for (;;) {
    std::array<double, 4> t;
    for (double& x : t) x = rng.uniform(-3.0, 3.0);
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = i + 1; j < 4 && ok; ++j)
        if (std::abs(t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(j)]) < min_gap) ok = false;
    if (ok) return t;
  }
}

}  // namespace ptolemy
