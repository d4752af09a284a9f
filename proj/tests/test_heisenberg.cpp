#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ptolemy/heisenberg.hpp"
#include "ptolemy/rng.hpp"
#include "ptolemy/sampling.hpp"

using namespace ptolemy;

namespace {

double coord_scale(const BoundaryPoint& p) {
  double s = modulus(p.v);
  for (const Scalar& z : p.zeta) s = std::max(s, modulus(z));
  return std::max(1.0, s);
}

}  // namespace

TEST_CASE("group law: identity, inverses, associativity") {
  Rng rng{59};
  for (const Field f : {Field::R, Field::C, Field::H}) {
    for (const int n : {2, 3, 4}) {
      const BoundaryPoint o = boundary_origin(f, n);
      for (int trial = 0; trial < 200; ++trial) {
        const BoundaryPoint p = random_boundary_point(f, n, rng);
        const BoundaryPoint q = random_boundary_point(f, n, rng);
        const BoundaryPoint r = random_boundary_point(f, n, rng);
        for (const BoundaryPoint& pe : {group_mul(p, o), group_mul(o, p)}) {
          CHECK(max_abs_diff(pe.v, p.v) == 0.0);
          for (int i = 0; i < n - 1; ++i) CHECK(max_abs_diff(pe.zeta[i], p.zeta[i]) == 0.0);
        }
        CHECK(gauge(group_mul(group_inv(p), p)) == 0.0);
        CHECK(gauge(group_mul(p, group_inv(p))) == 0.0);
        const BoundaryPoint ab = group_mul(group_mul(p, q), r);
        const BoundaryPoint ba = group_mul(p, group_mul(q, r));
        double gap = modulus(ab.v - ba.v);
        for (int i = 0; i < n - 1; ++i) gap = std::max(gap, modulus(ab.zeta[i] - ba.zeta[i]));
        CHECK(gap <= 1e-13 * coord_scale(p) * coord_scale(q) * coord_scale(r));
      }
    }
  }
}

TEST_CASE("group law keeps v purely imaginary") {
  Rng rng{61};
  for (const Field f : {Field::C, Field::H}) {
    for (int trial = 0; trial < 200; ++trial) {
      const BoundaryPoint p = random_boundary_point(f, 3, rng);
      const BoundaryPoint q = random_boundary_point(f, 3, rng);
      CHECK(re(group_mul(p, q).v) == 0.0);
      CHECK(re(group_inv(p).v) == 0.0);
    }
  }
}

TEST_CASE("gauge and metric basics") {
  Rng rng{67};
  for (const Field f : {Field::R, Field::C, Field::H}) {
    CHECK(gauge(boundary_origin(f, 3)) == 0.0);
    for (int trial = 0; trial < 300; ++trial) {
      const BoundaryPoint p = random_boundary_point(f, 3, rng);
      const BoundaryPoint q = random_boundary_point(f, 3, rng);
      const BoundaryPoint r = random_boundary_point(f, 3, rng);
      const double dpq = dist(p, q);
      CHECK(std::abs(dpq - dist(q, p)) <= 1e-13 * std::max(1.0, dpq));
      // Triangle inequality with a small slack for rounding.
      CHECK(dpq <= dist(p, r) + dist(r, q) + 1e-10);
      // Left invariance.
      const double moved = dist(group_mul(r, p), group_mul(r, q));
      CHECK(std::abs(moved - dpq) <= 1e-11 * std::max(1.0, dpq) * coord_scale(r));
      // Gauge symmetry under inversion.
      CHECK(std::abs(gauge(group_inv(p)) - gauge(p)) <= 1e-13 * std::max(1.0, gauge(p)));
    }
  }
}

TEST_CASE("self-distance is exactly zero") {
  // Pair-adjacent accumulation in the scalar product makes the twist of
  // inv(p) * p vanish exactly, in every field.
  Rng rng{71};
  for (int trial = 0; trial < 200; ++trial) {
    for (const Field f : {Field::R, Field::C, Field::H}) {
      const BoundaryPoint p = random_boundary_point(f, 3, rng);
      CHECK(dist(p, p) == 0.0);
    }
    const OctPoint w = random_oct_point(rng);
    CHECK(oct_dist(w, w) == 0.0);
  }
}

TEST_CASE("the two distance paths agree") {
  Rng rng{73};
  for (const Field f : {Field::R, Field::C, Field::H}) {
    for (const int n : {2, 3}) {
      for (int trial = 0; trial < 200; ++trial) {
        const BoundaryPoint p = random_boundary_point(f, n, rng);
        const BoundaryPoint q = random_boundary_point(f, n, rng);
        CHECK(std::abs(dist(p, q) - dist_via_lift(p, q)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("R reduces to the Euclidean metric on zeta") {
  Rng rng{79};
  for (int trial = 0; trial < 200; ++trial) {
    const BoundaryPoint p = random_boundary_point(Field::R, 4, rng);
    const BoundaryPoint q = random_boundary_point(Field::R, 4, rng);
    double sq = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = p.zeta[i].c[0] - q.zeta[i].c[0];
      sq += d * d;
    }
    CHECK(dist(p, q) == doctest::Approx(std::sqrt(sq)).epsilon(1e-13));
  }
}

TEST_CASE("distances involving infinity") {
  const Field f = Field::C;
  const BoundaryPoint inf = boundary_infinity(f, 3);
  const BoundaryPoint o = boundary_origin(f, 3);
  CHECK(std::isinf(dist(o, inf)));
  CHECK(std::isinf(dist(inf, o)));
  CHECK(dist(inf, inf) == 0.0);
  CHECK(std::isinf(dist_via_lift(o, inf)));
  CHECK_THROWS_AS((void)group_mul(inf, o), std::domain_error);
  CHECK_THROWS_AS((void)gauge(inf), std::domain_error);
}

TEST_CASE("octonionic variety: construction and renormalization") {
  const Scalar y = Scalar::basis(Field::O, 2) * 2.0;  // |y|^2 = 4
  Scalar x = Scalar::basis(Field::O, 5);
  x.c[0] = -2.0;
  const OctPoint p = make_oct_point(x, y);
  CHECK(p.x.c[0] == -2.0);
  CHECK(oct_variety_residual(p.x, p.y) == 0.0);
  // A real part off the variety is recomputed from y.
  Scalar bad = x;
  bad.c[0] = 1.0;
  const OctPoint fixed = make_oct_point(bad, y);
  CHECK(fixed.x.c[0] == -2.0);
  CHECK(fixed.x.c[5] == x.c[5]);
}

TEST_CASE("octonionic group law and inverse") {
  Rng rng{83};
  for (int trial = 0; trial < 300; ++trial) {
    const OctPoint p = random_oct_point(rng);
    const OctPoint q = random_oct_point(rng);
    const OctPoint r = random_oct_point(rng);
    CHECK(oct_variety_residual(oct_group_mul(p, q).x, oct_group_mul(p, q).y) <= 1e-12);
    for (const OctPoint& pe : {oct_group_mul(p, oct_origin()), oct_group_mul(oct_origin(), p)}) {
      CHECK(max_abs_diff(pe.x, p.x) == 0.0);
      CHECK(max_abs_diff(pe.y, p.y) == 0.0);
    }
    CHECK(oct_gauge(oct_group_mul(oct_inv(p), p)) == 0.0);
    CHECK(oct_gauge(oct_group_mul(p, oct_inv(p))) == 0.0);
    const OctPoint ab = oct_group_mul(oct_group_mul(p, q), r);
    const OctPoint ba = oct_group_mul(p, oct_group_mul(q, r));
    CHECK(max_abs_diff(ab.x, ba.x) <= 1e-12);
    CHECK(max_abs_diff(ab.y, ba.y) <= 1e-12);
    // Metric properties.
    const double d = oct_dist(p, q);
    CHECK(std::abs(d - oct_dist(q, p)) <= 1e-13 * std::max(1.0, d));
    CHECK(d <= oct_dist(p, r) + oct_dist(r, q) + 1e-10);
    CHECK(oct_dist(p, p) * oct_dist(p, p) <= 1e-14);
  }
}

TEST_CASE("octonionic products frozen by hand") {
  // p = (-1/2, e1), q = (-1/2, e2).  The law gives the x-part
  // t + x - conj(s) y = -1/2 - 1/2 - (-e1)(e2) = -1 + e4.
  const OctPoint p = make_oct_point(Scalar::real(Field::O, -0.5), Scalar::basis(Field::O, 1));
  const OctPoint q = make_oct_point(Scalar::real(Field::O, -0.5), Scalar::basis(Field::O, 2));
  const OctPoint pq = oct_group_mul(p, q);
  Scalar ex = Scalar::real(Field::O, -1.0);
  ex.c[4] = 1.0;
  CHECK(max_abs_diff(pq.x, ex) == 0.0);
  Scalar ey = Scalar::zero(Field::O);
  ey.c[1] = 1.0;
  ey.c[2] = 1.0;
  CHECK(max_abs_diff(pq.y, ey) == 0.0);
  CHECK(oct_variety_residual(pq.x, pq.y) == 0.0);

  // Distance of the two: |x + conj(w) + conj(z) y| with (x,y) = p, (w,z) = q:
  // -1/2 + (-1/2) + conj(e2) e1 = -1 + e4 gives gauge 2^{1/4}.
  CHECK(oct_dist(p, q) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-15));
}

TEST_CASE("octonionic infinity conventions") {
  const OctPoint inf = oct_infinity();
  const OctPoint o = oct_origin();
  CHECK(std::isinf(oct_dist(o, inf)));
  CHECK(std::isinf(oct_dist(inf, o)));
  CHECK(oct_dist(inf, inf) == 0.0);
  CHECK_THROWS_AS((void)oct_group_mul(inf, o), std::domain_error);
  CHECK_THROWS_AS((void)oct_gauge(inf), std::domain_error);
}
