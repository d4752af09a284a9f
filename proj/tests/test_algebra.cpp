#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ptolemy/algebra.hpp"
#include "ptolemy/rng.hpp"
#include "ptolemy/sampling.hpp"

using namespace ptolemy;

namespace {

// Frozen expansion of the seven-triple table, derived once by hand.
// Signed code: e_i e_j = sgn(code) e_{|code|-1}.
constexpr int kOctTable[8][8] = {
    {+1, +2, +3, +4, +5, +6, +7, +8}, {+2, -1, +5, +8, -3, +7, -6, -4}, {+3, -5, -1, +6, +2, -4, +8, -7},
    {+4, -8, -6, -1, +7, +3, -5, +2}, {+5, +3, -2, -7, -1, +8, +4, -6}, {+6, -7, +4, -3, -8, -1, +2, +5},
    {+7, +6, -8, +5, -4, -2, -1, +3}, {+8, +4, +7, -2, +6, -5, -3, -1},
};

Scalar e(int i) { return Scalar::basis(Field::O, i); }

Scalar coded(int code) {
  Scalar s = Scalar::zero(Field::O);
  s.c[static_cast<std::size_t>(std::abs(code) - 1)] = code > 0 ? 1.0 : -1.0;
  return s;
}

}  // namespace

TEST_CASE("all 64 octonion basis products match the frozen table") {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(max_abs_diff(e(i) * e(j), coded(kOctTable[i][j])) == 0.0);
    }
}

TEST_CASE("table is antisymmetric off the diagonal and real row/column") {
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      CHECK(kOctTable[i][j] == -kOctTable[j][i]);
    }
  for (int i = 1; i < 8; ++i) CHECK(kOctTable[i][i] == -1);
}

TEST_CASE("quaternion slots close under multiplication") {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Scalar p = Scalar::basis(Field::H, i) * Scalar::basis(Field::H, j);
      CHECK(p.field == Field::H);
      CHECK(p.c[3] == 0.0);
      CHECK(p.c[5] == 0.0);
      CHECK(p.c[6] == 0.0);
      CHECK(p.c[7] == 0.0);
    }
  // i j = k in the packed order {1, e1, e2, e4}.
  const Scalar i = Scalar::basis(Field::H, 1);
  const Scalar j = Scalar::basis(Field::H, 2);
  const Scalar k = Scalar::basis(Field::H, 3);
  CHECK(max_abs_diff(i * j, k) == 0.0);
  CHECK(max_abs_diff(j * i, -k) == 0.0);
  CHECK(max_abs_diff(j * k, i) == 0.0);
  CHECK(max_abs_diff(k * i, j) == 0.0);
  CHECK(re(i * i) == -1.0);
  CHECK(re(j * j) == -1.0);
  CHECK(re(k * k) == -1.0);
}

TEST_CASE("complex unit squares to -1") {
  const Scalar i = Scalar::basis(Field::C, 1);
  CHECK(max_abs_diff(i * i, -Scalar::one(Field::C)) == 0.0);
}

TEST_CASE("subfield inclusions are the identity on coefficients") {
  Rng rng{7};
  for (const Field small : {Field::R, Field::C, Field::H}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Scalar a = random_scalar(small, rng);
      const Scalar b = random_scalar(small, rng);
      Scalar ao = Scalar::zero(Field::O), bo = Scalar::zero(Field::O);
      ao.c = a.c;
      bo.c = b.c;
      CHECK(max_abs_diff(ao * bo, Scalar{Field::O, (a * b).c}) == 0.0);
      CHECK((conj(ao)).c == conj(a).c);
      CHECK(modulus_sq(ao) == modulus_sq(a));
    }
  }
}

TEST_CASE("multiplicativity of the modulus") {
  Rng rng{11};
  for (const Field f : {Field::R, Field::C, Field::H, Field::O}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Scalar a = random_scalar(f, rng, -2.0, 2.0);
      const Scalar b = random_scalar(f, rng, -2.0, 2.0);
      const double lhs = modulus(a * b);
      const double rhs = modulus(a) * modulus(b);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("conjugation is an anti-homomorphism and recovers re and modulus") {
  Rng rng{13};
  for (const Field f : {Field::R, Field::C, Field::H, Field::O}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Scalar a = random_scalar(f, rng, -2.0, 2.0);
      const Scalar b = random_scalar(f, rng, -2.0, 2.0);
      CHECK(max_abs_diff(conj(a * b), conj(b) * conj(a)) <= 1e-12 * std::max(1.0, modulus(a) * modulus(b)));
      CHECK(max_abs_diff(conj(conj(a)), a) == 0.0);
      CHECK(max_abs_diff(a + conj(a), Scalar::real(f, 2.0 * re(a))) == 0.0);
      const Scalar n = a * conj(a);
      CHECK(std::abs(re(n) - modulus_sq(a)) <= 1e-13 * std::max(1.0, modulus_sq(a)));
      CHECK(modulus(imag(n)) <= 1e-13 * std::max(1.0, modulus_sq(a)));
    }
  }
}

TEST_CASE("distributivity and scalar action") {
  Rng rng{17};
  for (const Field f : {Field::C, Field::H, Field::O}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Scalar a = random_scalar(f, rng);
      const Scalar b = random_scalar(f, rng);
      const Scalar c = random_scalar(f, rng);
      CHECK(max_abs_diff(a * (b + c), a * b + a * c) <= 1e-14);
      CHECK(max_abs_diff((b + c) * a, b * a + c * a) <= 1e-14);
      CHECK(max_abs_diff(2.5 * a, a * 2.5) == 0.0);
    }
  }
}

TEST_CASE("associativity holds on R, C, H") {
  Rng rng{19};
  for (const Field f : {Field::R, Field::C, Field::H}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Scalar a = random_scalar(f, rng, -2.0, 2.0);
      const Scalar b = random_scalar(f, rng, -2.0, 2.0);
      const Scalar c = random_scalar(f, rng, -2.0, 2.0);
      CHECK(max_abs_diff((a * b) * c, a * (b * c)) <=
            1e-12 * std::max(1.0, modulus(a) * modulus(b) * modulus(c)));
    }
  }
}

TEST_CASE("octonions are not associative: basis witness") {
  const Scalar lhs = (e(1) * e(2)) * e(3);  // e4 e3 = -e6
  const Scalar rhs = e(1) * (e(2) * e(3));  // e1 e5 = +e6
  CHECK(max_abs_diff(lhs, coded(-7)) == 0.0);
  CHECK(max_abs_diff(rhs, coded(+7)) == 0.0);
  CHECK(max_abs_diff(lhs, rhs) == 2.0);
}

TEST_CASE("moufang-type identities hold in O") {
  Rng rng{23};
  for (int trial = 0; trial < 1000; ++trial) {
    const Scalar x = random_scalar(Field::O, rng, -2.0, 2.0);
    const Scalar y = random_scalar(Field::O, rng, -2.0, 2.0);
    const Scalar z = random_scalar(Field::O, rng, -2.0, 2.0);
    const Scalar mu = random_unit_imaginary(Field::O, rng);
    const Scalar mc = conj(mu);
    const double sxy = std::max(1.0, modulus(x) * modulus(y));
    const double sxyz = std::max(1.0, sxy * modulus(z));
    const double szxyz = std::max(1.0, sxyz * modulus(z));

    // z(xy)z is unambiguous and equals (zx)(yz).
    CHECK(max_abs_diff((z * (x * y)) * z, z * ((x * y) * z)) <= 1e-12 * szxyz);
    CHECK(max_abs_diff((z * (x * y)) * z, (z * x) * (y * z)) <= 1e-12 * szxyz);

    // Re(xyz) is well defined and cyclic.
    const double p = re((x * y) * z);
    CHECK(std::abs(p - re(x * (y * z))) <= 1e-12 * sxyz);
    CHECK(std::abs(p - re((y * z) * x)) <= 1e-12 * sxyz);
    CHECK(std::abs(p - re_triple(x, y, z)) <= 1e-12 * sxyz);

    // Unit-imaginary mu identities.
    CHECK(max_abs_diff(((mu * x) * mc) * (mu * y), mu * (x * y)) <= 1e-12 * sxy);
    CHECK(max_abs_diff((x * mu) * ((mc * y) * mu), (x * y) * mu) <= 1e-12 * sxy);
    CHECK(max_abs_diff(x * y + y * x, (x * mc) * (mu * y) + (y * mc) * (mu * x)) <= 1e-12 * sxy);
  }
}

TEST_CASE("subalgebras generated by two octonions associate") {
  Rng rng{29};
  for (int trial = 0; trial < 300; ++trial) {
    const Scalar x = random_scalar(Field::O, rng, -2.0, 2.0);
    const Scalar y = random_scalar(Field::O, rng, -2.0, 2.0);
    const std::array<Scalar, 4> letters{x, y, conj(x), conj(y)};
    std::array<Scalar, 4> w{};
    double scale = 1.0;
    for (auto& l : w) {
      l = letters[rng.below(4)];
      scale *= modulus(l);
    }
    scale = std::max(1.0, scale);
    const Scalar ref = ((w[0] * w[1]) * w[2]) * w[3];
    CHECK(max_abs_diff(ref, (w[0] * (w[1] * w[2])) * w[3]) <= 1e-12 * scale);
    CHECK(max_abs_diff(ref, (w[0] * w[1]) * (w[2] * w[3])) <= 1e-12 * scale);
    CHECK(max_abs_diff(ref, w[0] * ((w[1] * w[2]) * w[3])) <= 1e-12 * scale);
    CHECK(max_abs_diff(ref, w[0] * (w[1] * (w[2] * w[3]))) <= 1e-12 * scale);
  }
}

TEST_CASE("inverse cancels on both sides") {
  Rng rng{31};
  for (const Field f : {Field::R, Field::C, Field::H, Field::O}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Scalar a = random_unit(f, rng) * 3.0;
      CHECK(max_abs_diff(a * inverse(a), Scalar::one(f)) <= 1e-13);
      CHECK(max_abs_diff(inverse(a) * a, Scalar::one(f)) <= 1e-13);
    }
  }
  CHECK_THROWS_AS((void)inverse(Scalar::zero(Field::H)), std::domain_error);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS((void)Scalar::real(Field::R, std::nan("")), std::invalid_argument);
  const std::array<double, 2> bad{1.0, std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS((void)Scalar::from_coeffs(Field::C, bad), std::invalid_argument);
  const std::array<double, 3> wrong_len{1.0, 2.0, 3.0};
  CHECK_THROWS_AS((void)Scalar::from_coeffs(Field::C, wrong_len), std::invalid_argument);
  CHECK_THROWS_AS((void)Scalar::basis(Field::C, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)(Scalar::one(Field::R) + Scalar::one(Field::C)), std::invalid_argument);
}

TEST_CASE("packed coefficients round-trip") {
  Rng rng{37};
  for (const Field f : {Field::R, Field::C, Field::H, Field::O}) {
    const Scalar a = random_scalar(f, rng);
    const auto packed = a.coeffs();
    CHECK(packed.size() == static_cast<std::size_t>(dim(f)));
    CHECK(max_abs_diff(Scalar::from_coeffs(f, packed), a) == 0.0);
  }
}
