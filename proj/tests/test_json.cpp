#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "ptolemy/json_io.hpp"
#include "ptolemy/sampling.hpp"

using namespace ptolemy;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("reals round-trip, with infinities as strings") {
  CHECK(json_real(1.5) == ojson(1.5));
  CHECK(json_real(kInf) == ojson("inf"));
  CHECK(json_real(-kInf) == ojson("-inf"));
  CHECK(real_from_json(ojson(0.25)) == 0.25);
  CHECK(real_from_json(ojson("inf")) == kInf);
  CHECK(real_from_json(ojson("-inf")) == -kInf);
  CHECK_THROWS_AS((void)real_from_json(ojson("wide")), std::invalid_argument);
  CHECK_THROWS_AS((void)real_from_json(ojson::object()), std::invalid_argument);
}

TEST_CASE("scalars round-trip bit-exactly") {
  Rng rng{191};
  for (const Field f : {Field::R, Field::C, Field::H, Field::O}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Scalar s = random_scalar(f, rng, -5.0, 5.0);
      const ojson j = encode_scalar(s);
      CHECK(j.at("coeffs").size() == static_cast<std::size_t>(dim(f)));
      const Scalar back = decode_scalar(j);
      CHECK(back.field == f);
      CHECK(max_abs_diff(back, s) == 0.0);
      CHECK(max_abs_diff(decode_scalar(j, f), s) == 0.0);
    }
  }
  CHECK_THROWS_AS((void)decode_scalar(encode_scalar(Scalar::one(Field::C)), Field::H),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)decode_scalar(ojson{{"field", "C"}, {"coeffs", {1.0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)decode_scalar(ojson{{"field", "Z"}, {"coeffs", {1.0}}}),
                  std::invalid_argument);
}

TEST_CASE("boundary points round-trip bit-exactly") {
  Rng rng{193};
  for (const Field f : {Field::R, Field::C, Field::H}) {
    for (const int n : {2, 4}) {
      for (int trial = 0; trial < 50; ++trial) {
        const BoundaryPoint p = random_boundary_point(f, n, rng);
        const BoundaryPoint back = decode_boundary_point(encode_boundary_point(p), f, n);
        CHECK(back.field == f);
        CHECK(max_abs_diff(back.v, p.v) == 0.0);
        for (int i = 0; i < n - 1; ++i) CHECK(max_abs_diff(back.zeta[i], p.zeta[i]) == 0.0);
      }
    }
    const ojson inf = encode_boundary_point(boundary_infinity(f, 3));
    CHECK(inf == ojson("inf"));
    CHECK(decode_boundary_point(inf, f, 3).infinite);
  }
  // Mismatched n and field are rejected, as is a real part on v.
  const ojson j = encode_boundary_point(random_boundary_point(Field::C, 3, rng));
  CHECK_THROWS_AS((void)decode_boundary_point(j, Field::C, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)decode_boundary_point(j, Field::H, 3), std::invalid_argument);
  ojson bad = j;
  bad["v"]["coeffs"][0] = 0.5;
  CHECK_THROWS_AS((void)decode_boundary_point(bad, Field::C, 3), std::invalid_argument);
}

TEST_CASE("variety points round-trip and are validated") {
  Rng rng{197};
  for (int trial = 0; trial < 50; ++trial) {
    const OctPoint p = random_oct_point(rng);
    const OctPoint back = decode_oct_point(encode_oct_point(p));
    CHECK(max_abs_diff(back.x, p.x) == 0.0);
    CHECK(max_abs_diff(back.y, p.y) == 0.0);
  }
  CHECK(decode_oct_point(encode_oct_point(oct_infinity())).infinite);
  // A point far off the variety is rejected.
  ojson bad = encode_oct_point(random_oct_point(rng));
  bad["x"]["coeffs"][0] = 7.0;
  CHECK_THROWS_AS((void)decode_oct_point(bad), std::invalid_argument);
}

TEST_CASE("quadruples round-trip through the variant decoder") {
  Rng rng{199};
  for (const Field f : {Field::R, Field::C, Field::H}) {
    const Quadruple q = random_quadruple(f, 3, rng, 0.3, 0.5);
    const ojson j = encode_quadruple(q);
    CHECK(j.at("field") == field_name(f));
    CHECK(j.at("n") == 3);
    const AnyQuadruple back = decode_quadruple(j);
    CHECK(std::holds_alternative<Quadruple>(back));
    CHECK(encode_quadruple(std::get<Quadruple>(back)) == j);
  }
  const OctQuadruple q = random_oct_quadruple(rng, 0.3, 0.5);
  const ojson j = encode_quadruple(q);
  CHECK(j.at("field") == "O");
  const AnyQuadruple back = decode_quadruple(j);
  CHECK(std::holds_alternative<OctQuadruple>(back));
  CHECK(encode_quadruple(std::get<OctQuadruple>(back)) == j);

  // Coincident points fail the quadruple invariant on decode.
  ojson twice = encode_quadruple(q);
  twice["points"][1] = twice["points"][0];
  CHECK_THROWS_AS((void)decode_quadruple(twice), std::invalid_argument);
  CHECK_THROWS_AS((void)decode_quadruple(ojson{{"field", "C"}}), std::invalid_argument);
}

TEST_CASE("motions round-trip bit-exactly") {
  for (const Field f : {Field::R, Field::C, Field::H, Field::O}) {
    const int n = f == Field::O ? 2 : 3;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const Motion m = random_motion(f, n, seed, 6);
      const ojson j = encode_motion(m);
      const Motion back = decode_motion(j, f, n);
      CHECK(encode_motion(back) == j);
      CHECK(back.word.size() == m.word.size());
    }
  }
  // Unknown generator kinds and malformed rotation matrices are rejected.
  const Motion m = random_motion(Field::C, 3, 1, 3);
  ojson j = encode_motion(m);
  ojson bad = j;
  bad["word"][0] = ojson{{"kind", "twist"}};
  CHECK_THROWS_AS((void)decode_motion(bad, Field::C, 3), std::invalid_argument);
  ojson rot = ojson{{"kind", "rotation"}, {"matrix", ojson::array()}};
  ojson bad2 = j;
  bad2["word"][0] = rot;
  CHECK_THROWS_AS((void)decode_motion(bad2, Field::C, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)decode_motion(j, Field::H, 3), std::invalid_argument);
}

TEST_CASE("decoded motions act identically to the originals") {
  for (const Field f : {Field::R, Field::C, Field::H}) {
    const Motion m = random_motion(f, 3, 77, 5);
    const Motion back = decode_motion(encode_motion(m), f, 3);
    Rng rng{211};
    for (int trial = 0; trial < 20; ++trial) {
      const BoundaryPoint p = random_boundary_point(f, 3, rng);
      const BoundaryPoint a = ptolemy::apply(m, p);
      const BoundaryPoint b = ptolemy::apply(back, p);
      CHECK(a.infinite == b.infinite);
      if (!a.infinite) {
        CHECK(max_abs_diff(a.v, b.v) == 0.0);
        for (int i = 0; i < 2; ++i) CHECK(max_abs_diff(a.zeta[i], b.zeta[i]) == 0.0);
      }
    }
  }
}
