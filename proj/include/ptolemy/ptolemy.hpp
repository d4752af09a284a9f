#pragma once

#include <array>
#include <string_view>

#include "ptolemy/crossratio.hpp"
#include "ptolemy/isometry.hpp"

namespace ptolemy {

// Partition of four circle parameters into the two pairs that separate each
// other: pair_13_24 means {t1, t3} and {t2, t4} interleave in cyclic order.
enum class Separation : std::uint8_t { pair_12_34, pair_13_24, pair_14_23 };

[[nodiscard]] std::string_view separation_name(Separation s);

// Parameters live on R u {inf}; +inf and -inf name the same circle point.
// Throws std::invalid_argument on NaN or coincident parameters.
[[nodiscard]] Separation separation(double t1, double t2, double t3, double t4);

enum class Verdict : std::uint8_t {
  strict,
  equality_case_1,  // d23 d14 = d13 d24 + d12 d34
  equality_case_2,  // d13 d24 = d12 d34 + d23 d14
  equality_case_3,  // d12 d34 = d13 d24 + d23 d14
  violation,
};

[[nodiscard]] std::string_view verdict_name(Verdict v);

// The equality case forced on a common R-circle with the given separation.
[[nodiscard]] Verdict equality_case_for(Separation s);

struct PtolemyReport {
  // Products {d13 d24, d12 d34, d23 d14}; all +inf when a point is infinite.
  std::array<double, 3> products;
  // Triangle-style slacks, one per inequality: residuals[k] >= 0 iff
  // inequality k+1 holds. Raw product form for finite quadruples, normalized
  // by d14 d23 when a point is infinite.
  std::array<double, 3> residuals;
  Verdict verdict = Verdict::strict;
};

// Scale-free slacks {rX1 + rX2 - 1, rX2 - rX1 + 1, rX1 - rX2 + 1}, the raw
// residuals divided through by d14 d23.
[[nodiscard]] std::array<double, 3> normalized_ptolemy_residuals(const RootCrossPair& r);

// Checks all three Ptolemaean inequalities. The verdict always comes from the
// normalized residuals, so tol acts on a scale-free quantity: violation if
// some residual < -tol, else the closest-to-zero residual within tol names
// the equality case, else strict.
[[nodiscard]] PtolemyReport ptolemy_check(const Quadruple& q, double tol);
[[nodiscard]] PtolemyReport ptolemy_check(const OctQuadruple& q, double tol);

// An R-circle as the image of the standard one under a motion.
struct RCircle {
  Motion motion;
};

[[nodiscard]] RCircle standard_rcircle(Field f, int n);

// Point at parameter t on c. Associative fields chart the standard circle as
// zeta = (t, 0, ..., 0), v = 0 (needs n >= 2); t = +-inf gives the image of
// the point at infinity. Distances along the standard circle are |t - s|.
[[nodiscard]] BoundaryPoint rcircle_point(const RCircle& c, double t);

// Octonionic chart x = -t^2, y = sqrt(2) t.
[[nodiscard]] OctPoint oct_rcircle_point(const RCircle& c, double t);

}  // namespace ptolemy
