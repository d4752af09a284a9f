#pragma once

// Generator words for the boundary similarity-and-inversion groups: left
// translations, rotations by unitary matrices (associative fields), spin
// actions by unit scalars, dilations, and inversion.  A Motion is a word of
// generators applied right to left.  Also: normalization of a distinct pair
// to (infinity, origin), and seeded sampling of unitaries and motions.

#include <variant>
#include <vector>

#include "ptolemy/heisenberg.hpp"
#include "ptolemy/rng.hpp"

namespace ptolemy {

// Row-major matrix over K.
struct Matrix {
  Field field{Field::R};
  int rows{0};
  int cols{0};
  std::vector<Scalar> a;

  [[nodiscard]] Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  [[nodiscard]] const Scalar& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

[[nodiscard]] Matrix identity_matrix(Field f, int size);
// max coefficient of U*U - I (conjugate-transpose on the left factor).
[[nodiscard]] double unitarity_residual(const Matrix& u);

struct Translation {
  BoundaryPoint base;
};
struct OctTranslation {
  OctPoint base;
};
struct Rotation {
  Matrix u;
};
struct Spin {
  Scalar mu;
};
struct Dilation {
  double delta{1.0};
};
struct Inversion {};

using Generator = std::variant<Translation, OctTranslation, Rotation, Spin, Dilation, Inversion>;

// Validating constructors.  Rotation: U*U = I within 1e-10.  Spin: |mu| = 1
// within 1e-12, and Re(mu) = 0 when mu is octonionic.  Dilation: delta > 0.
[[nodiscard]] Generator translation_generator(BoundaryPoint base);
[[nodiscard]] Generator translation_generator(OctPoint base);
[[nodiscard]] Generator rotation_generator(Matrix u);
[[nodiscard]] Generator spin_generator(Scalar mu);
[[nodiscard]] Generator dilation_generator(double delta);
[[nodiscard]] Generator inversion_generator();

struct Motion {
  Field field{Field::R};
  int n{2};
  std::vector<Generator> word;  // applied right to left: the last entry acts first
};

// Inversion of a single point.  Finite p with gauge < 1e-12 is treated as the
// origin and maps to infinity; infinity maps to the origin.
[[nodiscard]] BoundaryPoint inversion(const BoundaryPoint& p);
[[nodiscard]] OctPoint inversion(const OctPoint& p);

[[nodiscard]] BoundaryPoint apply(const Generator& g, const BoundaryPoint& p);
[[nodiscard]] OctPoint apply(const Generator& g, const OctPoint& p);
[[nodiscard]] BoundaryPoint apply(const Motion& m, const BoundaryPoint& p);
[[nodiscard]] OctPoint apply(const Motion& m, const OctPoint& p);

// A word sending p to infinity and q to the origin (p, q distinct):
// T_{inv(q')} . R . T_{inv(p)} with q' = R(T_{inv(p)} q), with the obvious
// shortcuts when p is already infinite.
[[nodiscard]] Motion normalize_pair(const BoundaryPoint& p, const BoundaryPoint& q);
[[nodiscard]] Motion normalize_pair(const OctPoint& p, const OctPoint& q);

// Gram-Schmidt on columns with uniform [-1,1] entries; columns are
// orthonormal under <<a,b>> = sum conj(b_i) a_i.  Associative fields only.
[[nodiscard]] Matrix random_unitary(Field f, int size, Rng& rng);

// Deterministic word of word_length generators: inversion with probability
// 1/4 per slot, otherwise uniformly a translation (coefficients in [-1,1],
// variety-projected for O), a dilation with delta = exp(uniform[-1,1]), a
// rotation (associative, n >= 2), or a spin (H and O).
[[nodiscard]] Motion random_motion(Field f, int n, std::uint64_t seed, int word_length);

}  // namespace ptolemy
