#include "ptolemy/isometry.hpp"

#include <cmath>

#include "ptolemy/sampling.hpp"

namespace ptolemy {

namespace {

// -|zeta|^2 + v of a finite point.
Scalar vertex(const BoundaryPoint& p) {
  double nsq = 0.0;
  for (const Scalar& s : p.zeta) nsq += modulus_sq(s);
  Scalar w = p.v;
  w.c[0] = -nsq;
  return w;
}

void check_point(const Motion& m, Field f, int n) {
  if (m.field != f || m.n != n) throw std::invalid_argument("motion and point disagree on field or n");
}

}  // namespace

Matrix identity_matrix(Field f, int size) {
  Matrix m;
  m.field = f;
  m.rows = m.cols = size;
  m.a.assign(static_cast<std::size_t>(size) * size, Scalar::zero(f));
  for (int i = 0; i < size; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

double unitarity_residual(const Matrix& u) {
  if (u.rows != u.cols) throw std::invalid_argument("unitarity needs a square matrix");
  double worst = 0.0;
  for (int j = 0; j < u.cols; ++j) {
    for (int k = 0; k < u.cols; ++k) {
      Scalar acc = Scalar::zero(u.field);
      for (int i = 0; i < u.rows; ++i) acc = acc + conj(u.at(i, j)) * u.at(i, k);
      const Scalar expect = (j == k) ? Scalar::one(u.field) : Scalar::zero(u.field);
      worst = std::max(worst, max_abs_diff(acc, expect));
    }
  }
  return worst;
}

Generator translation_generator(BoundaryPoint base) {
  if (base.infinite) throw std::invalid_argument("translation base must be finite");
  return Translation{std::move(base)};
}

Generator translation_generator(OctPoint base) {
  if (base.infinite) throw std::invalid_argument("translation base must be finite");
  return OctTranslation{std::move(base)};
}

Generator rotation_generator(Matrix u) {
  if (!associative(u.field)) throw std::invalid_argument("rotations act on associative coordinates only");
  if (unitarity_residual(u) > 1e-10) throw std::invalid_argument("rotation matrix is not unitary");
  return Rotation{std::move(u)};
}

Generator spin_generator(Scalar mu) {
  if (mu.field != Field::H && mu.field != Field::O)
    throw std::invalid_argument("spin action exists for H and O only");
  if (std::abs(modulus(mu) - 1.0) > 1e-12) throw std::invalid_argument("spin scalar must be unit");
  if (mu.field == Field::O) {
    if (std::abs(re(mu)) > 1e-12) throw std::invalid_argument("octonionic spin scalar must be imaginary");
    mu.c[0] = 0.0;
  }
  return Spin{mu};
}

Generator dilation_generator(double delta) {
  if (!std::isfinite(delta) || !(delta > 0.0)) throw std::invalid_argument("dilation factor must be positive");
  return Dilation{delta};
}

Generator inversion_generator() { return Inversion{}; }

BoundaryPoint inversion(const BoundaryPoint& p) {
  if (p.infinite) return boundary_origin(p.field, p.n);
  if (gauge(p) < 1e-12) return boundary_infinity(p.field, p.n);
  const Scalar w = vertex(p);
  const Scalar winv = inverse(w);
  BoundaryPoint out = p;
  for (std::size_t i = 0; i < p.zeta.size(); ++i) out.zeta[i] = p.zeta[i] * winv;
  out.v = (1.0 / modulus_sq(w)) * conj(p.v);
  return out;
}

OctPoint inversion(const OctPoint& p) {
  if (p.infinite) return oct_origin();
  if (oct_gauge(p) < 1e-12) return oct_infinity();
  const double ms = modulus_sq(p.x);
  return make_oct_point((1.0 / ms) * conj(p.x), (-1.0 / ms) * (p.y * conj(p.x)));
}

BoundaryPoint apply(const Generator& g, const BoundaryPoint& p) {
  return std::visit(
      [&](const auto& gen) -> BoundaryPoint {
        using G = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<G, Translation>) {
          if (p.infinite) return p;
          return group_mul(gen.base, p);
        } else if constexpr (std::is_same_v<G, OctTranslation>) {
          throw std::invalid_argument("octonionic translation applied to an associative point");
        } else if constexpr (std::is_same_v<G, Rotation>) {
          if (gen.u.field != p.field) throw std::invalid_argument("rotation field mismatch");
          if (gen.u.rows != p.n - 1) throw std::invalid_argument("rotation size mismatch");
          if (p.infinite) return p;
          BoundaryPoint out = p;
          for (int i = 0; i < p.n - 1; ++i) {
            Scalar acc = Scalar::zero(p.field);
            for (int j = 0; j < p.n - 1; ++j) acc = acc + gen.u.at(i, j) * p.zeta[static_cast<std::size_t>(j)];
            out.zeta[static_cast<std::size_t>(i)] = acc;
          }
          return out;
        } else if constexpr (std::is_same_v<G, Spin>) {
          if (p.field != Field::H) throw std::invalid_argument("spin action on associative points needs K = H");
          if (gen.mu.field != Field::H) throw std::invalid_argument("spin scalar field mismatch");
          if (p.infinite) return p;
          const Scalar mc = conj(gen.mu);
          BoundaryPoint out = p;
          for (Scalar& s : out.zeta) s = (gen.mu * s) * mc;
          out.v = (gen.mu * p.v) * mc;
          out.v.c[0] = 0.0;
          return out;
        } else if constexpr (std::is_same_v<G, Dilation>) {
          if (p.infinite) return p;
          BoundaryPoint out = p;
          for (Scalar& s : out.zeta) s = gen.delta * s;
          out.v = (gen.delta * gen.delta) * p.v;
          return out;
        } else {
          return inversion(p);
        }
      },
      g);
}

OctPoint apply(const Generator& g, const OctPoint& p) {
  return std::visit(
      [&](const auto& gen) -> OctPoint {
        using G = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<G, OctTranslation>) {
          if (p.infinite) return p;
          return oct_group_mul(gen.base, p);
        } else if constexpr (std::is_same_v<G, Translation>) {
          throw std::invalid_argument("associative translation applied to an octonionic point");
        } else if constexpr (std::is_same_v<G, Rotation>) {
          throw std::invalid_argument("matrix rotations do not act on the octonionic plane");
        } else if constexpr (std::is_same_v<G, Spin>) {
          if (gen.mu.field != Field::O) throw std::invalid_argument("octonionic spin needs an O scalar");
          if (p.infinite) return p;
          const Scalar mc = conj(gen.mu);
          return make_oct_point((gen.mu * p.x) * mc, p.y * mc);
        } else if constexpr (std::is_same_v<G, Dilation>) {
          if (p.infinite) return p;
          const double d2 = gen.delta * gen.delta;
          return make_oct_point((d2 * d2) * p.x, d2 * p.y);
        } else {
          return inversion(p);
        }
      },
      g);
}

BoundaryPoint apply(const Motion& m, const BoundaryPoint& p) {
  check_point(m, p.field, p.n);
  BoundaryPoint out = p;
  for (auto it = m.word.rbegin(); it != m.word.rend(); ++it) out = apply(*it, out);
  return out;
}

OctPoint apply(const Motion& m, const OctPoint& p) {
  if (m.field != Field::O) throw std::invalid_argument("motion and point disagree on field");
  OctPoint out = p;
  for (auto it = m.word.rbegin(); it != m.word.rend(); ++it) out = apply(*it, out);
  return out;
}

Motion normalize_pair(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.field != q.field || p.n != q.n) throw std::invalid_argument("boundary point mismatch");
  if (dist(p, q) <= 1e-10) throw std::invalid_argument("normalize_pair needs distinct points");
  Motion m{p.field, p.n, {}};
  if (p.infinite) {
    if (gauge(q) != 0.0) m.word.push_back(translation_generator(group_inv(q)));
    return m;
  }
  const BoundaryPoint pinv = group_inv(p);
  const BoundaryPoint q1 = q.infinite ? q : group_mul(pinv, q);
  const BoundaryPoint q2 = inversion(q1);
  if (gauge(q2) != 0.0) m.word.push_back(translation_generator(group_inv(q2)));
  m.word.push_back(inversion_generator());
  m.word.push_back(translation_generator(pinv));
  return m;
}

Motion normalize_pair(const OctPoint& p, const OctPoint& q) {
  if (oct_dist(p, q) <= 1e-10) throw std::invalid_argument("normalize_pair needs distinct points");
  Motion m{Field::O, 2, {}};
  if (p.infinite) {
    if (oct_gauge(q) != 0.0) m.word.push_back(translation_generator(oct_inv(q)));
    return m;
  }
  const OctPoint pinv = oct_inv(p);
  const OctPoint q1 = q.infinite ? q : oct_group_mul(pinv, q);
  const OctPoint q2 = inversion(q1);
  if (oct_gauge(q2) != 0.0) m.word.push_back(translation_generator(oct_inv(q2)));
  m.word.push_back(inversion_generator());
  m.word.push_back(translation_generator(pinv));
  return m;
}

Matrix random_unitary(Field f, int size, Rng& rng) {
  if (!associative(f)) throw std::invalid_argument("unitary sampling needs an associative field");
  if (size < 0) throw std::invalid_argument("negative matrix size");
  Matrix u = identity_matrix(f, size);
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) {
    for (;;) {
      std::vector<Scalar> v(static_cast<std::size_t>(size), Scalar::zero(f));
      for (Scalar& s : v) s = random_scalar(f, rng);
      for (const auto& prev : cols) {
        Scalar c = Scalar::zero(f);
        for (int i = 0; i < size; ++i) c = c + conj(prev[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(i)];
        for (int i = 0; i < size; ++i)
          v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - prev[static_cast<std::size_t>(i)] * c;
      }
      double nsq = 0.0;
      for (const Scalar& s : v) nsq += modulus_sq(s);
      const double norm = std::sqrt(nsq);
      if (norm > 1e-3) {
        for (Scalar& s : v) s = (1.0 / norm) * s;
        cols.push_back(std::move(v));
        break;
      }
    }
  }
  for (int i = 0; i < size; ++i)
    for (int k = 0; k < size; ++k) u.at(i, k) = cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
  return u;
}

Motion random_motion(Field f, int n, std::uint64_t seed, int word_length) {
  if (word_length < 0) throw std::invalid_argument("negative word length");
  const int eff_n = (f == Field::O) ? 2 : n;
  if (f != Field::O && eff_n < 1) throw std::invalid_argument("n must be >= 1");
  Rng rng = sample_stream(seed, 0x6d6f746eULL, static_cast<std::uint64_t>(f), 0);
  Motion m{f, eff_n, {}};
  enum class Kind { translation, dilation, rotation, spin };
  std::vector<Kind> kinds{Kind::translation, Kind::dilation};
  if (f == Field::O || f == Field::H) kinds.push_back(Kind::spin);
  if (f != Field::O && eff_n >= 2) kinds.push_back(Kind::rotation);
  for (int w = 0; w < word_length; ++w) {
    if (rng.uniform() < 0.25) {
      m.word.push_back(inversion_generator());
      continue;
    }
    switch (kinds[rng.below(static_cast<std::uint32_t>(kinds.size()))]) {
      case Kind::translation:
        if (f == Field::O)
          m.word.push_back(translation_generator(random_oct_point(rng)));
        else
          m.word.push_back(translation_generator(random_boundary_point(f, eff_n, rng)));
        break;
      case Kind::dilation:
        m.word.push_back(dilation_generator(std::exp(rng.uniform(-1.0, 1.0))));
        break;
      case Kind::rotation:
        m.word.push_back(rotation_generator(random_unitary(f, eff_n - 1, rng)));
        break;
      case Kind::spin:
        m.word.push_back(spin_generator(f == Field::O ? random_unit_imaginary(Field::O, rng)
                                                      : random_unit(Field::H, rng)));
        break;
    }
  }
  return m;
}

}  // namespace ptolemy
