#pragma once

// Arithmetic in the four normed division algebras R, C, H, O.
//
// A Scalar always carries eight coefficient slots indexed by the octonion
// basis e0..e7.  Each subfield occupies fixed slots (R: {0}; C: {0,1};
// H: {0,1,2,4}) so a single multiplication table drives every field and the
// inclusions R < C < H < O are the identity on coefficients.  Invariant:
// slots outside a scalar's field are exactly zero.

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptolemy {

enum class Field : std::uint8_t { R = 0, C = 1, H = 2, O = 3 };

[[nodiscard]] constexpr int dim(Field f) noexcept {
  constexpr std::array<int, 4> d{1, 2, 4, 8};
  return d[static_cast<int>(f)];
}

[[nodiscard]] constexpr bool associative(Field f) noexcept { return f != Field::O; }

[[nodiscard]] inline std::string field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
    case Field::O: return "O";
  }
  throw std::logic_error("bad field tag");
}

[[nodiscard]] inline Field parse_field(std::string_view s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  if (s == "H") return Field::H;
  if (s == "O") return Field::O;
  throw std::invalid_argument("unknown field: expected one of R, C, H, O");
}

namespace detail {
inline constexpr std::array<std::uint8_t, 1> kSlotsR{0};
inline constexpr std::array<std::uint8_t, 2> kSlotsC{0, 1};
// {1, e1, e2, e4} closes under the table: e1 e2 = e4, e2 e4 = e1, e4 e1 = e2.
inline constexpr std::array<std::uint8_t, 4> kSlotsH{0, 1, 2, 4};
inline constexpr std::array<std::uint8_t, 8> kSlotsO{0, 1, 2, 3, 4, 5, 6, 7};
}  // namespace detail

// Active coefficient slots of a field, in packed (serialization) order.
[[nodiscard]] inline std::span<const std::uint8_t> slots(Field f) noexcept {
  switch (f) {
    case Field::R: return detail::kSlotsR;
    case Field::C: return detail::kSlotsC;
    case Field::H: return detail::kSlotsH;
    default: return detail::kSlotsO;
  }
}

// e_i e_j = sign * e_index.  The seven +1 triples below determine the rest by
// total antisymmetry: cyclic rotations keep the sign, transpositions flip it,
// and e_i e_i = -1 for i >= 1.
struct CayleyEntry {
  std::int8_t sign;
  std::uint8_t index;
};

[[nodiscard]] consteval std::array<std::array<CayleyEntry, 8>, 8> make_cayley_table() {
  std::array<std::array<CayleyEntry, 8>, 8> t{};
  for (std::uint8_t j = 0; j < 8; ++j) {
    t[0][j] = {1, j};
    t[j][0] = {1, j};
  }
  for (std::uint8_t i = 1; i < 8; ++i) t[i][i] = {-1, 0};
  constexpr std::uint8_t triples[7][3] = {{1, 2, 4}, {1, 3, 7}, {1, 5, 6}, {2, 3, 5},
                                          {2, 6, 7}, {3, 4, 6}, {4, 5, 7}};
  for (const auto& tr : triples) {
    const std::uint8_t i = tr[0], j = tr[1], k = tr[2];
    t[i][j] = {1, k};
    t[j][k] = {1, i};
    t[k][i] = {1, j};
    t[j][i] = {-1, k};
    t[k][j] = {-1, i};
    t[i][k] = {-1, j};
  }
  return t;
}

inline constexpr auto kCayley = make_cayley_table();

struct Scalar {
  Field field{Field::R};
  std::array<double, 8> c{};

  [[nodiscard]] static Scalar zero(Field f) noexcept { return Scalar{f, {}}; }

  [[nodiscard]] static Scalar real(Field f, double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite scalar coefficient");
    Scalar s{f, {}};
    s.c[0] = x;
    return s;
  }

  [[nodiscard]] static Scalar one(Field f) { return real(f, 1.0); }

  // k-th basis element in packed order (so for H, basis 3 is e4).
  [[nodiscard]] static Scalar basis(Field f, int k) {
    const auto sl = slots(f);
    if (k < 0 || k >= static_cast<int>(sl.size())) throw std::invalid_argument("basis index out of range");
    Scalar s{f, {}};
    s.c[sl[static_cast<std::size_t>(k)]] = 1.0;
    return s;
  }

  // Packed coefficients, length dim(f); rejects non-finite values.
  [[nodiscard]] static Scalar from_coeffs(Field f, std::span<const double> packed) {
    const auto sl = slots(f);
    if (packed.size() != sl.size()) throw std::invalid_argument("coeffs length must equal field dimension");
    Scalar s{f, {}};
    for (std::size_t k = 0; k < sl.size(); ++k) {
      if (!std::isfinite(packed[k])) throw std::invalid_argument("non-finite scalar coefficient");
      s.c[sl[k]] = packed[k];
    }
    return s;
  }

  // Coefficients in packed order, length dim(field).
  [[nodiscard]] std::vector<double> coeffs() const {
    const auto sl = slots(field);
    std::vector<double> out(sl.size());
    for (std::size_t k = 0; k < sl.size(); ++k) out[k] = c[sl[k]];
    return out;
  }

  bool operator==(const Scalar&) const = default;
};

namespace detail {
inline void check_same_field(const Scalar& a, const Scalar& b) {
  if (a.field != b.field) throw std::invalid_argument("scalar field mismatch");
}
}  // namespace detail

[[nodiscard]] inline Scalar operator+(const Scalar& a, const Scalar& b) {
  detail::check_same_field(a, b);
  Scalar out = a;
  for (int i = 0; i < 8; ++i) out.c[i] += b.c[i];
  return out;
}

[[nodiscard]] inline Scalar operator-(const Scalar& a, const Scalar& b) {
  detail::check_same_field(a, b);
  Scalar out = a;
  for (int i = 0; i < 8; ++i) out.c[i] -= b.c[i];
  return out;
}

[[nodiscard]] inline Scalar operator-(const Scalar& a) {
  Scalar out = a;
  for (std::uint8_t i : slots(a.field)) out.c[i] = -out.c[i];
  return out;
}

[[nodiscard]] inline Scalar operator*(const Scalar& a, const Scalar& b) {
  detail::check_same_field(a, b);
  Scalar out = Scalar::zero(a.field);
  const auto ss = slots(a.field);
  // Both orders of an unordered slot pair land in the same output slot, and
  // accumulating them back to back makes the cancellations in conj(z) * (t z)
  // exact, so self-distances in the metric layer are exactly zero.
  for (std::size_t u = 0; u < ss.size(); ++u) {
    const std::uint8_t i = ss[u];
    if (a.c[i] != 0.0 && b.c[i] != 0.0) {
      const CayleyEntry e = kCayley[i][i];
      out.c[e.index] += static_cast<double>(e.sign) * a.c[i] * b.c[i];
    }
    for (std::size_t w = u + 1; w < ss.size(); ++w) {
      const std::uint8_t j = ss[w];
      if (a.c[i] != 0.0 && b.c[j] != 0.0) {
        const CayleyEntry e = kCayley[i][j];
        out.c[e.index] += static_cast<double>(e.sign) * a.c[i] * b.c[j];
      }
      if (a.c[j] != 0.0 && b.c[i] != 0.0) {
        const CayleyEntry e = kCayley[j][i];
        out.c[e.index] += static_cast<double>(e.sign) * a.c[j] * b.c[i];
      }
    }
  }
  return out;
}

[[nodiscard]] inline Scalar operator*(double t, const Scalar& a) {
  Scalar out = a;
  for (std::uint8_t i : slots(a.field)) out.c[i] *= t;
  return out;
}

[[nodiscard]] inline Scalar operator*(const Scalar& a, double t) { return t * a; }

[[nodiscard]] inline Scalar conj(const Scalar& a) {
  Scalar out = a;
  for (std::uint8_t i : slots(a.field)) {
    if (i != 0) out.c[i] = -out.c[i];
  }
  return out;
}

[[nodiscard]] inline double re(const Scalar& a) noexcept { return a.c[0]; }

// Vector part z - Re(z); the real slot is exactly zero in the result.
[[nodiscard]] inline Scalar imag(const Scalar& a) {
  Scalar out = a;
  out.c[0] = 0.0;
  return out;
}

[[nodiscard]] inline double modulus_sq(const Scalar& a) noexcept {
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += a.c[i] * a.c[i];
  return s;
}

[[nodiscard]] inline double modulus(const Scalar& a) noexcept { return std::sqrt(modulus_sq(a)); }

[[nodiscard]] inline Scalar inverse(const Scalar& a) {
  const double ms = modulus_sq(a);
  if (ms == 0.0) throw std::domain_error("inverse of zero scalar");
  return (1.0 / ms) * conj(a);
}

// Re((xy)z); equal to Re(x(yz)) and invariant under cyclic shifts, so it
// realizes the well-defined Re(xyz).
[[nodiscard]] inline double re_triple(const Scalar& x, const Scalar& y, const Scalar& z) {
  const Scalar p = x * y;
  double s = p.c[0] * z.c[0];
  for (int k = 1; k < 8; ++k) s -= p.c[k] * z.c[k];
  return s;
}

// Largest coefficient gap between two scalars of the same field.
[[nodiscard]] inline double max_abs_diff(const Scalar& a, const Scalar& b) {
  detail::check_same_field(a, b);
  double m = 0.0;
  for (int i = 0; i < 8; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
  return m;
}

}  // namespace ptolemy
