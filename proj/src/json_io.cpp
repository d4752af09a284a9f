#include "ptolemy/json_io.hpp"

#include <cmath>
#include <limits>

namespace ptolemy {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

double number_at(const ojson& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing key '") + key + "'");
  const ojson& v = j.at(key);
  if (!v.is_number()) bad(std::string("'") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad(std::string("'") + key + "' must be finite");
  return x;
}

int int_at(const ojson& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing key '") + key + "'");
  const ojson& v = j.at(key);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

Field field_at(const ojson& j) {
  if (!j.contains("field")) bad("missing key 'field'");
  const ojson& v = j.at("field");
  if (!v.is_string()) bad("'field' must be a string");
  return parse_field(v.get<std::string>());
}

bool is_inf_token(const ojson& j) { return j.is_string() && j.get<std::string>() == "inf"; }

}  // namespace

ojson json_real(double x) {
  if (std::isnan(x)) bad("cannot encode NaN");
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const ojson& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    bad("unrecognized real token '" + s + "'");
  }
  if (!j.is_number()) bad("expected a number or \"inf\"");
  return j.get<double>();
}

ojson encode_scalar(const Scalar& s) {
  ojson j;
  j["field"] = field_name(s.field);
  ojson coeffs = ojson::array();
  for (std::uint8_t slot : slots(s.field)) coeffs.push_back(s.c[slot]);
  j["coeffs"] = std::move(coeffs);
  return j;
}

Scalar decode_scalar(const ojson& j) {
  if (!j.is_object()) bad("scalar must be an object");
  const Field f = field_at(j);
  if (!j.contains("coeffs")) bad("missing key 'coeffs'");
  const ojson& c = j.at("coeffs");
  if (!c.is_array() || c.size() != static_cast<std::size_t>(dim(f))) bad("'coeffs' length must equal dim(field)");
  std::vector<double> coeffs;
  coeffs.reserve(c.size());
  for (const ojson& x : c) {
    if (!x.is_number()) bad("'coeffs' entries must be numbers");
    coeffs.push_back(x.get<double>());
  }
  return Scalar::from_coeffs(f, coeffs);
}

Scalar decode_scalar(const ojson& j, Field expect) {
  const Scalar s = decode_scalar(j);
  if (s.field != expect) bad("scalar field mismatch");
  return s;
}

ojson encode_boundary_point(const BoundaryPoint& p) {
  if (p.infinite) return "inf";
  ojson j;
  j["field"] = field_name(p.field);
  j["n"] = p.n;
  ojson zeta = ojson::array();
  for (const Scalar& s : p.zeta) zeta.push_back(encode_scalar(s));
  j["zeta"] = std::move(zeta);
  j["v"] = encode_scalar(p.v);
  return j;
}

BoundaryPoint decode_boundary_point(const ojson& j, Field f, int n) {
  if (is_inf_token(j)) return boundary_infinity(f, n);
  if (!j.is_object()) bad("boundary point must be an object or \"inf\"");
  if (field_at(j) != f) bad("boundary point field mismatch");
  if (int_at(j, "n") != n) bad("boundary point n mismatch");
  if (!j.contains("zeta")) bad("missing key 'zeta'");
  const ojson& z = j.at("zeta");
  if (!z.is_array() || z.size() != static_cast<std::size_t>(n - 1)) bad("'zeta' length must equal n - 1");
  std::vector<Scalar> zeta;
  zeta.reserve(z.size());
  for (const ojson& s : z) zeta.push_back(decode_scalar(s, f));
  if (!j.contains("v")) bad("missing key 'v'");
  return make_boundary_point(f, n, std::move(zeta), decode_scalar(j.at("v"), f));
}

ojson encode_oct_point(const OctPoint& p) {
  if (p.infinite) return "inf";
  ojson j;
  j["x"] = encode_scalar(p.x);
  j["y"] = encode_scalar(p.y);
  return j;
}

OctPoint decode_oct_point(const ojson& j) {
  if (is_inf_token(j)) return oct_infinity();
  if (!j.is_object()) bad("octonionic point must be an object or \"inf\"");
  if (!j.contains("x") || !j.contains("y")) bad("octonionic point needs 'x' and 'y'");
  const Scalar x = decode_scalar(j.at("x"), Field::O);
  const Scalar y = decode_scalar(j.at("y"), Field::O);
  if (oct_variety_residual(x, y) > 1e-9) bad("point violates 2 Re(x) + |y|^2 = 0");
  return make_oct_point(x, y);
}

ojson encode_quadruple(const Quadruple& q) {
  ojson j;
  j["field"] = field_name(q.p[0].field);
  j["n"] = q.p[0].n;
  ojson pts = ojson::array();
  for (const BoundaryPoint& p : q.p) pts.push_back(encode_boundary_point(p));
  j["points"] = std::move(pts);
  return j;
}

ojson encode_quadruple(const OctQuadruple& q) {
  ojson j;
  j["field"] = "O";
  j["n"] = 2;
  ojson pts = ojson::array();
  for (const OctPoint& p : q.p) pts.push_back(encode_oct_point(p));
  j["points"] = std::move(pts);
  return j;
}

AnyQuadruple decode_quadruple(const ojson& j) {
  if (!j.is_object()) bad("quadruple must be an object");
  const Field f = field_at(j);
  if (!j.contains("points")) bad("missing key 'points'");
  const ojson& pts = j.at("points");
  if (!pts.is_array() || pts.size() != 4) bad("'points' must hold exactly four points");
  if (f == Field::O) {
    std::array<OctPoint, 4> p;
    for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = decode_oct_point(pts.at(static_cast<std::size_t>(i)));
    return make_oct_quadruple(p[0], p[1], p[2], p[3]);
  }
  const int n = int_at(j, "n");
  std::array<BoundaryPoint, 4> p;
  for (int i = 0; i < 4; ++i)
    p[static_cast<std::size_t>(i)] = decode_boundary_point(pts.at(static_cast<std::size_t>(i)), f, n);
  return make_quadruple(p[0], p[1], p[2], p[3]);
}

ojson encode_motion(const Motion& m) {
  ojson j;
  j["field"] = field_name(m.field);
  j["n"] = m.n;
  ojson word = ojson::array();
  for (const Generator& g : m.word) {
    ojson e;
    std::visit(
        [&](const auto& gen) {
          using G = std::decay_t<decltype(gen)>;
          if constexpr (std::is_same_v<G, Translation>) {
            e["kind"] = "translation";
            e["point"] = encode_boundary_point(gen.base);
          } else if constexpr (std::is_same_v<G, OctTranslation>) {
            e["kind"] = "translation";
            e["point"] = encode_oct_point(gen.base);
          } else if constexpr (std::is_same_v<G, Rotation>) {
            e["kind"] = "rotation";
            ojson rows = ojson::array();
            for (int r = 0; r < gen.u.rows; ++r) {
              ojson row = ojson::array();
              for (int c = 0; c < gen.u.cols; ++c) row.push_back(encode_scalar(gen.u.at(r, c)));
              rows.push_back(std::move(row));
            }
            e["matrix"] = std::move(rows);
          } else if constexpr (std::is_same_v<G, Spin>) {
            e["kind"] = "spin";
            e["mu"] = encode_scalar(gen.mu);
          } else if constexpr (std::is_same_v<G, Dilation>) {
            e["kind"] = "dilation";
            e["delta"] = gen.delta;
          } else {
            e["kind"] = "inversion";
          }
        },
        g);
    word.push_back(std::move(e));
  }
  j["word"] = std::move(word);
  return j;
}

Motion decode_motion(const ojson& j, Field f, int n) {
  if (!j.is_object()) bad("motion must be an object");
  if (j.contains("field") && parse_field(j.at("field").get<std::string>()) != f) bad("motion field mismatch");
  if (j.contains("n") && int_at(j, "n") != n) bad("motion n mismatch");
  if (!j.contains("word")) bad("missing key 'word'");
  const ojson& word = j.at("word");
  if (!word.is_array()) bad("'word' must be an array");
  Motion m{f, n, {}};
  for (const ojson& e : word) {
    if (!e.is_object() || !e.contains("kind") || !e.at("kind").is_string()) bad("word entry needs a 'kind' string");
    const std::string kind = e.at("kind").get<std::string>();
    if (kind == "translation") {
      if (!e.contains("point")) bad("translation needs 'point'");
      if (f == Field::O)
        m.word.push_back(translation_generator(decode_oct_point(e.at("point"))));
      else
        m.word.push_back(translation_generator(decode_boundary_point(e.at("point"), f, n)));
    } else if (kind == "rotation") {
      if (!e.contains("matrix")) bad("rotation needs 'matrix'");
      const ojson& rows = e.at("matrix");
      const int size = n - 1;
      if (!rows.is_array() || rows.size() != static_cast<std::size_t>(size)) bad("rotation matrix must be (n-1) x (n-1)");
      Matrix u = identity_matrix(f, size);
      for (int r = 0; r < size; ++r) {
        const ojson& row = rows.at(static_cast<std::size_t>(r));
        if (!row.is_array() || row.size() != static_cast<std::size_t>(size))
          bad("rotation matrix must be (n-1) x (n-1)");
        for (int c = 0; c < size; ++c) u.at(r, c) = decode_scalar(row.at(static_cast<std::size_t>(c)), f);
      }
      m.word.push_back(rotation_generator(std::move(u)));
    } else if (kind == "spin") {
      if (!e.contains("mu")) bad("spin needs 'mu'");
      m.word.push_back(spin_generator(decode_scalar(e.at("mu"), f)));
    } else if (kind == "dilation") {
      m.word.push_back(dilation_generator(number_at(e, "delta")));
    } else if (kind == "inversion") {
      m.word.push_back(inversion_generator());
    } else {
      bad("unknown generator kind '" + kind + "'");
    }
  }
  return m;
}

}  // namespace ptolemy
