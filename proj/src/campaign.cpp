#include "ptolemy/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "ptolemy/sampling.hpp"

namespace ptolemy {

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::algebra:
      return "algebra";
    case Suite::metric:
      return "metric";
    case Suite::isometry:
      return "isometry";
    case Suite::fundamental:
      return "fundamental";
    case Suite::ptolemy:
      return "ptolemy";
    default:
      return "rcircle";
  }
}

Suite parse_suite(std::string_view s) {
  if (s == "algebra") return Suite::algebra;
  if (s == "metric") return Suite::metric;
  if (s == "isometry") return Suite::isometry;
  if (s == "fundamental") return Suite::fundamental;
  if (s == "ptolemy") return Suite::ptolemy;
  if (s == "rcircle") return Suite::rcircle;
  throw std::invalid_argument("unknown suite '" + std::string(s) + "'");
}

namespace {

struct Outcome {
  double residual = 0.0;
  bool violation = false;
};

void fold(Outcome& o, double residual, double tol) {
  o.residual = std::max(o.residual, residual);
  if (residual > tol) o.violation = true;
}

std::uint64_t cell_tag(Field f, int n) {
  return static_cast<std::uint64_t>(f) * 64ULL + static_cast<std::uint64_t>(n);
}

Rng cell_rng(const CampaignConfig& cfg, Suite s, Field f, int n, std::uint64_t i) {
  return sample_stream(cfg.seed, static_cast<std::uint64_t>(s), cell_tag(f, n), i);
}

double point_scale(const BoundaryPoint& p) {
  double m = 1.0;
  for (const Scalar& s : p.zeta)
    for (std::uint8_t slot : slots(p.field)) m = std::max(m, std::abs(s.c[slot]));
  for (std::uint8_t slot : slots(p.field)) m = std::max(m, std::abs(p.v.c[slot]));
  return m;
}

double point_scale(const OctPoint& p) {
  double m = 1.0;
  for (std::uint8_t slot : slots(Field::O))
    m = std::max({m, std::abs(p.x.c[slot]), std::abs(p.y.c[slot])});
  return m;
}

double point_gap(const BoundaryPoint& a, const BoundaryPoint& b) {
  double g = max_abs_diff(a.v, b.v);
  for (std::size_t i = 0; i < a.zeta.size(); ++i) g = std::max(g, max_abs_diff(a.zeta[i], b.zeta[i]));
  return g;
}

double point_gap(const OctPoint& a, const OctPoint& b) {
  return std::max(max_abs_diff(a.x, b.x), max_abs_diff(a.y, b.y));
}

// ---------------------------------------------------------------- algebra --

struct AlgebraSample {
  Scalar x = Scalar::zero(Field::R);
  Scalar y = Scalar::zero(Field::R);
  Scalar z = Scalar::zero(Field::R);
  Scalar mu = Scalar::zero(Field::R);
  std::array<std::uint32_t, 4> word{};
  bool oct = false;
};

AlgebraSample gen_algebra(const CampaignConfig& cfg, Field f, std::uint64_t i) {
  Rng rng = cell_rng(cfg, Suite::algebra, f, 0, i);
  AlgebraSample s;
  s.oct = f == Field::O;
  s.x = random_scalar(f, rng, -2.0, 2.0);
  s.y = random_scalar(f, rng, -2.0, 2.0);
  s.z = random_scalar(f, rng, -2.0, 2.0);
  if (s.oct) {
    s.mu = random_unit_imaginary(Field::O, rng);
    for (auto& w : s.word) w = rng.below(4);
  }
  return s;
}

Outcome eval_algebra(const AlgebraSample& s, double tol) {
  Outcome o;
  const Scalar xy = s.x * s.y;
  const double sxy = std::max(1.0, modulus(s.x) * modulus(s.y));
  fold(o, std::abs(modulus(xy) - modulus(s.x) * modulus(s.y)) / sxy, tol);
  fold(o, max_abs_diff(conj(xy), conj(s.y) * conj(s.x)) / sxy, tol);
  const double sxyz = std::max(1.0, modulus(s.x) * modulus(s.y) * modulus(s.z));
  if (!s.oct) {
    fold(o, max_abs_diff(xy * s.z, s.x * (s.y * s.z)) / sxyz, tol);
    return o;
  }
  const Scalar mc = conj(s.mu);
  const Scalar yz = s.y * s.z;
  const double szxyz = std::max(1.0, sxyz * modulus(s.z));
  fold(o, max_abs_diff((s.z * xy) * s.z, (s.z * s.x) * (yz)) / szxyz, tol);
  fold(o, max_abs_diff((s.z * xy) * s.z, s.z * (xy * s.z)) / szxyz, tol);
  fold(o, std::abs(re(xy * s.z) - re(s.x * yz)) / sxyz, tol);
  fold(o, std::abs(re(xy * s.z) - re(yz * s.x)) / sxyz, tol);
  fold(o, max_abs_diff(((s.mu * s.x) * mc) * (s.mu * s.y), s.mu * xy) / sxy, tol);
  fold(o, max_abs_diff((s.x * s.mu) * ((mc * s.y) * s.mu), xy * s.mu) / sxy, tol);
  fold(o, max_abs_diff(xy + s.y * s.x, (s.x * mc) * (s.mu * s.y) + (s.y * mc) * (s.mu * s.x)) / sxy, tol);
  const std::array<Scalar, 4> letters{s.x, s.y, conj(s.x), conj(s.y)};
  const Scalar a = letters[s.word[0]];
  const Scalar b = letters[s.word[1]];
  const Scalar c = letters[s.word[2]];
  const Scalar d = letters[s.word[3]];
  const Scalar ref = ((a * b) * c) * d;
  const double sw = std::max(1.0, modulus(a) * modulus(b) * modulus(c) * modulus(d));
  fold(o, max_abs_diff(ref, (a * (b * c)) * d) / sw, tol);
  fold(o, max_abs_diff(ref, (a * b) * (c * d)) / sw, tol);
  fold(o, max_abs_diff(ref, a * ((b * c) * d)) / sw, tol);
  fold(o, max_abs_diff(ref, a * (b * (c * d))) / sw, tol);
  return o;
}

ojson echo_algebra(const AlgebraSample& s) {
  ojson j;
  j["x"] = encode_scalar(s.x);
  j["y"] = encode_scalar(s.y);
  j["z"] = encode_scalar(s.z);
  if (s.oct) {
    j["mu"] = encode_scalar(s.mu);
    static constexpr std::array<const char*, 4> names{"x", "y", "xc", "yc"};
    ojson w = ojson::array();
    for (auto k : s.word) w.push_back(names[k]);
    j["word"] = std::move(w);
  }
  return j;
}

// ------------------------------------------------------------------ metric --

struct MetricSample {
  bool oct = false;
  std::array<BoundaryPoint, 3> p{};
  std::array<OctPoint, 3> op{};
  int inf_slot = -1;
};

MetricSample gen_metric(const CampaignConfig& cfg, Field f, int n, std::uint64_t i) {
  Rng rng = cell_rng(cfg, Suite::metric, f, n, i);
  MetricSample s;
  s.oct = f == Field::O;
  for (int attempt = 0; attempt < 500; ++attempt) {
    s.inf_slot = -1;
    if (s.oct)
      for (auto& pt : s.op) pt = random_oct_point(rng);
    else
      for (auto& pt : s.p) pt = random_boundary_point(f, n, rng);
    if (rng.uniform() < 0.1) {
      s.inf_slot = static_cast<int>(rng.below(3));
      if (s.oct)
        s.op[static_cast<std::size_t>(s.inf_slot)] = oct_infinity();
      else
        s.p[static_cast<std::size_t>(s.inf_slot)] = boundary_infinity(f, n);
    }
    double min_d = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        const double d = s.oct ? oct_dist(s.op[static_cast<std::size_t>(a)], s.op[static_cast<std::size_t>(b)])
                               : dist(s.p[static_cast<std::size_t>(a)], s.p[static_cast<std::size_t>(b)]);
        min_d = std::min(min_d, d);
      }
    if (min_d >= 1e-3) return s;
  }
  throw std::runtime_error("could not sample a separated triple");
}

template <typename Point, typename DistFn, typename Dual, typename MulFn, typename InvFn, typename SqFn>
void eval_metric_generic(Outcome& o, const std::array<Point, 3>& p, int inf_slot, double tol, DistFn d, Dual dual,
                         MulFn mul, InvFn inv, SqFn gauge_sq, const Point& origin) {
  if (inf_slot >= 0) {
    for (int i = 0; i < 3; ++i) {
      if (i == inf_slot) continue;
      const auto& a = p[static_cast<std::size_t>(i)];
      const auto& b = p[static_cast<std::size_t>(inf_slot)];
      if (!std::isinf(d(a, b)) || !std::isinf(d(b, a))) fold(o, 1.0, tol);
    }
    int f1 = -1, f2 = -1;
    for (int i = 0; i < 3; ++i)
      if (i != inf_slot) (f1 < 0 ? f1 : f2) = i;
    const auto& a = p[static_cast<std::size_t>(f1)];
    const auto& b = p[static_cast<std::size_t>(f2)];
    fold(o, std::abs(d(a, b) - d(b, a)), tol);
    fold(o, std::abs(d(a, b) - dual(a, b)), tol);
    return;
  }
  std::array<std::array<double, 3>, 3> D{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          d(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  for (int i = 0; i < 3; ++i) {
    fold(o, D[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], tol);  // exact-cancellation identity
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double slack = D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                         D[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
                         D[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    fold(o, std::max(0.0, -slack), tol);
    fold(o, std::abs(D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                     D[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]),
         tol);
    fold(o, std::abs(D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                     dual(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)])),
         tol);
  }
  // Group axioms: associativity, two-sided identity, inverse cancellation.
  const Point ab_c = mul(mul(p[0], p[1]), p[2]);
  const Point a_bc = mul(p[0], mul(p[1], p[2]));
  const double sc = std::max(point_scale(ab_c), point_scale(a_bc));
  fold(o, point_gap(ab_c, a_bc) / sc, tol);
  fold(o, point_gap(mul(p[0], origin), p[0]), tol);
  fold(o, point_gap(mul(origin, p[0]), p[0]), tol);
  fold(o, gauge_sq(mul(inv(p[0]), p[0])), tol);
  fold(o, gauge_sq(mul(p[0], inv(p[0]))), tol);
}

Outcome eval_metric(const MetricSample& s, Field f, int n, double tol) {
  Outcome o;
  if (s.oct) {
    eval_metric_generic(
        o, s.op, s.inf_slot, tol, [](const OctPoint& a, const OctPoint& b) { return oct_dist(a, b); },
        [](const OctPoint& a, const OctPoint& b) {
          if (a.infinite || b.infinite) return oct_dist(a, b);
          return oct_gauge(oct_group_mul(oct_inv(b), a));
        },
        [](const OctPoint& a, const OctPoint& b) { return oct_group_mul(a, b); },
        [](const OctPoint& a) { return oct_inv(a); },
        [](const OctPoint& a) { const double g = oct_gauge(a); return g * g; }, oct_origin());
    return o;
  }
  eval_metric_generic(
      o, s.p, s.inf_slot, tol, [](const BoundaryPoint& a, const BoundaryPoint& b) { return dist(a, b); },
      [](const BoundaryPoint& a, const BoundaryPoint& b) { return dist_via_lift(a, b); },
      [](const BoundaryPoint& a, const BoundaryPoint& b) { return group_mul(a, b); },
      [](const BoundaryPoint& a) { return group_inv(a); },
      [](const BoundaryPoint& a) { const double g = gauge(a); return g * g; }, boundary_origin(f, n));
  if (f == Field::R && s.inf_slot < 0) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const auto& a = s.p[static_cast<std::size_t>(i)];
        const auto& b = s.p[static_cast<std::size_t>(j)];
        double nsq = 0.0;
        for (std::size_t k = 0; k < a.zeta.size(); ++k) {
          const double dz = a.zeta[k].c[0] - b.zeta[k].c[0];
          nsq += dz * dz;
        }
        fold(o, std::abs(dist(a, b) - std::sqrt(nsq)), tol);
      }
  }
  return o;
}

ojson echo_metric(const MetricSample& s) {
  ojson pts = ojson::array();
  if (s.oct)
    for (const auto& pt : s.op) pts.push_back(encode_oct_point(pt));
  else
    for (const auto& pt : s.p) pts.push_back(encode_boundary_point(pt));
  ojson j;
  j["points"] = std::move(pts);
  return j;
}

// ---------------------------------------------------------------- isometry --

struct IsoSample {
  bool oct = false;
  BoundaryPoint p{}, q{};
  OctPoint op{}, oq{};
  Motion iso{Field::R, 2, {}};
  double delta = 1.0;
};

IsoSample gen_isometry(const CampaignConfig& cfg, Field f, int n, std::uint64_t i) {
  Rng rng = cell_rng(cfg, Suite::isometry, f, n, i);
  IsoSample s;
  s.oct = f == Field::O;
  for (int attempt = 0; attempt < 500; ++attempt) {
    if (s.oct) {
      s.op = random_oct_point(rng);
      s.oq = random_oct_point(rng);
      if (oct_gauge(s.op) < 0.3 || oct_gauge(s.oq) < 0.3 || oct_dist(s.op, s.oq) < 0.3) continue;
    } else {
      s.p = random_boundary_point(f, n, rng);
      s.q = random_boundary_point(f, n, rng);
      if (gauge(s.p) < 0.3 || gauge(s.q) < 0.3 || dist(s.p, s.q) < 0.3) continue;
    }
    break;
  }
  s.iso.field = f;
  s.iso.n = s.oct ? 2 : n;
  if (s.oct) {
    s.iso.word.push_back(translation_generator(random_oct_point(rng)));
    s.iso.word.push_back(spin_generator(random_unit_imaginary(Field::O, rng)));
    s.iso.word.push_back(translation_generator(random_oct_point(rng)));
  } else {
    s.iso.word.push_back(translation_generator(random_boundary_point(f, n, rng)));
    if (n >= 2) s.iso.word.push_back(rotation_generator(random_unitary(f, n - 1, rng)));
    if (f == Field::H) s.iso.word.push_back(spin_generator(random_unit(Field::H, rng)));
    s.iso.word.push_back(translation_generator(random_boundary_point(f, n, rng)));
  }
  s.delta = std::exp(rng.uniform(-1.0, 1.0));
  return s;
}

template <typename Point, typename DistFn, typename InvFn>
void eval_isometry_generic(Outcome& o, const IsoSample& s, const Point& p, const Point& q, const Point& origin,
                           double metric_power, double tol, DistFn d, InvFn invert) {
  const double dpq = d(p, q);
  fold(o, std::abs(d(apply(s.iso, p), apply(s.iso, q)) - dpq) / dpq, tol);
  const Generator dil = dilation_generator(s.delta);
  const double scale = std::pow(s.delta, metric_power);
  fold(o, std::abs(d(apply(dil, p), apply(dil, q)) - scale * dpq) / (scale * dpq), tol);
  const Point ip = invert(p);
  const Point iq = invert(q);
  fold(o, std::abs(d(ip, origin) * d(p, origin) - 1.0), tol);
  fold(o, std::abs(d(ip, iq) * d(p, origin) * d(origin, q) - dpq) / dpq, tol);
  fold(o, point_gap(invert(ip), p) / point_scale(p), tol);
  const Motion norm = normalize_pair(p, q);
  const Point mp = apply(norm, p);
  if (!mp.infinite) fold(o, 1.0, tol);
  fold(o, point_gap(apply(norm, q), origin), tol);
}

Outcome eval_isometry(const IsoSample& s, Field f, int n, double tol) {
  Outcome o;
  if (s.oct)
    eval_isometry_generic(o, s, s.op, s.oq, oct_origin(), 2.0, tol,
                          [](const OctPoint& a, const OctPoint& b) { return oct_dist(a, b); },
                          [](const OctPoint& a) { return inversion(a); });
  else
    eval_isometry_generic(o, s, s.p, s.q, boundary_origin(f, n), 1.0, tol,
                          [](const BoundaryPoint& a, const BoundaryPoint& b) { return dist(a, b); },
                          [](const BoundaryPoint& a) { return inversion(a); });
  return o;
}

ojson echo_isometry(const IsoSample& s) {
  ojson j;
  if (s.oct) {
    j["p"] = encode_oct_point(s.op);
    j["q"] = encode_oct_point(s.oq);
  } else {
    j["p"] = encode_boundary_point(s.p);
    j["q"] = encode_boundary_point(s.q);
  }
  j["motion"] = encode_motion(s.iso);
  j["delta"] = s.delta;
  return j;
}

// ------------------------------------------------------------- fundamental --

struct QuadSample {
  bool oct = false;
  Quadruple q{};
  OctQuadruple oq{};
};

QuadSample gen_quad(const CampaignConfig& cfg, Suite suite, Field f, int n, std::uint64_t i) {
  Rng rng = cell_rng(cfg, suite, f, n, i);
  QuadSample s;
  s.oct = f == Field::O;
  if (s.oct)
    s.oq = random_oct_quadruple(rng);
  else
    s.q = random_quadruple(f, n, rng);
  return s;
}

Outcome eval_fundamental(const QuadSample& s, int n, double tol) {
  Outcome o;
  if (s.oct) {
    const OctCrossPair x = oct_cross_pair(s.oq);
    const double scale = std::max(1.0, x.X1 + x.X2);
    const double r = oct_inequality_residual(x) / (scale * scale);
    fold(o, std::max(0.0, -r), tol);
    return o;
  }
  const CrossRatioTriple t = triple(s.q);
  const FundamentalResiduals fr = fundamental_residuals(t);
  const double m1 = modulus(t.X1);
  const double m3 = modulus(t.X3);
  const double m2 = modulus(t.X2);
  // r1 and r2 are differences of products of cross-ratio moduli, so the
  // tolerance must act on the residual relative to the size of those terms.
  const double s1 = std::max({1.0, m2, m1 * m3});
  const double s2 = std::max({1.0, m1 * m1 * std::max(1.0, m3), m2 * m2});
  fold(o, std::abs(fr.r1) / s1, tol);
  if (n == 2)
    fold(o, std::abs(fr.r2) / s2, 10.0 * tol);
  else
    fold(o, std::max(0.0, -fr.r2) / s2, tol);
  const auto sym = symmetry_residuals(s.q);
  const std::array<double, 12> scale{
      std::max(1.0, m1),       std::max(1.0, m1),       std::max(1.0, m1),       std::max(1.0, m1),
      std::max(1.0, m1),       std::max(1.0, m1),       std::max(1.0, 1.0 / m1), std::max(1.0, 1.0 / m2),
      std::max(1.0, 1.0 / m3), std::max(1.0, 1.0 / m3), std::max(1.0, m3),       std::max(1.0, m3)};
  for (int k = 0; k < 12; ++k)
    fold(o, std::abs(sym[static_cast<std::size_t>(k)]) / scale[static_cast<std::size_t>(k)], tol);
  return o;
}

ojson echo_quad(const QuadSample& s) {
  return s.oct ? encode_quadruple(s.oq) : encode_quadruple(s.q);
}

// ----------------------------------------------------------------- ptolemy --

Outcome eval_ptolemy(const QuadSample& s, double tol) {
  const RootCrossPair r = s.oct ? root_cross_pair(s.oq) : root_cross_pair(s.q);
  const auto nr = normalized_ptolemy_residuals(r);
  const double mn = *std::min_element(nr.begin(), nr.end());
  Outcome o;
  o.residual = std::max(0.0, -mn);
  o.violation = mn < -tol;
  return o;
}

// ----------------------------------------------------------------- rcircle --

struct RcircleSample {
  bool oct = false;
  RCircle circle{Motion{Field::R, 2, {}}};
  std::array<double, 4> params{};
  std::array<BoundaryPoint, 4> pts{};
  std::array<OctPoint, 4> opts{};
};

RcircleSample gen_rcircle(const CampaignConfig& cfg, Field f, int n, std::uint64_t i) {
  Rng rng = cell_rng(cfg, Suite::rcircle, f, n, i);
  RcircleSample s;
  s.oct = f == Field::O;
  for (int attempt = 0; attempt < 500; ++attempt) {
    const std::uint64_t mseed = rng.next();
    const int len = static_cast<int>(rng.below(7));
    s.circle = RCircle{random_motion(f, s.oct ? 2 : n, mseed, len)};
    s.params = random_rcircle_params(rng);
    if (rng.uniform() < 0.1) s.params[rng.below(4)] = std::numeric_limits<double>::infinity();
    double coord = 1.0;
    double min_d = std::numeric_limits<double>::infinity();
    if (s.oct) {
      for (int k = 0; k < 4; ++k) s.opts[static_cast<std::size_t>(k)] = oct_rcircle_point(s.circle, s.params[static_cast<std::size_t>(k)]);
      for (int a = 0; a < 4; ++a) {
        if (!s.opts[static_cast<std::size_t>(a)].infinite) coord = std::max(coord, point_scale(s.opts[static_cast<std::size_t>(a)]));
        for (int b = a + 1; b < 4; ++b)
          min_d = std::min(min_d, oct_dist(s.opts[static_cast<std::size_t>(a)], s.opts[static_cast<std::size_t>(b)]));
      }
    } else {
      for (int k = 0; k < 4; ++k) s.pts[static_cast<std::size_t>(k)] = rcircle_point(s.circle, s.params[static_cast<std::size_t>(k)]);
      for (int a = 0; a < 4; ++a) {
        if (!s.pts[static_cast<std::size_t>(a)].infinite) coord = std::max(coord, point_scale(s.pts[static_cast<std::size_t>(a)]));
        for (int b = a + 1; b < 4; ++b)
          min_d = std::min(min_d, dist(s.pts[static_cast<std::size_t>(a)], s.pts[static_cast<std::size_t>(b)]));
      }
    }
    if (min_d >= 1e-3 * coord) return s;
  }
  throw std::runtime_error("could not sample a well-conditioned R-circle quadruple");
}

Outcome eval_rcircle(const RcircleSample& s, double tol) {
  const Separation sep = separation(s.params[0], s.params[1], s.params[2], s.params[3]);
  const int pred = static_cast<int>(equality_case_for(sep)) - static_cast<int>(Verdict::equality_case_1);
  const RootCrossPair r = s.oct ? root_cross_pair(make_oct_quadruple(s.opts[0], s.opts[1], s.opts[2], s.opts[3]))
                                : root_cross_pair(make_quadruple(s.pts[0], s.pts[1], s.pts[2], s.pts[3]));
  const auto nr = normalized_ptolemy_residuals(r);
  const double norm = std::max(1.0, r.rX1 + r.rX2);
  Outcome o;
  o.residual = std::abs(nr[static_cast<std::size_t>(pred)]) / norm;
  o.violation = o.residual > tol;
  for (int k = 0; k < 3; ++k) {
    if (k == pred) continue;
    if (nr[static_cast<std::size_t>(k)] / norm < 1e-3) o.violation = true;
  }
  return o;
}

ojson echo_rcircle(const RcircleSample& s) {
  ojson j;
  j["motion"] = encode_motion(s.circle.motion);
  ojson params = ojson::array();
  for (double t : s.params) params.push_back(json_real(t));
  j["params"] = std::move(params);
  j["separation"] = std::string(separation_name(separation(s.params[0], s.params[1], s.params[2], s.params[3])));
  return j;
}

// ------------------------------------------------------------------ runner --

struct Best {
  double residual = -1.0;
  std::int64_t index = -1;
};

template <typename GenFn, typename EvalFn, typename EchoFn>
CampaignReport run_cell(Suite suite, Field f, int rep_n, const CampaignConfig& cfg, GenFn gen, EvalFn eval,
                        EchoFn echo) {
  const std::int64_t n_samples = cfg.samples;
  const int t_count = static_cast<int>(std::clamp<std::int64_t>(cfg.threads, 1, std::max<std::int64_t>(1, n_samples)));
  std::vector<std::int64_t> vio(static_cast<std::size_t>(t_count), 0);
  std::vector<Best> best(static_cast<std::size_t>(t_count));
  auto work = [&](int t) {
    const std::int64_t lo = n_samples * t / t_count;
    const std::int64_t hi = n_samples * (t + 1) / t_count;
    for (std::int64_t i = lo; i < hi; ++i) {
      const Outcome out = eval(gen(static_cast<std::uint64_t>(i)));
      if (out.violation) ++vio[static_cast<std::size_t>(t)];
      Best& b = best[static_cast<std::size_t>(t)];
      if (b.index < 0 || out.residual > b.residual) b = {out.residual, i};
    }
  };
  if (t_count == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(t_count));
    for (int t = 0; t < t_count; ++t) pool.emplace_back(work, t);
  }
  CampaignReport r;
  r.suite = suite;
  r.field = f;
  r.n = rep_n;
  r.samples = n_samples;
  r.seed = cfg.seed;
  Best overall;
  for (int t = 0; t < t_count; ++t) {
    r.violations += vio[static_cast<std::size_t>(t)];
    const Best& b = best[static_cast<std::size_t>(t)];
    if (b.index >= 0 && (overall.index < 0 || b.residual > overall.residual)) overall = b;
  }
  if (overall.index >= 0) {
    r.max_abs_residual = overall.residual;
    r.worst_input = echo(gen(static_cast<std::uint64_t>(overall.index)));
  } else {
    r.worst_input = ojson::object();
  }
  return r;
}

double default_tol(Suite s) {
  switch (s) {
    case Suite::algebra:
      return 1e-11;
    case Suite::metric:
      return 1e-10;
    case Suite::rcircle:
      return 1e-7;
    default:
      return 1e-9;
  }
}

CampaignReport run_suite_cell(const CampaignConfig& cfg, Suite s, Field f) {
  const int n = (f == Field::O) ? 2 : cfg.n;
  const double tol = cfg.tol.value_or(default_tol(s));
  switch (s) {
    case Suite::algebra:
      return run_cell(s, f, 0, cfg, [&](std::uint64_t i) { return gen_algebra(cfg, f, i); },
                      [&](const AlgebraSample& in) { return eval_algebra(in, tol); }, echo_algebra);
    case Suite::metric:
      return run_cell(s, f, n, cfg, [&](std::uint64_t i) { return gen_metric(cfg, f, n, i); },
                      [&](const MetricSample& in) { return eval_metric(in, f, n, tol); }, echo_metric);
    case Suite::isometry:
      return run_cell(s, f, n, cfg, [&](std::uint64_t i) { return gen_isometry(cfg, f, n, i); },
                      [&](const IsoSample& in) { return eval_isometry(in, f, n, tol); }, echo_isometry);
    case Suite::fundamental:
      return run_cell(s, f, n, cfg, [&](std::uint64_t i) { return gen_quad(cfg, s, f, n, i); },
                      [&](const QuadSample& in) { return eval_fundamental(in, n, tol); }, echo_quad);
    case Suite::ptolemy:
      return run_cell(s, f, n, cfg, [&](std::uint64_t i) { return gen_quad(cfg, s, f, n, i); },
                      [&](const QuadSample& in) { return eval_ptolemy(in, tol); }, echo_quad);
    default:
      return run_cell(s, f, n, cfg, [&](std::uint64_t i) { return gen_rcircle(cfg, f, n, i); },
                      [&](const RcircleSample& in) { return eval_rcircle(in, tol); }, echo_rcircle);
  }
}

}  // namespace

ojson report_to_json(const CampaignReport& r) {
  ojson j;
  j["suite"] = std::string(suite_name(r.suite));
  j["field"] = field_name(r.field);
  j["n"] = r.n;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["violations"] = r.violations;
  j["max_abs_residual"] = json_real(r.max_abs_residual);
  j["worst_input"] = r.worst_input;
  return j;
}

std::vector<CampaignReport> verify_campaign(const CampaignConfig& cfg) {
  if (cfg.samples < 0) throw std::invalid_argument("samples must be nonnegative");
  if (cfg.threads < 1) throw std::invalid_argument("threads must be positive");
  if (cfg.n < 2) throw std::invalid_argument("n must be at least 2");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const std::vector<Suite> suites = cfg.suites.empty()
                                        ? std::vector<Suite>{Suite::algebra, Suite::metric, Suite::isometry,
                                                             Suite::fundamental, Suite::ptolemy, Suite::rcircle}
                                        : cfg.suites;
  const std::vector<Field> fields =
      cfg.fields.empty() ? std::vector<Field>{Field::R, Field::C, Field::H, Field::O} : cfg.fields;
  std::vector<CampaignReport> out;
  out.reserve(suites.size() * fields.size());
  for (Suite s : suites)
    for (Field f : fields) out.push_back(run_suite_cell(cfg, s, f));
  return out;
}

}  // namespace ptolemy
