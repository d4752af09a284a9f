#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptolemy/campaign.hpp"

namespace {

using namespace ptolemy;

enum class LogLevel : int { error = 0, warn = 1, info = 2, debug = 3 };

LogLevel g_log = LogLevel::warn;

void init_log() {
  const char* env = std::getenv("PTOLEMY_LOG");
  if (env == nullptr) return;
  const std::string v(env);
  if (v == "error")
    g_log = LogLevel::error;
  else if (v == "warn")
    g_log = LogLevel::warn;
  else if (v == "info")
    g_log = LogLevel::info;
  else if (v == "debug")
    g_log = LogLevel::debug;
  else
    std::cerr << "[warn] unknown PTOLEMY_LOG level '" << v << "', using warn\n";
}

void log_line(LogLevel lv, const std::string& msg) {
  static constexpr const char* names[] = {"error", "warn", "info", "debug"};
  if (static_cast<int>(lv) <= static_cast<int>(g_log))
    std::cerr << "[" << names[static_cast<int>(lv)] << "] " << msg << "\n";
}

ojson read_input_doc(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return ojson::parse(text);
}

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

double parse_real_token(const std::string& tok) {
  if (tok == "inf") return std::numeric_limits<double>::infinity();
  if (tok == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double x = std::stod(tok, &used);
  if (used != tok.size()) throw std::invalid_argument("bad numeric token '" + tok + "'");
  return x;
}

ojson scalar_out(const Scalar& s) {
  if (s.field == Field::R) return s.c[0];
  return encode_scalar(s);
}

int run_cross_ratio(const std::string& input) {
  const AnyQuadruple any = decode_quadruple(read_input_doc(input));
  ojson out;
  if (std::holds_alternative<Quadruple>(any)) {
    const Quadruple& q = std::get<Quadruple>(any);
    const CrossRatioTriple t = triple(q);
    const FundamentalResiduals fr = fundamental_residuals(t);
    out["field"] = field_name(q.p[0].field);
    out["n"] = q.p[0].n;
    out["X1"] = scalar_out(t.X1);
    out["X2"] = scalar_out(t.X2);
    out["X3"] = scalar_out(t.X3);
    out["r1"] = fr.r1;
    out["r2"] = fr.r2;
  } else {
    const OctQuadruple& q = std::get<OctQuadruple>(any);
    const OctCrossPair x = oct_cross_pair(q);
    out["field"] = "O";
    out["n"] = 2;
    out["X1"] = x.X1;
    out["X2"] = x.X2;
    out["residual"] = oct_inequality_residual(x);
  }
  emit(out);
  return 0;
}

ojson report_out(Field f, int n, const PtolemyReport& rep) {
  ojson out;
  out["field"] = field_name(f);
  out["n"] = n;
  ojson products = ojson::array();
  for (double p : rep.products) products.push_back(json_real(p));
  out["products"] = std::move(products);
  ojson residuals = ojson::array();
  for (double r : rep.residuals) residuals.push_back(json_real(r));
  out["residuals"] = std::move(residuals);
  out["verdict"] = std::string(verdict_name(rep.verdict));
  return out;
}

int run_check(const std::string& input, double tol) {
  const AnyQuadruple any = decode_quadruple(read_input_doc(input));
  PtolemyReport rep;
  ojson out;
  if (std::holds_alternative<Quadruple>(any)) {
    const Quadruple& q = std::get<Quadruple>(any);
    rep = ptolemy_check(q, tol);
    out = report_out(q.p[0].field, q.p[0].n, rep);
  } else {
    rep = ptolemy_check(std::get<OctQuadruple>(any), tol);
    out = report_out(Field::O, 2, rep);
  }
  emit(out);
  return rep.verdict == Verdict::violation ? 1 : 0;
}

int run_rcircle(const std::string& field_s, int n, const std::string& params_s, double tol, bool seeded,
                std::uint64_t seed, int word_length) {
  const Field f = parse_field(field_s);
  const auto toks = split_csv(params_s);
  if (toks.size() != 4) throw std::invalid_argument("--params needs four comma-separated values");
  std::array<double, 4> t{};
  for (int i = 0; i < 4; ++i) t[static_cast<std::size_t>(i)] = parse_real_token(toks[static_cast<std::size_t>(i)]);
  const int eff_n = (f == Field::O) ? 2 : n;
  RCircle circle = standard_rcircle(f, eff_n);
  if (seeded) circle.motion = random_motion(f, eff_n, seed, word_length);
  log_line(LogLevel::info, "rcircle field=" + field_name(f) + " word length " + std::to_string(circle.motion.word.size()));

  ojson out;
  out["field"] = field_name(f);
  out["n"] = eff_n;
  ojson params = ojson::array();
  for (double x : t) params.push_back(json_real(x));
  out["params"] = std::move(params);
  const Separation sep = separation(t[0], t[1], t[2], t[3]);
  out["separation"] = std::string(separation_name(sep));
  out["predicted_equality"] = std::string(verdict_name(equality_case_for(sep)));

  PtolemyReport rep;
  ojson points = ojson::array();
  ojson dists = ojson::array();
  if (f == Field::O) {
    std::array<OctPoint, 4> p;
    for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = oct_rcircle_point(circle, t[static_cast<std::size_t>(i)]);
    for (const auto& pt : p) points.push_back(encode_oct_point(pt));
    for (int i = 0; i < 4; ++i) {
      ojson row = ojson::array();
      for (int j = 0; j < 4; ++j)
        row.push_back(json_real(oct_dist(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)])));
      dists.push_back(std::move(row));
    }
    rep = ptolemy_check(make_oct_quadruple(p[0], p[1], p[2], p[3]), tol);
  } else {
    std::array<BoundaryPoint, 4> p;
    for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = rcircle_point(circle, t[static_cast<std::size_t>(i)]);
    for (const auto& pt : p) points.push_back(encode_boundary_point(pt));
    for (int i = 0; i < 4; ++i) {
      ojson row = ojson::array();
      for (int j = 0; j < 4; ++j)
        row.push_back(json_real(dist(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)])));
      dists.push_back(std::move(row));
    }
    rep = ptolemy_check(make_quadruple(p[0], p[1], p[2], p[3]), tol);
  }
  out["points"] = std::move(points);
  out["distances"] = std::move(dists);
  ojson check = ojson::object();
  ojson products = ojson::array();
  for (double p : rep.products) products.push_back(json_real(p));
  check["products"] = std::move(products);
  ojson residuals = ojson::array();
  for (double r : rep.residuals) residuals.push_back(json_real(r));
  check["residuals"] = std::move(residuals);
  check["verdict"] = std::string(verdict_name(rep.verdict));
  out["check"] = std::move(check);
  emit(out);
  return rep.verdict == Verdict::violation ? 1 : 0;
}

int run_verify(const std::string& suites_s, const std::string& fields_s, int n, std::int64_t samples,
               std::uint64_t seed, bool has_tol, double tol, int threads) {
  CampaignConfig cfg;
  cfg.n = n;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.threads = threads;
  if (has_tol) cfg.tol = tol;
  if (suites_s != "all")
    for (const std::string& s : split_csv(suites_s)) cfg.suites.push_back(parse_suite(s));
  for (const std::string& s : split_csv(fields_s)) cfg.fields.push_back(parse_field(s));
  log_line(LogLevel::info, "verify: " + std::to_string(samples) + " samples/cell, seed " + std::to_string(seed));
  const std::vector<CampaignReport> reports = verify_campaign(cfg);
  std::int64_t total = 0;
  ojson arr = ojson::array();
  for (const CampaignReport& r : reports) {
    total += r.violations;
    log_line(LogLevel::debug, std::string(suite_name(r.suite)) + "/" + field_name(r.field) + ": " +
                                  std::to_string(r.violations) + " violations");
    arr.push_back(report_to_json(r));
  }
  ojson out;
  out["reports"] = std::move(arr);
  out["total_violations"] = total;
  emit(out);
  return total > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  init_log();
  CLI::App app{"Division-algebra boundary geometry: Heisenberg metrics, cross-ratios, Ptolemaean checks"};
  app.require_subcommand(1);

  std::string input = "-";
  double tol = 1e-9;
  std::string field_s = "R";
  std::string fields_s = "R,C,H,O";
  std::string suites_s = "all";
  std::string params_s;
  int n = 3;
  std::int64_t samples = 10000;
  std::uint64_t seed = 0;
  int threads = 1;
  int word_length = 4;

  CLI::App* cr = app.add_subcommand("cross-ratio", "Cross-ratios and fundamental-identity residuals of a quadruple");
  cr->add_option("--input", input, "JSON quadruple file, or - for stdin");

  CLI::App* chk = app.add_subcommand("check", "Ptolemaean inequality check of a quadruple");
  chk->add_option("--input", input, "JSON quadruple file, or - for stdin");
  chk->add_option("--tol", tol, "equality/violation tolerance");

  CLI::App* rc = app.add_subcommand("rcircle", "Sample an R-circle at four parameters and check the equality case");
  rc->add_option("--field", field_s, "R, C, H, or O")->required();
  rc->add_option("--n", n, "boundary dimension parameter (associative fields)");
  rc->add_option("--params", params_s, "four comma-separated parameters; inf allowed")->required();
  rc->add_option("--tol", tol, "equality/violation tolerance");
  rc->add_option("--seed", seed, "move the standard circle by a seeded random motion");
  rc->add_option("--word-length", word_length, "length of the seeded motion word");

  CLI::App* ver = app.add_subcommand("verify", "Run randomized verification suites");
  ver->add_option("--suite", suites_s, "all or comma list: algebra,metric,isometry,fundamental,ptolemy,rcircle");
  ver->add_option("--field", fields_s, "comma list of fields");
  ver->add_option("--n", n, "boundary dimension parameter (associative fields)");
  ver->add_option("--samples", samples, "samples per (suite, field) cell");
  ver->add_option("--seed", seed, "campaign seed");
  ver->add_option("--tol", tol, "override the per-suite tolerance");
  ver->add_option("--threads", threads, "worker threads (result is thread-count independent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cr->parsed()) return run_cross_ratio(input);
    if (chk->parsed()) return run_check(input, tol);
    if (rc->parsed()) return run_rcircle(field_s, n, params_s, tol, rc->count("--seed") > 0, seed, word_length);
    return run_verify(suites_s, fields_s, n, samples, seed, ver->count("--tol") > 0, tol, threads);
  } catch (const std::exception& e) {
    log_line(LogLevel::error, e.what());
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
