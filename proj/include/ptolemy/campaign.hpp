#pragma once

#include <optional>
#include <vector>

#include "ptolemy/json_io.hpp"
#include "ptolemy/ptolemy.hpp"

namespace ptolemy {

enum class Suite : std::uint8_t { algebra, metric, isometry, fundamental, ptolemy, rcircle };

[[nodiscard]] std::string_view suite_name(Suite s);
[[nodiscard]] Suite parse_suite(std::string_view s);

struct CampaignConfig {
  std::vector<Suite> suites;  // empty means all six
  std::vector<Field> fields;  // empty means R, C, H, O
  int n = 3;                  // associative fields only; O always runs at n = 2
  std::int64_t samples = 10000;
  std::uint64_t seed = 0;
  std::optional<double> tol;  // overrides the per-suite default when set
  int threads = 1;
};

struct CampaignReport {
  Suite suite = Suite::algebra;
  Field field = Field::R;
  int n = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t violations = 0;
  double max_abs_residual = 0.0;
  ojson worst_input;  // regenerated input of the worst-residual sample
};

[[nodiscard]] ojson report_to_json(const CampaignReport& r);

// Runs every (suite, field) cell of the config. The result depends only on
// (suites, fields, n, samples, seed, tol); the thread count changes nothing.
[[nodiscard]] std::vector<CampaignReport> verify_campaign(const CampaignConfig& cfg);

}  // namespace ptolemy
