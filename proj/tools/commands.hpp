#pragma once

#include <cstdint>
#include <string>

#include "report.hpp"

namespace lexseg::cli {

inline constexpr int kExitOk = 0;
// A requested certification or verification reported a genuine failure.
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

struct SegmentArgs {
  int n = 0;
  int d = 0;
  std::string u;
  std::string v;
};

/// Validates the common --n/--d/--u/--v block and builds the segment.
LexSegmentIdeal parse_segment(const SegmentArgs& args);

int cmd_classify(const SegmentArgs& seg, int shadow_iters, bool as_json);
int cmd_tableau_support(int n, int d, const std::string& support_csv,
                        bool as_json);
int cmd_tableau_check(int n, const std::string& rows_text, bool as_json);
int cmd_power_quotients(const SegmentArgs& seg, int power, bool as_json);
int cmd_rees(const SegmentArgs& seg, const std::string& sigma_name,
             bool verify, bool as_json);
int cmd_exchange(const SegmentArgs& seg, const std::string& mode, int bound,
                 const std::string& sigma_name, bool as_json);
int cmd_sweep(int n_max, int d_max, int power_max, bool as_json,
              std::uint64_t seed, int jobs, int probes);
int cmd_paper_examples(bool as_json);

/// Computes one sweep record; exposed for the sweep engine and tests.
/// Sets *discrepancy when a theorem-backed expectation fails.
SweepRecord sweep_one(const Monomial& u, const Monomial& v, int power_max,
                      std::uint64_t seed, int probes, bool* discrepancy);

}  // namespace lexseg::cli
