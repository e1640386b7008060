#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "lexseg/lexseg.hpp"

namespace lexseg::cli {

using nlohmann::json;

json classification_json(const LexSegmentIdeal& ideal,
                         const ResolutionClass& cls);
json certificate_json(const QuotientCertificate& cert, bool with_witnesses);
json binomial_json(const ToricBinomial& b);
json exchange_json(const ExchangeReport& report);

struct ReesSummary {
  int gb_size = 0;
  bool quadratic = false;
  bool verified = false;

  bool operator==(const ReesSummary&) const = default;
};

/// One sweep result. Serializes deterministically: object keys are sorted
/// and monomials use the canonical comma-separated exponent form.
struct SweepRecord {
  int n = 0;
  int d = 0;
  std::string u;
  std::string v;
  std::string verdict;
  bool completely = false;
  int completeness_iters = 0;
  std::map<int, bool> power_status;
  // "refuted-all-orders", "not-refuted", or empty for positive verdicts.
  std::string negative_search;
  bool closure_probes_ok = true;
  std::optional<ReesSummary> rees;
  std::int64_t elapsed_us = 0;

  bool operator==(const SweepRecord&) const = default;
};

json to_json(const SweepRecord& record);
SweepRecord sweep_record_from_json(const json& j);

}  // namespace lexseg::cli
