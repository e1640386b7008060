#include "report.hpp"

namespace lexseg::cli {

json classification_json(const LexSegmentIdeal& ideal,
                         const ResolutionClass& cls) {
  json witness;
  if (cls.case_a) witness["a"] = *cls.case_a;
  if (cls.boundary_w) witness["w"] = cls.boundary_w->csv();
  if (cls.gap_l) witness["l"] = *cls.gap_l;
  return json{{"n", ideal.vars()},
              {"d", ideal.degree()},
              {"u", ideal.u.csv()},
              {"v", ideal.v.csv()},
              {"verdict", verdict_name(cls.verdict)},
              {"completely", cls.completely},
              {"shadow_iterations", cls.shadow_iterations},
              {"witness", witness},
              {"generator_count", ideal.generators.size()}};
}

json certificate_json(const QuotientCertificate& cert, bool with_witnesses) {
  json out{{"ok", cert.ok}};
  if (cert.failure)
    out["failure"] = json{{"i", cert.failure->first},
                          {"j", cert.failure->second}};
  else
    out["failure"] = nullptr;
  if (with_witnesses) {
    json ws = json::array();
    for (const auto& w : cert.witnesses)
      ws.push_back(json{{"i", w.i}, {"j", w.j}, {"k", w.k}, {"q", w.q}});
    out["witnesses"] = std::move(ws);
  }
  return out;
}

namespace {

json tpart_json(const TMonomial& t) {
  json rows = json::array();
  for (const auto& f : t) rows.push_back(f.row);
  return rows;
}

}  // namespace

json binomial_json(const ToricBinomial& b) {
  const auto deg = b.bidegree();
  return json{{"xlead", b.lead.xpart.csv()},
              {"tlead", tpart_json(b.lead.tpart)},
              {"xtail", b.tail.xpart.csv()},
              {"ttail", tpart_json(b.tail.tpart)},
              {"bidegree", json::array({deg.first, deg.second})}};
}

json exchange_json(const ExchangeReport& report) {
  json out{{"satisfied", report.satisfied}};
  if (report.counterexample) {
    json u = json::array();
    for (const auto& m : report.counterexample->u_factors) u.push_back(m.csv());
    json v = json::array();
    for (const auto& m : report.counterexample->v_factors) v.push_back(m.csv());
    out["counterexample"] = json{{"u_factors", u}, {"v_factors", v}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json to_json(const SweepRecord& record) {
  json power = json::object();
  for (const auto& [N, ok] : record.power_status)
    power[std::to_string(N)] = ok;
  json rees = nullptr;
  if (record.rees)
    rees = json{{"gb_size", record.rees->gb_size},
                {"quadratic", record.rees->quadratic},
                {"verified", record.rees->verified}};
  return json{{"n", record.n},
              {"d", record.d},
              {"u", record.u},
              {"v", record.v},
              {"verdict", record.verdict},
              {"completely", record.completely},
              {"completeness_iters", record.completeness_iters},
              {"power_status", power},
              {"negative_search", record.negative_search},
              {"closure_probes_ok", record.closure_probes_ok},
              {"rees", rees},
              {"elapsed_us", record.elapsed_us}};
}

SweepRecord sweep_record_from_json(const json& j) {
  SweepRecord out;
  out.n = j.at("n").get<int>();
  out.d = j.at("d").get<int>();
  out.u = j.at("u").get<std::string>();
  out.v = j.at("v").get<std::string>();
  out.verdict = j.at("verdict").get<std::string>();
  out.completely = j.at("completely").get<bool>();
  out.completeness_iters = j.at("completeness_iters").get<int>();
  for (const auto& [key, value] : j.at("power_status").items())
    out.power_status[std::stoi(key)] = value.get<bool>();
  out.negative_search = j.at("negative_search").get<std::string>();
  out.closure_probes_ok = j.at("closure_probes_ok").get<bool>();
  if (!j.at("rees").is_null()) {
    ReesSummary r;
    r.gb_size = j.at("rees").at("gb_size").get<int>();
    r.quadratic = j.at("rees").at("quadratic").get<bool>();
    r.verified = j.at("rees").at("verified").get<bool>();
    out.rees = r;
  }
  out.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
  return out;
}

}  // namespace lexseg::cli
