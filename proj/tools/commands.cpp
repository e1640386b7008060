#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace lexseg::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw ValidationError("empty entry in '" + text + "'");
    int value = 0;
    auto res = std::from_chars(tok.data() + b, tok.data() + e + 1, value);
    if (res.ec != std::errc() || res.ptr != tok.data() + e + 1)
      throw ValidationError("bad integer '" + tok + "'");
    out.push_back(value);
  }
  if (out.empty()) throw ValidationError("empty list '" + text + "'");
  return out;
}

std::string tmonomial_text(const TMonomial& t) {
  std::string out;
  for (const auto& f : t) {
    if (!out.empty()) out += "*";
    out += "T(";
    for (size_t i = 0; i < f.row.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(f.row[i]);
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

std::string mixed_text(const MixedMonomial& m) {
  std::string out;
  if (!m.xpart.is_one()) out = m.xpart.pretty();
  const std::string t = tmonomial_text(m.tpart);
  if (t != "1") {
    if (!out.empty()) out += "*";
    out += t;
  }
  return out.empty() ? "1" : out;
}

std::string binomial_text(const ToricBinomial& b) {
  return mixed_text(b.lead) + " - " + mixed_text(b.tail);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

MonomialOrder parse_sigma(const std::string& name) {
  const MonomialOrder sigma = order_from_name(name);
  if (sigma == MonomialOrder::Succ)
    throw ValidationError("sigma must be 'lex' or 'revlex-dec'");
  return sigma;
}

}  // namespace

LexSegmentIdeal parse_segment(const SegmentArgs& args) {
  if (args.n < 1) throw ValidationError("--n must be positive");
  if (args.d < 1) throw ValidationError("--d must be positive");
  const Monomial u = Monomial::from_csv(args.n, args.u);
  const Monomial v = Monomial::from_csv(args.n, args.v);
  if (u.degree() != args.d)
    throw DimensionError("--u has degree " + std::to_string(u.degree()) +
                         ", expected --d = " + std::to_string(args.d));
  if (v.degree() != args.d)
    throw DimensionError("--v has degree " + std::to_string(v.degree()) +
                         ", expected --d = " + std::to_string(args.d));
  return build_lexsegment(u, v);
}

int cmd_classify(const SegmentArgs& seg, int shadow_iters, bool as_json) {
  const LexSegmentIdeal ideal = parse_segment(seg);
  const ResolutionClass cls = classify(ideal, shadow_iters);
  if (as_json) {
    emit(classification_json(ideal, cls));
    return kExitOk;
  }
  std::cout << "L(" << ideal.u.pretty() << ", " << ideal.v.pretty() << ")  n="
            << ideal.vars() << " d=" << ideal.degree() << "  generators="
            << ideal.generators.size() << "\n";
  std::cout << "verdict: " << verdict_name(cls.verdict) << "\n";
  std::cout << "completely lexsegment: " << (cls.completely ? "yes" : "no")
            << " (checked " << cls.shadow_iterations << " shadows)\n";
  if (cls.case_a) std::cout << "witness a = " << *cls.case_a << "\n";
  if (cls.boundary_w)
    std::cout << "witness w = " << cls.boundary_w->pretty() << "\n";
  if (cls.gap_l) std::cout << "witness l = " << *cls.gap_l << "\n";
  return kExitOk;
}

int cmd_tableau_support(int n, int d, const std::string& support_csv,
                        bool as_json) {
  if (n < 1) throw ValidationError("--n must be positive");
  if (d < 1) throw ValidationError("--d must be positive");
  const Support support = parse_int_list(support_csv, ',');
  if (support.size() % static_cast<size_t>(d) != 0)
    throw ValidationError("support size " + std::to_string(support.size()) +
                          " is not a multiple of d = " + std::to_string(d));
  const int rows = static_cast<int>(support.size()) / d;
  const Tableau t = standard_tableau_from_support(n, support, rows, d);
  if (as_json) {
    json jrows = json::array();
    json jmons = json::array();
    for (int i = 0; i < t.height(); ++i) {
      jrows.push_back(t.rows[i]);
      jmons.push_back(t.row_monomial(i).csv());
    }
    emit(json{{"n", n},
              {"d", d},
              {"N", rows},
              {"rows", jrows},
              {"row_monomials", jmons}});
    return kExitOk;
  }
  for (int i = 0; i < t.height(); ++i) {
    for (int c = 0; c < t.width(); ++c) std::cout << (c ? " " : "") << t.rows[i][c];
    std::cout << "   " << t.row_monomial(i).pretty() << "\n";
  }
  return kExitOk;
}

int cmd_tableau_check(int n, const std::string& rows_text, bool as_json) {
  if (n < 1) throw ValidationError("--n must be positive");
  std::vector<Row> rows;
  std::stringstream ss(rows_text);
  std::string line;
  while (std::getline(ss, line, ';')) rows.push_back(parse_int_list(line, ','));

  bool valid = true;
  bool standard = false;
  std::string reason;
  try {
    const Tableau t = make_tableau(n, rows);
    standard = is_standard(t);
  } catch (const Error& e) {
    valid = false;
    reason = e.what();
  }
  if (as_json) {
    json out{{"valid", valid}};
    out["standard"] = valid ? json(standard) : json(nullptr);
    out["reason"] = valid ? json(nullptr) : json(reason);
    emit(out);
  } else if (!valid) {
    std::cout << "not a tableau: " << reason << "\n";
  } else {
    std::cout << (standard ? "standard tableau" : "valid tableau, not standard")
              << "\n";
  }
  return kExitOk;
}

int cmd_power_quotients(const SegmentArgs& seg, int power, bool as_json) {
  const LexSegmentIdeal ideal = parse_segment(seg);
  const ResolutionClass cls = classify(ideal);
  if (!cls.positive())
    throw DomainError("classification is " +
                      std::string(verdict_name(cls.verdict)) +
                      "; linear quotients for powers need a positive verdict");
  const auto cert = verify_power_linear_quotients(ideal, power, &cls);
  const auto gens = power_generators(ideal.generators, power);
  if (as_json) {
    json out{{"n", ideal.vars()},
             {"d", ideal.degree()},
             {"u", ideal.u.csv()},
             {"v", ideal.v.csv()},
             {"N", power},
             {"order", order_name(prescribed_order(cls))},
             {"generator_count", gens.size()},
             {"certificate", certificate_json(cert, true)}};
    emit(out);
  } else {
    std::cout << "I^" << power << " has " << gens.size()
              << " generators; linear quotients under "
              << order_name(prescribed_order(cls)) << ": "
              << (cert.ok ? "certified" : "FAILED") << "\n";
    if (cert.failure)
      std::cout << "first failure at (i=" << cert.failure->first
                << ", j=" << cert.failure->second << ")\n";
  }
  return cert.ok ? kExitOk : kExitRefuted;
}

int cmd_rees(const SegmentArgs& seg, const std::string& sigma_name,
             bool verify, bool as_json) {
  const LexSegmentIdeal ideal = parse_segment(seg);
  const MonomialOrder sigma = parse_sigma(sigma_name);
  const auto basis = rees_gb(ideal, sigma);
  const bool quadratic = koszul_certificate(basis);
  std::optional<bool> exchange_ok;
  std::optional<bool> verified;
  if (verify) {
    exchange_ok =
        check_sigma_exchange(ideal.generators, sigma, 2).satisfied;
    verified = verify_groebner(basis, sigma);
  }
  const bool warn = verify && (!*exchange_ok || !*verified);
  if (as_json) {
    json gb = json::array();
    for (const auto& b : basis) gb.push_back(binomial_json(b));
    emit(json{{"n", ideal.vars()},
              {"d", ideal.degree()},
              {"u", ideal.u.csv()},
              {"v", ideal.v.csv()},
              {"sigma", sigma_name},
              {"gb", gb},
              {"gb_size", basis.size()},
              {"quadratic", quadratic},
              {"sigma_exchange_ok",
               exchange_ok ? json(*exchange_ok) : json(nullptr)},
              {"verified", verified ? json(*verified) : json(nullptr)},
              {"warning", warn ? json("verification failed") : json(nullptr)}});
  } else {
    int fiber = 0;
    int linear = 0;
    for (const auto& b : basis)
      (b.bidegree().second == 2 ? fiber : linear) += 1;
    std::cout << "Rees basis for L(" << ideal.u.pretty() << ", "
              << ideal.v.pretty() << ") under sigma=" << sigma_name << ": "
              << basis.size() << " binomials (" << fiber << " fiber, "
              << linear << " linear), quadratic="
              << (quadratic ? "yes" : "no") << "\n";
    for (const auto& b : basis) std::cout << "  " << binomial_text(b) << "\n";
    if (exchange_ok)
      std::cout << "sigma-exchange at bound 2: "
                << (*exchange_ok ? "satisfied" : "FAILED") << "\n";
    if (verified)
      std::cout << "Buchberger verification: "
                << (*verified ? "passed" : "FAILED") << "\n";
    if (warn) std::cerr << "warning: verification failed\n";
  }
  return warn ? kExitRefuted : kExitOk;
}

int cmd_exchange(const SegmentArgs& seg, const std::string& mode, int bound,
                 const std::string& sigma_name, bool as_json) {
  const LexSegmentIdeal ideal = parse_segment(seg);
  ExchangeReport report;
  if (mode == "l") {
    report = check_l_exchange(ideal.generators, bound);
  } else if (mode == "sigma") {
    report = check_sigma_exchange(ideal.generators, parse_sigma(sigma_name),
                                  bound);
  } else {
    throw ValidationError("--mode must be 'l' or 'sigma'");
  }
  if (as_json) {
    json out = exchange_json(report);
    out["mode"] = mode;
    out["bound"] = bound;
    if (mode == "sigma") out["sigma"] = sigma_name;
    emit(out);
  } else if (report.satisfied) {
    std::cout << mode << "-exchange property satisfied up to T-degree "
              << bound << "\n";
  } else {
    std::cout << mode << "-exchange property FAILS; counterexample:\n  u: ";
    for (const auto& m : report.counterexample->u_factors)
      std::cout << m.pretty() << " ";
    std::cout << "\n  v: ";
    for (const auto& m : report.counterexample->v_factors)
      std::cout << m.pretty() << " ";
    std::cout << "\n";
  }
  return report.satisfied ? kExitOk : kExitRefuted;
}

SweepRecord sweep_one(const Monomial& u, const Monomial& v, int power_max,
                      std::uint64_t seed, int probes, bool* discrepancy) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.n = u.vars();
  rec.d = u.degree();
  rec.u = u.csv();
  rec.v = v.csv();

  const LexSegmentIdeal ideal = build_lexsegment(u, v);
  const ResolutionClass cls = classify(ideal);
  rec.verdict = verdict_name(cls.verdict);
  rec.completely = cls.completely;
  rec.completeness_iters = cls.shadow_iterations;

  if (cls.positive()) {
    for (int N = 1; N <= power_max; ++N) {
      const auto cert = verify_power_linear_quotients(ideal, N, &cls);
      rec.power_status[N] = cert.ok;
      if (!cert.ok) *discrepancy = true;
    }
    if (cls.verdict == Verdict::NonCompletely) {
      const auto basis = rees_gb(ideal, MonomialOrder::SigmaRevLexDec);
      ReesSummary summary;
      summary.gb_size = static_cast<int>(basis.size());
      summary.quadratic = koszul_certificate(basis);
      summary.verified =
          verify_groebner(basis, MonomialOrder::SigmaRevLexDec);
      if (!summary.quadratic || !summary.verified) *discrepancy = true;
      rec.rees = summary;
    }
    // Randomized closure probes: standard representations of products of
    // segment elements must stay inside the segment.
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull);
    std::uniform_int_distribution<size_t> pick(0, ideal.generators.size() - 1);
    std::uniform_int_distribution<int> length(1, 3);
    for (int p = 0; p < probes; ++p) {
      std::vector<Monomial> factors;
      const int len = length(rng);
      for (int t = 0; t < len; ++t)
        factors.push_back(ideal.generators[pick(rng)]);
      if (!segment_closure_check(factors, ideal)) {
        rec.closure_probes_ok = false;
        *discrepancy = true;
      }
    }
  } else if (cls.verdict == Verdict::NoLinearResolution) {
    if (ideal.generators.size() <= 7) {
      std::vector<int> idx(ideal.generators.size());
      std::iota(idx.begin(), idx.end(), 0);
      bool some_order_works = false;
      do {
        std::vector<Monomial> permuted;
        permuted.reserve(idx.size());
        for (int i : idx) permuted.push_back(ideal.generators[i]);
        if (linear_quotients_ok(permuted)) {
          some_order_works = true;
          break;
        }
      } while (std::next_permutation(idx.begin(), idx.end()));
      if (some_order_works) {
        rec.negative_search = "order-found";
        *discrepancy = true;
      } else {
        rec.negative_search = "refuted-all-orders";
      }
    } else {
      rec.negative_search = "not-refuted";
    }
  }

  rec.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rec;
}

int cmd_sweep(int n_max, int d_max, int power_max, bool as_json,
              std::uint64_t seed, int jobs, int probes) {
  if (n_max < 1 || d_max < 2 || power_max < 1)
    throw ValidationError("sweep needs --n-max >= 1, --d-max >= 2, --N-max >= 1");

  struct Input {
    Monomial u, v;
  };
  std::vector<Input> inputs;
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 2; d <= d_max; ++d) {
      const auto mons = monomials_of_degree(n, d);
      for (size_t i = 0; i < mons.size(); ++i) {
        if (mons[i].exponent(1) == 0) continue;
        for (size_t j = i; j < mons.size(); ++j)
          inputs.push_back(Input{mons[i], mons[j]});
      }
    }
  }

  std::vector<SweepRecord> records(inputs.size());
  std::vector<char> flags(inputs.size(), 0);
  std::atomic<size_t> next{0};
  if (jobs < 1)
    jobs = static_cast<int>(
        std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(std::max<size_t>(inputs.size(), 1)));

  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= inputs.size()) break;
      bool bad = false;
      records[i] = sweep_one(inputs[i].u, inputs[i].v, power_max,
                             seed + i, probes, &bad);
      flags[i] = bad ? 1 : 0;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool discrepancy = false;
  for (size_t i = 0; i < records.size(); ++i) {
    if (flags[i]) discrepancy = true;
    if (as_json) {
      emit(to_json(records[i]));
    } else {
      const auto& r = records[i];
      std::cout << "n=" << r.n << " d=" << r.d << " u=" << r.u << " v=" << r.v
                << "  " << r.verdict;
      if (!r.power_status.empty()) {
        std::cout << "  powers:";
        for (const auto& [N, ok] : r.power_status)
          std::cout << " " << N << (ok ? "+" : "-");
      }
      if (!r.negative_search.empty()) std::cout << "  " << r.negative_search;
      if (r.rees)
        std::cout << "  rees(size=" << r.rees->gb_size
                  << (r.rees->verified ? ",verified" : ",UNVERIFIED") << ")";
      std::cout << "\n";
    }
  }
  if (discrepancy) std::cerr << "sweep found discrepancies\n";
  return discrepancy ? kExitRefuted : kExitOk;
}

int cmd_paper_examples(bool as_json) {
  bool all_ok = true;
  json report;

  // Worked standard tableau, N=5, d=3, n=8.
  {
    const Support support{1, 1, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6, 6, 7, 8};
    const std::vector<Row> expected{
        {1, 6, 7}, {1, 6, 8}, {2, 5, 6}, {3, 4, 4}, {3, 4, 5}};
    const Tableau t = standard_tableau_from_support(8, support, 5, 3);
    const bool ok = t.rows == expected;
    all_ok = all_ok && ok;
    report["tableau"] = json{{"ok", ok}};
    if (!as_json) {
      std::cout << "[1] standard tableau of {1,1,2,3,3,4,4,4,5,5,6,6,6,7,8}: "
                << (ok ? "matches" : "MISMATCH") << "\n";
      for (const auto& row : t.rows) {
        std::cout << "      ";
        for (size_t c = 0; c < row.size(); ++c)
          std::cout << (c ? " " : "") << row[c];
        std::cout << "\n";
      }
    }
  }

  // Final lexsegment of x1*x3*x4 in four variables fails the l-exchange
  // property under the lex T-order; the counterexample pairs x2^3 against
  // x1*x3*x4.
  {
    const Monomial u = Monomial::from_csv(4, "1,0,1,1");
    const Monomial x2cubed = Monomial::from_csv(4, "0,3,0,0");
    const LexSegmentIdeal lf = final_lexsegment(u);
    const auto report_l = check_l_exchange(lf.generators, 2);
    bool ok = !report_l.satisfied && report_l.counterexample.has_value();
    if (ok) {
      const auto& ce = *report_l.counterexample;
      const bool has_u = std::any_of(
          ce.u_factors.begin(), ce.u_factors.end(),
          [&](const Monomial& m) { return m == x2cubed; });
      const bool has_v = std::any_of(
          ce.v_factors.begin(), ce.v_factors.end(),
          [&](const Monomial& m) { return m == u; });
      ok = has_u && has_v;
    }
    // The swap the definition would need: x1 * x2^3 / x2 is outside the set.
    const Monomial blocked =
        x2cubed * Monomial::variable(4, 1) / Monomial::variable(4, 2);
    ok = ok && !lf.contains(blocked);
    all_ok = all_ok && ok;
    report["l_exchange"] = json{{"ok", ok},
                                {"blocked_swap", blocked.csv()}};
    if (!as_json) {
      std::cout << "[2] l-exchange on Lf(x1*x3*x4), n=4: "
                << (ok ? "fails as expected (x2^3 vs x1*x3*x4; "
                         "x1*x2^2 is outside the segment)"
                       : "MISMATCH")
                << "\n";
    }
  }

  // Classification of the gap-shaped pair (x1*x3*x4, x2*x4^2).
  {
    const LexSegmentIdeal ideal = build_lexsegment(
        Monomial::from_csv(4, "1,0,1,1"), Monomial::from_csv(4, "0,1,0,2"));
    const ResolutionClass cls = classify(ideal);
    const bool ok = cls.verdict == Verdict::NonCompletely && !cls.completely &&
                    cls.gap_l && *cls.gap_l == 2;
    all_ok = all_ok && ok;
    report["classification"] = classification_json(ideal, cls);
    report["classification"]["ok"] = ok;
    if (!as_json) {
      std::cout << "[3] classify L(x1*x3*x4, x2*x4^2), n=4: "
                << verdict_name(cls.verdict)
                << (cls.gap_l ? " (l=" + std::to_string(*cls.gap_l) + ")" : "")
                << (ok ? "" : "  MISMATCH") << "\n";
    }
  }

  if (as_json) {
    report["ok"] = all_ok;
    emit(report);
  } else {
    std::cout << (all_ok ? "all golden values match"
                         : "GOLDEN VALUE MISMATCH") << "\n";
  }
  return all_ok ? kExitOk : kExitRefuted;
}

}  // namespace lexseg::cli
