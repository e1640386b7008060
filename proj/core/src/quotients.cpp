#include "lexseg/quotients.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace lexseg {

std::vector<Monomial> power_generators(const std::vector<Monomial>& generators,
                                       int power) {
  if (generators.empty()) throw DomainError("power of an empty generator set");
  if (power < 1) throw DomainError("power must be >= 1");
  for (const auto& g : generators) {
    if (g.vars() != generators.front().vars())
      throw DimensionError("generators mix variable counts");
    if (g.degree() != generators.front().degree())
      throw DimensionError("generators mix degrees");
  }
  const int n = generators.front().vars();
  std::set<Monomial, MonomialKeyLess> products;
  std::function<void(size_t, int, const Monomial&)> rec =
      [&](size_t from, int left, const Monomial& acc) {
        if (left == 0) {
          products.insert(acc);
          return;
        }
        for (size_t i = from; i < generators.size(); ++i)
          rec(i, left - 1, acc * generators[i]);
      };
  rec(0, power, Monomial::one(n));

  std::vector<Monomial> out(products.begin(), products.end());
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return cmp_lex(a, b) > 0;
  });
#ifndef NDEBUG
  // Distinct equal-degree monomials are divisibility-incomparable, so the
  // product set is already the minimal generating set.
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out.size(); ++j)
      assert(i == j || !out[i].divides(out[j]));
#endif
  return out;
}

OrderedGenerators order_generators(std::vector<Monomial> gens,
                                   MonomialOrder order) {
  std::sort(gens.begin(), gens.end(),
            [&](const Monomial& a, const Monomial& b) {
              return compare(order, a, b) > 0;
            });
  for (size_t i = 0; i + 1 < gens.size(); ++i)
    if (compare(order, gens[i], gens[i + 1]) == 0)
      throw ValidationError("generator list is not strictly decreasing");
  return OrderedGenerators{std::move(gens), order};
}

namespace {

// For each i, the variables x_q arising as single-variable colons
// w_k / gcd(w_k, w_i) with k < i, keyed by the smallest such k.
std::vector<std::pair<int, int>> colon_variables(
    const std::vector<Monomial>& w, size_t i) {
  std::vector<std::pair<int, int>> out;  // (k, q), ascending in k
  const int n = w[i].vars();
  std::vector<bool> seen(n + 1, false);
  for (size_t k = 0; k < i; ++k) {
    const Monomial colon = w[k] / gcd(w[k], w[i]);
    if (colon.degree() != 1) continue;
    const int q = colon.min_var();
    if (seen[q]) continue;
    seen[q] = true;
    out.emplace_back(static_cast<int>(k), q);
  }
  return out;
}

}  // namespace

QuotientCertificate has_linear_quotients(const OrderedGenerators& ordered) {
  const auto& w = ordered.gens;
  QuotientCertificate cert;
  cert.ok = true;
  for (size_t i = 1; i < w.size(); ++i) {
    const auto colon = colon_variables(w, i);
    for (size_t j = 0; j < i; ++j) {
      bool found = false;
      for (const auto& [k, q] : colon) {
        if (w[j].exponent(q) > w[i].exponent(q)) {
          cert.witnesses.push_back(QuotientWitness{
              static_cast<int>(i), static_cast<int>(j), k, q});
          found = true;
          break;
        }
      }
      if (!found) {
        cert.ok = false;
        cert.failure = {static_cast<int>(i), static_cast<int>(j)};
        return cert;
      }
    }
  }
  return cert;
}

bool linear_quotients_ok(const std::vector<Monomial>& list) {
  for (size_t i = 1; i < list.size(); ++i) {
    const auto colon = colon_variables(list, i);
    for (size_t j = 0; j < i; ++j) {
      bool found = false;
      for (const auto& [k, q] : colon) {
        (void)k;
        if (list[j].exponent(q) > list[i].exponent(q)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

MonomialOrder prescribed_order(const ResolutionClass& cls) {
  switch (cls.verdict) {
    case Verdict::CompletelyCaseI:
    case Verdict::CompletelyCaseII:
    case Verdict::CompletelyCaseIII:
      return MonomialOrder::Succ;
    case Verdict::NonCompletely:
      return MonomialOrder::SigmaRevLexDec;
    default:
      throw DomainError(
          "no prescribed quotient order for a negative classification");
  }
}

QuotientCertificate verify_power_linear_quotients(const LexSegmentIdeal& ideal,
                                                  int power,
                                                  const ResolutionClass* cls) {
  ResolutionClass local;
  if (cls == nullptr) {
    local = classify(ideal);
    cls = &local;
  }
  if (!cls->positive())
    throw DomainError("linear-quotients certification needs a positive "
                      "classification; got " +
                      std::string(verdict_name(cls->verdict)));
  const MonomialOrder order = prescribed_order(*cls);
  auto gens = power_generators(ideal.generators, power);
  return has_linear_quotients(order_generators(std::move(gens), order));
}

PowerSuiteReport exchange_implies_power_quotients_suite(
    const std::vector<Monomial>& generators, MonomialOrder sigma,
    int power_max) {
  if (power_max < 1) throw DomainError("power bound must be >= 1");
  PowerSuiteReport report;
  report.per_power.assign(power_max, false);
  for (int N = 1; N <= power_max; ++N) {
    auto gens = power_generators(generators, N);
    const auto cert =
        has_linear_quotients(order_generators(std::move(gens), sigma));
    report.per_power[N - 1] = cert.ok;
    if (!cert.ok && report.all_ok) {
      report.all_ok = false;
      report.first_failed_power = N;
    }
  }
  return report;
}

}  // namespace lexseg
