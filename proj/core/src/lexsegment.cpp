#include "lexseg/lexsegment.hpp"

#include <algorithm>
#include <set>

namespace lexseg {

namespace {

void require_segment_inputs(const Monomial& u, const Monomial& v) {
  if (u.vars() != v.vars())
    throw DimensionError("segment bounds live in different variable counts");
  if (u.degree() != v.degree())
    throw DimensionError("segment bounds have degrees " +
                         std::to_string(u.degree()) + " and " +
                         std::to_string(v.degree()));
  if (cmp_lex(u, v) < 0)
    throw OrderError("segment bounds out of order: " + u.pretty() +
                     " <_lex " + v.pretty());
}

void require_equigenerated(const std::vector<Monomial>& gens,
                           const char* where) {
  for (const auto& g : gens) {
    if (g.vars() != gens.front().vars())
      throw DimensionError(std::string(where) +
                           ": generators mix variable counts");
    if (g.degree() != gens.front().degree())
      throw DimensionError(std::string(where) +
                           ": generators mix degrees " +
                           std::to_string(gens.front().degree()) + " and " +
                           std::to_string(g.degree()));
  }
}

}  // namespace

bool LexSegmentIdeal::contains(const Monomial& w) const {
  if (w.vars() != vars() || w.degree() != degree()) return false;
  return cmp_lex(u, w) >= 0 && cmp_lex(w, v) >= 0;
}

LexSegmentIdeal build_lexsegment(const Monomial& u, const Monomial& v) {
  require_segment_inputs(u, v);
  std::vector<Monomial> gens;
  Monomial w = u;
  while (true) {
    gens.push_back(w);
    if (w == v) break;
    w = lex_predecessor(w);
  }
  return LexSegmentIdeal{u, v, std::move(gens)};
}

LexSegmentIdeal initial_lexsegment(const Monomial& v) {
  return build_lexsegment(Monomial::power(v.vars(), 1, v.degree()), v);
}

LexSegmentIdeal final_lexsegment(const Monomial& u) {
  return build_lexsegment(u, Monomial::power(u.vars(), u.vars(), u.degree()));
}

std::vector<Monomial> shadow(const std::vector<Monomial>& gens) {
  if (gens.empty()) throw DomainError("shadow of the empty set");
  require_equigenerated(gens, "shadow");
  const int n = gens.front().vars();
  std::set<Monomial, MonomialKeyLess> out;
  for (const auto& g : gens)
    for (int i = 1; i <= n; ++i) out.insert(g * Monomial::variable(n, i));
  std::vector<Monomial> result(out.begin(), out.end());
  std::sort(result.begin(), result.end(),
            [](const Monomial& a, const Monomial& b) {
              return cmp_lex(a, b) > 0;
            });
  return result;
}

bool is_lexsegment_set(const std::vector<Monomial>& gens) {
  if (gens.empty()) throw DomainError("is_lexsegment_set on the empty set");
  require_equigenerated(gens, "is_lexsegment_set");
  std::set<Monomial, MonomialKeyLess> given(gens.begin(), gens.end());
  const Monomial* top = &gens.front();
  const Monomial* bottom = &gens.front();
  for (const auto& g : gens) {
    if (cmp_lex(g, *top) > 0) top = &g;
    if (cmp_lex(g, *bottom) < 0) bottom = &g;
  }
  const auto segment = build_lexsegment(*top, *bottom);
  if (segment.generators.size() != given.size()) return false;
  for (const auto& w : segment.generators)
    if (!given.count(w)) return false;
  return true;
}

bool is_completely_lexsegment(const LexSegmentIdeal& ideal, int iterations) {
  if (iterations < 1) throw DomainError("shadow iteration budget must be >= 1");
  std::vector<Monomial> current = ideal.generators;
  for (int k = 0; k < iterations; ++k) {
    current = shadow(current);
    if (!is_lexsegment_set(current)) return false;
  }
  return true;
}

Monomial lex_predecessor(const Monomial& v) {
  const int n = v.vars();
  // Decrement the rightmost decrementable position j < n, then put the
  // freed degree as early as possible (all of it on x_{j+1}).
  for (int j = n - 2; j >= 0; --j) {
    if (v.exponents()[j] == 0) continue;
    std::vector<int> e(v.exponents());
    int tail = 1;
    for (int t = j + 1; t < n; ++t) {
      tail += e[t];
      e[t] = 0;
    }
    e[j] -= 1;
    e[j + 1] = tail;
    return Monomial(std::move(e));
  }
  throw DomainError("x_n^d has no lex-predecessor within its degree");
}

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::CompletelyCaseI:
      return "completely-case-i";
    case Verdict::CompletelyCaseII:
      return "completely-case-ii";
    case Verdict::CompletelyCaseIII:
      return "completely-case-iii";
    case Verdict::NonCompletely:
      return "non-completely";
    case Verdict::NoLinearResolution:
      return "no-linear-resolution";
    case Verdict::UnclassifiedByPaper:
      return "unclassified-by-paper";
  }
  return "?";
}

namespace {

// Case (i): u = x1^a x2^(d-a), v = x1^a xn^(d-a) for some 0 < a <= d.
std::optional<int> case_i_witness(const Monomial& u, const Monomial& v) {
  const int n = u.vars();
  const int d = u.degree();
  const int a = u.exponent(1);
  if (a <= 0) return std::nullopt;
  if (u != Monomial::power(n, 1, a) *
               (n >= 2 ? Monomial::power(n, 2, d - a) : Monomial::one(n)))
    return std::nullopt;
  if (a < d && n < 2) return std::nullopt;
  if (v != Monomial::power(n, 1, a) *
               Monomial::power(n, n, d - a))
    return std::nullopt;
  return a;
}

// Non-completely shape: u = x1 * (monomial in x_{l+1}..x_n),
// v = x_l * x_n^(d-1) for some 2 <= l <= n-1.
std::optional<int> gap_shape_witness(const Monomial& u, const Monomial& v) {
  const int n = u.vars();
  const int d = u.degree();
  if (v.is_one()) return std::nullopt;
  const int l = v.min_var();
  if (l < 2 || l > n - 1) return std::nullopt;
  if (v != Monomial::variable(n, l) * Monomial::power(n, n, d - 1))
    return std::nullopt;
  if (u.exponent(1) != 1) return std::nullopt;
  const Monomial rest = u / Monomial::variable(n, 1);
  if (!rest.is_one() && rest.min_var() < l + 1) return std::nullopt;
  return l;
}

}  // namespace

ResolutionClass classify(const LexSegmentIdeal& ideal, int shadow_iterations) {
  const Monomial& u = ideal.u;
  const Monomial& v = ideal.v;
  const int n = ideal.vars();
  const int d = ideal.degree();
  const int a1 = u.exponent(1);
  const int b1 = v.exponent(1);
  if (a1 == 0)
    throw DomainError(
        "classification assumes nu_1(u) > 0; got u = " + u.pretty());
  if (shadow_iterations < 0) shadow_iterations = n * d;

  ResolutionClass out{};
  out.shadow_iterations = shadow_iterations;
  out.completely = is_completely_lexsegment(ideal, shadow_iterations);

  if (out.completely) {
    if (auto a = case_i_witness(u, v)) {
      out.verdict = Verdict::CompletelyCaseI;
      out.case_a = a;
      return out;
    }
    if (b1 < a1 - 1) {
      out.verdict = Verdict::CompletelyCaseII;
      return out;
    }
    if (b1 == a1 - 1) {
      if (v == Monomial::power(n, n, d)) {
        // No monomial below x_n^d: condition (iii) holds vacuously.
        out.verdict = Verdict::CompletelyCaseIII;
        return out;
      }
      const Monomial w = lex_predecessor(v);
      const Monomial lifted =
          w * Monomial::variable(n, 1) / Monomial::variable(n, w.max_var());
      if (cmp_lex(lifted, u) <= 0) {
        out.verdict = Verdict::CompletelyCaseIII;
        out.boundary_w = w;
        return out;
      }
    }
    out.verdict = Verdict::NoLinearResolution;
    return out;
  }

  if (b1 > 0) {
    out.verdict = Verdict::UnclassifiedByPaper;
    return out;
  }
  if (auto l = gap_shape_witness(u, v)) {
    out.verdict = Verdict::NonCompletely;
    out.gap_l = l;
    return out;
  }
  out.verdict = Verdict::NoLinearResolution;
  return out;
}

}  // namespace lexseg
