#pragma once

#include <optional>
#include <vector>

#include "lexseg/monomial.hpp"

namespace lexseg {

/// The lexsegment set L(u,v) = { w of degree d : u >=_lex w >=_lex v },
/// together with its bounds. Generators are stored lex-descending; operations
/// that need a different order re-sort explicitly.
struct LexSegmentIdeal {
  Monomial u;
  Monomial v;
  std::vector<Monomial> generators;

  int vars() const { return u.vars(); }
  int degree() const { return u.degree(); }
  bool contains(const Monomial& w) const;
};

LexSegmentIdeal build_lexsegment(const Monomial& u, const Monomial& v);
/// L(x_1^d, v).
LexSegmentIdeal initial_lexsegment(const Monomial& v);
/// L(u, x_n^d).
LexSegmentIdeal final_lexsegment(const Monomial& u);

/// { x_i * w : w in gens, 1 <= i <= n }, deduplicated, lex-descending.
std::vector<Monomial> shadow(const std::vector<Monomial>& gens);

/// True iff gens equals the full segment between its lex extremes.
bool is_lexsegment_set(const std::vector<Monomial>& gens);

/// Applies shadow `iterations` times, checking is_lexsegment_set after each
/// step. A finite budget stands in for the all-shadows definition; callers
/// report "complete up to k shadows".
bool is_completely_lexsegment(const LexSegmentIdeal& ideal, int iterations);

/// The immediate lex-predecessor of v within M_d; throws for v = x_n^d.
Monomial lex_predecessor(const Monomial& v);

enum class Verdict {
  CompletelyCaseI,
  CompletelyCaseII,
  CompletelyCaseIII,
  NonCompletely,
  NoLinearResolution,
  // Not completely lexsegment and x_1 | v: outside the quoted theorems.
  UnclassifiedByPaper,
};

const char* verdict_name(Verdict verdict);

struct ResolutionClass {
  Verdict verdict;
  bool completely = false;
  int shadow_iterations = 0;
  /// Case (i) witness: u = x1^a x2^(d-a), v = x1^a xn^(d-a).
  std::optional<int> case_a;
  /// Case (iii) witness: the largest monomial below v. Absent when v = xn^d
  /// (the condition then holds vacuously).
  std::optional<Monomial> boundary_w;
  /// Non-completely witness: u = x1*x_{l+1}^.. and v = x_l*x_n^(d-1).
  std::optional<int> gap_l;

  /// Linear resolution certified by one of the quoted theorems.
  bool positive() const {
    return verdict == Verdict::CompletelyCaseI ||
           verdict == Verdict::CompletelyCaseII ||
           verdict == Verdict::CompletelyCaseIII ||
           verdict == Verdict::NonCompletely;
  }
};

/// Dispatches on completeness first: completely lexsegment ideals are
/// classified by the three numeric conditions, the rest by the gap-shape
/// criterion. Requires nu_1(u) > 0. shadow_iterations < 0 selects the
/// default budget n*d.
ResolutionClass classify(const LexSegmentIdeal& ideal,
                         int shadow_iterations = -1);

}  // namespace lexseg
