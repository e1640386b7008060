#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lexseg/lexsegment.hpp"
#include "lexseg/monomial.hpp"

namespace lexseg {

/// Minimal generators of I^N for an equigenerated ideal: the distinct N-fold
/// products (equal-degree monomials never divide one another). Returned
/// lex-descending.
std::vector<Monomial> power_generators(const std::vector<Monomial>& generators,
                                       int power);

/// Generator list sorted strictly descending under a named order.
struct OrderedGenerators {
  std::vector<Monomial> gens;
  MonomialOrder order;
};

OrderedGenerators order_generators(std::vector<Monomial> gens,
                                   MonomialOrder order);

/// Witness that (w_1..w_{i-1}) : w_i is variable-generated at pair (i,j):
/// w_k / gcd(w_k, w_i) = x_q and x_q divides w_j / gcd(w_j, w_i).
/// Indices are 0-based positions in the ordered list.
struct QuotientWitness {
  int i, j, k, q;
};

struct QuotientCertificate {
  bool ok = false;
  std::vector<QuotientWitness> witnesses;
  std::optional<std::pair<int, int>> failure;  // first (i, j) with no witness
};

/// Checks the colon condition for every i against every j < i; witness k is
/// the smallest admissible index.
QuotientCertificate has_linear_quotients(const OrderedGenerators& ordered);

/// Lean order-free variant used by exhaustive permutation searches.
bool linear_quotients_ok(const std::vector<Monomial>& list);

/// The order each theorem prescribes for a positive classification.
MonomialOrder prescribed_order(const ResolutionClass& cls);

/// Certifies linear quotients of I^N under the prescribed order
/// (Succ when completely, sigma-descending otherwise). Pass a precomputed
/// classification to skip the shadow test.
QuotientCertificate verify_power_linear_quotients(
    const LexSegmentIdeal& ideal, int power,
    const ResolutionClass* cls = nullptr);

struct PowerSuiteReport {
  bool all_ok = true;
  int first_failed_power = 0;  // 0 when all passed
  std::vector<bool> per_power;
};

/// Certifies linear quotients of all powers up to power_max under the
/// sigma-descending order; assumes the sigma-exchange hypothesis was checked.
PowerSuiteReport exchange_implies_power_quotients_suite(
    const std::vector<Monomial>& generators, MonomialOrder sigma,
    int power_max);

}  // namespace lexseg
