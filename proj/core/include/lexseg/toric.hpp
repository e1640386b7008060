#pragma once

#include <optional>
#include <vector>

#include "lexseg/lexsegment.hpp"
#include "lexseg/monomial.hpp"
#include "lexseg/tableau.hpp"

namespace lexseg {

/// The presentation variable T_a attached to the degree-d monomial x_a.
struct TVariable {
  Row row;  // weakly increasing indices

  bool operator==(const TVariable& rhs) const { return row == rhs.row; }
  bool operator!=(const TVariable& rhs) const { return !(*this == rhs); }
};

TVariable tvariable_of(const Monomial& m);

/// Order on T-variables induced by an order on the underlying monomials:
/// T_a > T_b iff x_a > x_b. The default Lex choice is the order the fiber
/// Groebner bases are stated for; the exchange checkers accept any of the
/// three since those results are order-generic.
struct TOrder {
  MonomialOrder by = MonomialOrder::Lex;
};

/// Positive iff T_a > T_b under the given order.
int tvar_cmp(int vars, const TVariable& a, const TVariable& b, TOrder order);

/// Product of T-variables, kept sorted descending under the default order.
using TMonomial = std::vector<TVariable>;

TMonomial make_tmonomial(int vars, std::vector<TVariable> factors,
                         TOrder order = {});

/// Induced order on equal-length products: sort factors descending, compare
/// factorwise, first difference decides.
int tmonomial_cmp(int vars, const TMonomial& a, const TMonomial& b,
                  TOrder order = {});

/// x-part times a product of T-variables; bigraded with deg(x_i) = (1,0) and
/// deg(T_u) = (0,1).
struct MixedMonomial {
  Monomial xpart;
  TMonomial tpart;

  bool operator==(const MixedMonomial& rhs) const {
    return xpart == rhs.xpart && tpart == rhs.tpart;
  }
  int xdeg() const { return xpart.degree(); }
  int tdeg() const { return static_cast<int>(tpart.size()); }
};

/// Image of a mixed monomial under T_u -> u (the t-power is the T-degree).
Monomial phi_image(const MixedMonomial& m);

/// lead - tail with lead the greater side under the active product order.
/// Both sides expand to the same monomial, which every consumer re-checks.
struct ToricBinomial {
  MixedMonomial lead;
  MixedMonomial tail;

  std::pair<int, int> bidegree() const {
    return {lead.xdeg(), lead.tdeg()};
  }
};

/// Kernel membership by expansion: equal T-degrees and equal phi-images.
bool in_kernel(const ToricBinomial& b);

/// The quadratic Groebner basis of the Veronese presentation ideal: all
/// T_q T_r - T_a T_b with T_a T_b the standard monomial of the same support,
/// lead T_q T_r, under the Lex T-order.
std::vector<ToricBinomial> veronese_gb(int vars, int degree);

/// The subset of the Veronese basis whose four monomials all lie in the
/// segment; membership of the lead pair forces the standard pair in.
std::vector<ToricBinomial> lexsegment_algebra_gb(const LexSegmentIdeal& ideal);

/// Rewrites non-standard quadratic sub-pairs by the basis until none remain.
/// Terminates because each step is a strict Lex descent on the T-monomial.
TMonomial normal_form(TMonomial m, const std::vector<ToricBinomial>& gb);

struct ExchangeCounterexample {
  std::vector<Monomial> u_factors;
  std::vector<Monomial> v_factors;
};

struct ExchangeReport {
  bool satisfied = false;
  std::optional<ExchangeCounterexample> counterexample;
};

/// Exhaustive l-exchange test over pairs of standard monomials of T-degree
/// at most n_bound. Standardness is minimality inside the fiber of
/// factorizations into elements of B under the given T-order.
ExchangeReport check_l_exchange(const std::vector<Monomial>& generators,
                                int n_bound, TOrder torder = {});

/// Exhaustive sigma-exchange test; sigma is an order on the x-variables.
ExchangeReport check_sigma_exchange(const std::vector<Monomial>& generators,
                                    MonomialOrder sigma, int n_bound,
                                    TOrder torder = {});

/// The Rees presentation basis: the fiber basis together with the linear
/// relations x_i T_u - x_j T_v where x_j is the sigma-smallest variable with
/// x_i >_sigma x_j and x_i u / x_j in the generator set.
std::vector<ToricBinomial> rees_gb(const LexSegmentIdeal& ideal,
                                   MonomialOrder sigma);

/// Buchberger check under the product order: x-parts by sigma, ties by the
/// T-order. Every S-pair must reduce to zero; the per-pair step budget, when
/// exhausted, throws instead of accepting.
bool verify_groebner(const std::vector<ToricBinomial>& gb, MonomialOrder sigma,
                     TOrder torder = {});

/// No basis element's lead divides another element's lead or tail.
bool is_interreduced(const std::vector<ToricBinomial>& gb);

/// True iff every element is quadratic: bidegree (0,2) or (1,1).
bool koszul_certificate(const std::vector<ToricBinomial>& gb);

}  // namespace lexseg
