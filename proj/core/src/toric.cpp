#include "lexseg/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lexseg {

namespace {

constexpr long long kReductionBudget = 1'000'000;

void require_generators(const std::vector<Monomial>& generators,
                        const char* where) {
  if (generators.empty())
    throw DomainError(std::string(where) + ": empty generator set");
  for (const auto& g : generators) {
    if (g.vars() != generators.front().vars())
      throw DimensionError(std::string(where) +
                           ": generators mix variable counts");
    if (g.degree() != generators.front().degree())
      throw DimensionError(std::string(where) + ": generators mix degrees");
  }
}

using ExponentSet = std::set<std::vector<int>>;

ExponentSet exponent_set(const std::vector<Monomial>& generators) {
  ExponentSet out;
  for (const auto& g : generators) out.insert(g.exponents());
  return out;
}

}  // namespace

TVariable tvariable_of(const Monomial& m) {
  if (m.is_one())
    throw DomainError("no presentation variable for the unit monomial");
  return TVariable{monomial_to_row(m)};
}

int tvar_cmp(int vars, const TVariable& a, const TVariable& b, TOrder order) {
  if (order.by == MonomialOrder::Lex) return row_cmp(a.row, b.row);
  return compare(order.by, row_to_monomial(vars, a.row),
                 row_to_monomial(vars, b.row));
}

TMonomial make_tmonomial(int vars, std::vector<TVariable> factors,
                         TOrder order) {
  for (const auto& f : factors) row_to_monomial(vars, f.row);  // validates
  std::sort(factors.begin(), factors.end(),
            [&](const TVariable& a, const TVariable& b) {
              return tvar_cmp(vars, a, b, order) > 0;
            });
  return factors;
}

int tmonomial_cmp(int vars, const TMonomial& a, const TMonomial& b,
                  TOrder order) {
  if (a.size() != b.size())
    throw DimensionError("comparing T-monomials of different degrees");
  TMonomial sa = make_tmonomial(vars, a, order);
  TMonomial sb = make_tmonomial(vars, b, order);
  for (size_t i = 0; i < sa.size(); ++i) {
    const int c = tvar_cmp(vars, sa[i], sb[i], order);
    if (c != 0) return c;
  }
  return 0;
}

Monomial phi_image(const MixedMonomial& m) {
  Monomial out = m.xpart;
  for (const auto& t : m.tpart)
    out = out * row_to_monomial(m.xpart.vars(), t.row);
  return out;
}

bool in_kernel(const ToricBinomial& b) {
  return b.lead.tdeg() == b.tail.tdeg() &&
         phi_image(b.lead) == phi_image(b.tail);
}

namespace {

ToricBinomial fiber_binomial(int vars, const TVariable& q, const TVariable& r,
                             int degree) {
  Support merged(q.row);
  merged.insert(merged.end(), r.row.begin(), r.row.end());
  const Tableau standard =
      standard_tableau_from_support(vars, merged, 2, degree);
  const Monomial unit = Monomial::one(vars);
  return ToricBinomial{
      MixedMonomial{unit, make_tmonomial(vars, {q, r})},
      MixedMonomial{unit, make_tmonomial(vars,
                                         {TVariable{standard.rows[0]},
                                          TVariable{standard.rows[1]}})}};
}

std::vector<ToricBinomial> fiber_gb(int vars, int degree,
                                    const std::vector<Monomial>& universe,
                                    bool check_closure) {
  std::vector<TVariable> tvars;
  tvars.reserve(universe.size());
  for (const auto& m : universe) tvars.push_back(tvariable_of(m));
  ExponentSet members = exponent_set(universe);

  std::vector<ToricBinomial> out;
  for (size_t i = 0; i < tvars.size(); ++i) {
    for (size_t j = i + 1; j < tvars.size(); ++j) {
      if (is_standard_pair(tvars[i].row, tvars[j].row)) continue;
      ToricBinomial b = fiber_binomial(vars, tvars[i], tvars[j], degree);
      if (check_closure) {
        for (const auto& t : b.tail.tpart)
          if (!members.count(row_to_monomial(vars, t.row).exponents()))
            throw ValidationError(
                "standard pair escapes the segment; closure lemma violated");
      }
      out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace

std::vector<ToricBinomial> veronese_gb(int vars, int degree) {
  if (vars < 1) throw DomainError("veronese_gb needs at least one variable");
  if (degree < 2) throw DomainError("veronese_gb is stated for degree >= 2");
  return fiber_gb(vars, degree, monomials_of_degree(vars, degree), false);
}

std::vector<ToricBinomial> lexsegment_algebra_gb(const LexSegmentIdeal& ideal) {
  return fiber_gb(ideal.vars(), ideal.degree(), ideal.generators, true);
}

TMonomial normal_form(TMonomial m, const std::vector<ToricBinomial>& gb) {
  if (m.empty()) return m;
  int vars = 0;
  for (const auto& t : m)
    for (int idx : t.row) vars = std::max(vars, idx);
  for (const auto& b : gb)
    for (const auto& t : b.lead.tpart)
      for (int idx : t.row) vars = std::max(vars, idx);

  std::map<std::pair<Row, Row>, std::pair<Row, Row>> rewrite;
  for (const auto& b : gb) {
    if (b.lead.tdeg() != 2 || b.tail.tdeg() != 2 || !b.lead.xpart.is_one())
      throw ValidationError("normal_form expects a quadratic fiber basis");
    rewrite[{b.lead.tpart[0].row, b.lead.tpart[1].row}] = {
        b.tail.tpart[0].row, b.tail.tpart[1].row};
  }

  m = make_tmonomial(vars, std::move(m));
  long long budget = kReductionBudget;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < m.size() && !changed; ++i) {
      for (size_t j = i + 1; j < m.size() && !changed; ++j) {
        const auto it = rewrite.find({m[i].row, m[j].row});
        if (it == rewrite.end()) continue;
        m[i].row = it->second.first;
        m[j].row = it->second.second;
        m = make_tmonomial(vars, std::move(m));
        changed = true;
        if (--budget == 0)
          throw BudgetError("normal_form exceeded its rewrite budget");
      }
    }
  }
  return m;
}

namespace {

// All factorizations of `target` into `count` elements of B (indices into B,
// non-decreasing so each multiset appears once).
void factorizations_rec(const Monomial& target,
                        const std::vector<Monomial>& pool, size_t from,
                        int count, std::vector<int>& picked,
                        const std::function<void(const std::vector<int>&)>& f) {
  if (count == 0) {
    if (target.is_one()) f(picked);
    return;
  }
  for (size_t i = from; i < pool.size(); ++i) {
    if (!pool[i].divides(target)) continue;
    picked.push_back(static_cast<int>(i));
    factorizations_rec(target / pool[i], pool, i, count - 1, picked, f);
    picked.pop_back();
  }
}

struct StandardMonomial {
  std::vector<Monomial> factors;  // descending under the active T-order
  Monomial product;
};

TMonomial to_tmonomial(int vars, const std::vector<Monomial>& factors,
                       TOrder order) {
  std::vector<TVariable> t;
  t.reserve(factors.size());
  for (const auto& f : factors) t.push_back(tvariable_of(f));
  return make_tmonomial(vars, std::move(t), order);
}

/// Standard monomials of J_{K[B]} of fixed T-degree: exactly the minima of
/// the factorization fibers under the induced T-order.
std::vector<StandardMonomial> standard_monomials(
    const std::vector<Monomial>& pool, int tdegree, TOrder order) {
  const int vars = pool.front().vars();
  std::vector<StandardMonomial> out;
  std::vector<int> indices;
  std::function<void(size_t, int)> enumerate = [&](size_t from, int left) {
    if (left == 0) {
      std::vector<Monomial> factors;
      Monomial product = Monomial::one(vars);
      for (int idx : indices) {
        factors.push_back(pool[idx]);
        product = product * pool[idx];
      }
      const TMonomial candidate = to_tmonomial(vars, factors, order);
      bool minimal = true;
      std::vector<int> picked;
      factorizations_rec(product, pool, 0, tdegree, picked,
                         [&](const std::vector<int>& alt) {
                           if (!minimal) return;
                           std::vector<Monomial> other;
                           for (int idx : alt) other.push_back(pool[idx]);
                           const TMonomial alt_t =
                               to_tmonomial(vars, other, order);
                           if (tmonomial_cmp(vars, alt_t, candidate, order) < 0)
                             minimal = false;
                         });
      if (minimal) {
        std::sort(factors.begin(), factors.end(),
                  [&](const Monomial& a, const Monomial& b) {
                    return tvar_cmp(vars, tvariable_of(a), tvariable_of(b),
                                    order) > 0;
                  });
        out.push_back(StandardMonomial{std::move(factors), product});
      }
      return;
    }
    for (size_t i = from; i < pool.size(); ++i) {
      indices.push_back(static_cast<int>(i));
      enumerate(i, left - 1);
      indices.pop_back();
    }
  };
  enumerate(0, tdegree);
  std::sort(out.begin(), out.end(),
            [&](const StandardMonomial& a, const StandardMonomial& b) {
              return tmonomial_cmp(vars, to_tmonomial(vars, a.factors, order),
                                   to_tmonomial(vars, b.factors, order),
                                   order) > 0;
            });
  return out;
}

std::vector<Monomial> canonical_generators(std::vector<Monomial> generators) {
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) {
              return cmp_lex(a, b) > 0;
            });
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  return generators;
}

}  // namespace

ExchangeReport check_l_exchange(const std::vector<Monomial>& generators,
                                int n_bound, TOrder torder) {
  require_generators(generators, "check_l_exchange");
  if (n_bound < 1) throw DomainError("exchange bound must be >= 1");
  const auto pool = canonical_generators(generators);
  const int n = pool.front().vars();
  const ExponentSet members = exponent_set(pool);

  for (int N = 1; N <= n_bound; ++N) {
    const auto standards = standard_monomials(pool, N, torder);
    for (const auto& U : standards) {
      for (const auto& V : standards) {
        if (U.product == V.product) continue;
        int q = 0;
        for (int i = 1; i <= n; ++i) {
          if (U.product.exponent(i) != V.product.exponent(i)) {
            q = i;
            break;
          }
        }
        if (q == 0 || U.product.exponent(q) >= V.product.exponent(q)) continue;
        bool found = false;
        for (const auto& u_delta : U.factors) {
          for (int j : u_delta.support()) {
            if (j <= q) continue;
            const Monomial swapped =
                u_delta * Monomial::variable(n, q) / Monomial::variable(n, j);
            if (members.count(swapped.exponents())) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found)
          return ExchangeReport{
              false, ExchangeCounterexample{U.factors, V.factors}};
      }
    }
  }
  return ExchangeReport{true, std::nullopt};
}

ExchangeReport check_sigma_exchange(const std::vector<Monomial>& generators,
                                    MonomialOrder sigma, int n_bound,
                                    TOrder torder) {
  require_generators(generators, "check_sigma_exchange");
  if (n_bound < 1) throw DomainError("exchange bound must be >= 1");
  const auto pool = canonical_generators(generators);
  const int n = pool.front().vars();
  const ExponentSet members = exponent_set(pool);

  for (int N = 1; N <= n_bound; ++N) {
    const auto standards = standard_monomials(pool, N, torder);
    for (const auto& U : standards) {
      for (const auto& V : standards) {
        if (U.product == V.product) continue;
        if (compare(sigma, U.product, V.product) >= 0) continue;
        bool found = false;
        for (int q = 1; q <= n && !found; ++q) {
          if (U.product.exponent(q) >= V.product.exponent(q)) continue;
          const Monomial xq = Monomial::variable(n, q);
          for (const auto& u_delta : U.factors) {
            for (int j : u_delta.support()) {
              if (compare(sigma, Monomial::variable(n, j), xq) >= 0) continue;
              const Monomial swapped =
                  u_delta * xq / Monomial::variable(n, j);
              if (members.count(swapped.exponents())) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
        }
        if (!found)
          return ExchangeReport{
              false, ExchangeCounterexample{U.factors, V.factors}};
      }
    }
  }
  return ExchangeReport{true, std::nullopt};
}

std::vector<ToricBinomial> rees_gb(const LexSegmentIdeal& ideal,
                                   MonomialOrder sigma) {
  std::vector<ToricBinomial> out = lexsegment_algebra_gb(ideal);
  const int n = ideal.vars();
  const ExponentSet members = exponent_set(ideal.generators);

  std::vector<int> ascending(n);
  for (int i = 0; i < n; ++i) ascending[i] = i + 1;
  std::sort(ascending.begin(), ascending.end(), [&](int a, int b) {
    return compare(sigma, Monomial::variable(n, a),
                   Monomial::variable(n, b)) < 0;
  });

  for (const auto& u : ideal.generators) {
    for (int i = 1; i <= n; ++i) {
      const Monomial xi = Monomial::variable(n, i);
      for (int j : ascending) {
        if (compare(sigma, Monomial::variable(n, j), xi) >= 0) break;
        if (u.exponent(j) == 0) continue;
        const Monomial v = u * xi / Monomial::variable(n, j);
        if (!members.count(v.exponents())) continue;
        out.push_back(ToricBinomial{
            MixedMonomial{xi, make_tmonomial(n, {tvariable_of(u)})},
            MixedMonomial{Monomial::variable(n, j),
                          make_tmonomial(n, {tvariable_of(v)})}});
        break;
      }
    }
  }
  return out;
}

namespace {

int mixed_cmp(const MixedMonomial& a, const MixedMonomial& b,
              MonomialOrder sigma, TOrder torder) {
  const int c = compare(sigma, a.xpart, b.xpart);
  if (c != 0) return c;
  return tmonomial_cmp(a.xpart.vars(), a.tpart, b.tpart, torder);
}

bool tpart_contains(const TMonomial& big, const TMonomial& small) {
  // Both sorted descending; greedy multiset inclusion.
  size_t bi = 0;
  for (const auto& t : small) {
    while (bi < big.size() && !(big[bi] == t)) ++bi;
    if (bi == big.size()) return false;
    ++bi;
  }
  return true;
}

bool mixed_divides(const MixedMonomial& a, const MixedMonomial& b) {
  return a.xpart.divides(b.xpart) && tpart_contains(b.tpart, a.tpart);
}

MixedMonomial mixed_div(const MixedMonomial& a, const MixedMonomial& b) {
  TMonomial t = a.tpart;
  for (const auto& f : b.tpart) {
    auto it = std::find(t.begin(), t.end(), f);
    if (it == t.end())
      throw DomainError("T-part division without divisibility");
    t.erase(it);
  }
  return MixedMonomial{a.xpart / b.xpart, std::move(t)};
}

MixedMonomial mixed_mul(const MixedMonomial& a, const MixedMonomial& b) {
  TMonomial t = a.tpart;
  t.insert(t.end(), b.tpart.begin(), b.tpart.end());
  return MixedMonomial{a.xpart * b.xpart,
                       make_tmonomial(a.xpart.vars(), std::move(t))};
}

MixedMonomial mixed_lcm(const MixedMonomial& a, const MixedMonomial& b) {
  std::vector<int> e(a.xpart.vars());
  for (int i = 0; i < a.xpart.vars(); ++i)
    e[i] = std::max(a.xpart.exponents()[i], b.xpart.exponents()[i]);
  // Count-wise max of the T-multisets.
  TMonomial t = a.tpart;
  TMonomial rest = b.tpart;
  for (const auto& f : a.tpart) {
    auto it = std::find(rest.begin(), rest.end(), f);
    if (it != rest.end()) rest.erase(it);
  }
  t.insert(t.end(), rest.begin(), rest.end());
  return MixedMonomial{Monomial(std::move(e)),
                       make_tmonomial(a.xpart.vars(), std::move(t))};
}

// Rewrites one side by the first applicable basis element; true if any.
bool reduce_once(MixedMonomial& side, const std::vector<ToricBinomial>& gb) {
  for (const auto& g : gb) {
    if (!mixed_divides(g.lead, side)) continue;
    side = mixed_mul(mixed_div(side, g.lead), g.tail);
    return true;
  }
  return false;
}

}  // namespace

bool verify_groebner(const std::vector<ToricBinomial>& gb, MonomialOrder sigma,
                     TOrder torder) {
  std::vector<ToricBinomial> basis;
  basis.reserve(gb.size());
  for (const auto& b : gb) {
    if (!in_kernel(b))
      throw ValidationError("basis element fails the kernel expansion check");
    const int c = mixed_cmp(b.lead, b.tail, sigma, torder);
    if (c == 0) throw ValidationError("zero binomial in basis");
    basis.push_back(c > 0 ? b : ToricBinomial{b.tail, b.lead});
  }

  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      const MixedMonomial lcm = mixed_lcm(basis[i].lead, basis[j].lead);
      MixedMonomial a = mixed_mul(mixed_div(lcm, basis[i].lead),
                                  basis[i].tail);
      MixedMonomial b = mixed_mul(mixed_div(lcm, basis[j].lead),
                                  basis[j].tail);
      long long budget = kReductionBudget;
      while (!(a == b)) {
        MixedMonomial& bigger =
            mixed_cmp(a, b, sigma, torder) >= 0 ? a : b;
        MixedMonomial& smaller = (&bigger == &a) ? b : a;
        if (!reduce_once(bigger, basis) && !reduce_once(smaller, basis))
          return false;
        if (--budget == 0)
          throw BudgetError("S-pair reduction exceeded its step budget");
      }
    }
  }
  return true;
}

bool is_interreduced(const std::vector<ToricBinomial>& gb) {
  for (size_t i = 0; i < gb.size(); ++i) {
    for (size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      if (mixed_divides(gb[j].lead, gb[i].lead)) return false;
      if (mixed_divides(gb[j].lead, gb[i].tail)) return false;
    }
  }
  return true;
}

bool koszul_certificate(const std::vector<ToricBinomial>& gb) {
  for (const auto& b : gb) {
    if (b.lead.xdeg() != b.tail.xdeg() || b.lead.tdeg() != b.tail.tdeg())
      throw ValidationError("basis element is not bihomogeneous");
    const auto deg = b.bidegree();
    const bool fiber = deg.first == 0 && deg.second == 2;
    const bool linear = deg.first == 1 && deg.second == 1;
    if (!fiber && !linear) return false;
  }
  return true;
}

}  // namespace lexseg
