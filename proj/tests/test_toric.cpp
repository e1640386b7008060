#include <doctest.h>

#include <map>
#include <random>

#include "lexseg/toric.hpp"
#include "oracles.hpp"

using namespace lexseg;

namespace {

Monomial mono(int n, const std::string& csv) {
  return Monomial::from_csv(n, csv);
}

// Number of quadratic fiber binomials by direct kernel search: pairs of
// T-variables with equal product, minus one representative per fiber.
long long oracle_quadratic_binomials(int n, int d) {
  const auto slice = monomials_of_degree(n, d);
  std::map<std::vector<int>, long long> fibers;
  for (size_t i = 0; i < slice.size(); ++i)
    for (size_t j = i; j < slice.size(); ++j)
      fibers[(slice[i] * slice[j]).exponents()] += 1;
  long long out = 0;
  for (const auto& [prod, count] : fibers) out += count - 1;
  return out;
}

long long count_irreducible(int n, int d, int N,
                            const std::vector<ToricBinomial>& gb) {
  std::set<std::pair<Row, Row>> leads;
  for (const auto& b : gb)
    leads.insert({b.lead.tpart[0].row, b.lead.tpart[1].row});
  const auto slice = monomials_of_degree(n, d);
  std::vector<TVariable> tvars;
  for (const auto& m : slice) tvars.push_back(tvariable_of(m));

  long long count = 0;
  std::vector<int> idx;
  std::function<void(size_t, int)> rec = [&](size_t from, int left) {
    if (left == 0) {
      for (size_t a = 0; a < idx.size(); ++a) {
        for (size_t b = a + 1; b < idx.size(); ++b) {
          TMonomial pair = make_tmonomial(
              n, {tvars[idx[a]], tvars[idx[b]]});
          if (leads.count({pair[0].row, pair[1].row})) return;
        }
      }
      ++count;
      return;
    }
    for (size_t i = from; i < tvars.size(); ++i) {
      idx.push_back(static_cast<int>(i));
      rec(i, left - 1);
      idx.pop_back();
    }
  };
  rec(0, N);
  return count;
}

}  // namespace

TEST_CASE("veronese basis") {
  {
    const auto gb = veronese_gb(2, 2);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0].lead.tpart ==
          make_tmonomial(2, {TVariable{{1, 1}}, TVariable{{2, 2}}}));
    CHECK(gb[0].tail.tpart ==
          make_tmonomial(2, {TVariable{{1, 2}}, TVariable{{1, 2}}}));
  }
  CHECK(veronese_gb(1, 3).empty());
  CHECK(static_cast<long long>(veronese_gb(3, 2).size()) ==
        oracle_quadratic_binomials(3, 2));
  CHECK(static_cast<long long>(veronese_gb(4, 2).size()) ==
        oracle_quadratic_binomials(4, 2));
  for (const auto& b : veronese_gb(3, 3)) CHECK(in_kernel(b));
  CHECK_THROWS_AS(veronese_gb(2, 1), DomainError);
}

TEST_CASE("lexsegment algebra basis") {
  const auto full = build_lexsegment(mono(3, "2,0,0"), mono(3, "0,0,2"));
  CHECK(lexsegment_algebra_gb(full).size() == veronese_gb(3, 2).size());

  const auto single = build_lexsegment(mono(3, "1,1,0"), mono(3, "1,1,0"));
  CHECK(lexsegment_algebra_gb(single).empty());

  const auto gap = build_lexsegment(mono(4, "1,0,1,1"), mono(4, "0,1,0,2"));
  for (const auto& b : lexsegment_algebra_gb(gap)) {
    CHECK(in_kernel(b));
    CHECK(phi_image(b.lead).degree() == 6);
  }
}

TEST_CASE("standard monomial count equals the Veronese dimension") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 2; d <= 3; ++d) {
      const auto gb = veronese_gb(n, d);
      for (int N = 1; N <= 3; ++N)
        CHECK(count_irreducible(n, d, N, gb) ==
              oracles::comb(static_cast<long long>(N) * d + n - 1, n - 1));
    }
  }
}

TEST_CASE("normal form") {
  const auto gb22 = veronese_gb(2, 2);
  const TMonomial reducible =
      make_tmonomial(2, {TVariable{{1, 1}}, TVariable{{2, 2}}});
  CHECK(normal_form(reducible, gb22) ==
        make_tmonomial(2, {TVariable{{1, 2}}, TVariable{{1, 2}}}));

  const TMonomial fixed =
      make_tmonomial(2, {TVariable{{1, 2}}, TVariable{{1, 2}}});
  CHECK(normal_form(fixed, gb22) == fixed);
}

TEST_CASE("normal form agrees with the tableau route") {
  std::mt19937_64 rng(43);
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 3; ++d) {
      const auto gb = veronese_gb(n, d);
      const auto slice = monomials_of_degree(n, d);
      std::uniform_int_distribution<size_t> pick(0, slice.size() - 1);
      for (int trial = 0; trial < 60; ++trial) {
        const int N = 1 + static_cast<int>(rng() % 3);
        std::vector<Monomial> factors;
        std::vector<TVariable> prod;
        for (int i = 0; i < N; ++i) {
          factors.push_back(slice[pick(rng)]);
          prod.push_back(tvariable_of(factors.back()));
        }
        const auto via_rewriting = normal_form(prod, gb);
        const auto via_tableau = standard_representation(factors);
        REQUIRE(via_rewriting.size() == via_tableau.size());
        for (size_t i = 0; i < via_tableau.size(); ++i)
          CHECK(row_to_monomial(n, via_rewriting[i].row) == via_tableau[i]);
      }
    }
  }
}

TEST_CASE("l-exchange") {
  const auto lf = final_lexsegment(mono(4, "1,0,1,1"));
  const auto report = check_l_exchange(lf.generators, 2);
  REQUIRE_FALSE(report.satisfied);
  REQUIRE(report.counterexample.has_value());
  bool has_x2cubed = false;
  for (const auto& m : report.counterexample->u_factors)
    if (m == mono(4, "0,3,0,0")) has_x2cubed = true;
  bool has_v = false;
  for (const auto& m : report.counterexample->v_factors)
    if (m == mono(4, "1,0,1,1")) has_v = true;
  CHECK(has_x2cubed);
  CHECK(has_v);

  const auto full = build_lexsegment(mono(3, "2,0,0"), mono(3, "0,0,2"));
  CHECK(check_l_exchange(full.generators, 2).satisfied);

  for (const auto& v : monomials_of_degree(3, 2))
    CHECK(check_l_exchange(initial_lexsegment(v).generators, 2).satisfied);
}

TEST_CASE("l-exchange implies sigma-exchange for sigma = lex") {
  const auto slice = monomials_of_degree(3, 2);
  for (size_t i = 0; i < slice.size(); ++i) {
    for (size_t j = i; j < slice.size(); ++j) {
      const auto seg = build_lexsegment(slice[i], slice[j]);
      if (check_l_exchange(seg.generators, 2).satisfied)
        CHECK(check_sigma_exchange(seg.generators, MonomialOrder::Lex, 2)
                  .satisfied);
    }
  }
}

TEST_CASE("sigma-exchange") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& u : monomials_of_degree(n, 2)) {
      const auto lf = final_lexsegment(u);
      CHECK(check_sigma_exchange(lf.generators, MonomialOrder::SigmaRevLexDec,
                                 2)
                .satisfied);
    }
  }
  const auto gap = build_lexsegment(mono(4, "1,0,1,1"), mono(4, "0,1,0,2"));
  CHECK(check_sigma_exchange(gap.generators, MonomialOrder::SigmaRevLexDec, 2)
            .satisfied);

  CHECK(check_sigma_exchange({mono(3, "1,1,0")}, MonomialOrder::SigmaRevLexDec,
                             2)
            .satisfied);
}

TEST_CASE("rees basis") {
  {
    const auto single = build_lexsegment(mono(3, "1,1,0"), mono(3, "1,1,0"));
    CHECK(rees_gb(single, MonomialOrder::SigmaRevLexDec).empty());
  }
  {
    const auto full = build_lexsegment(mono(3, "2,0,0"), mono(3, "0,0,2"));
    const auto basis = rees_gb(full, MonomialOrder::Lex);
    for (const auto& b : basis) CHECK(in_kernel(b));
  }
  {
    const auto gap = build_lexsegment(mono(4, "1,0,1,1"), mono(4, "0,1,0,2"));
    const auto basis = rees_gb(gap, MonomialOrder::SigmaRevLexDec);
    for (const auto& b : basis) CHECK(in_kernel(b));
    CHECK(koszul_certificate(basis));
    CHECK(verify_groebner(basis, MonomialOrder::SigmaRevLexDec));
    CHECK(is_interreduced(basis));

    // The fiber slice of the Rees basis is exactly the algebra basis.
    const auto fiber_only = lexsegment_algebra_gb(gap);
    std::vector<ToricBinomial> fiber_part;
    for (const auto& b : basis)
      if (b.bidegree() == std::pair<int, int>{0, 2}) fiber_part.push_back(b);
    REQUIRE(fiber_part.size() == fiber_only.size());
    for (size_t i = 0; i < fiber_part.size(); ++i) {
      CHECK(fiber_part[i].lead == fiber_only[i].lead);
      CHECK(fiber_part[i].tail == fiber_only[i].tail);
    }
  }
}

TEST_CASE("groebner verification") {
  CHECK(verify_groebner({}, MonomialOrder::SigmaRevLexDec));
  CHECK(verify_groebner(veronese_gb(2, 2), MonomialOrder::SigmaRevLexDec));
  CHECK(verify_groebner(veronese_gb(3, 2), MonomialOrder::SigmaRevLexDec));

  ToricBinomial broken{
      MixedMonomial{mono(2, "1,0"), make_tmonomial(2, {TVariable{{1, 1}}})},
      MixedMonomial{mono(2, "0,1"), make_tmonomial(2, {TVariable{{1, 1}}})}};
  CHECK_THROWS_AS(verify_groebner({broken}, MonomialOrder::SigmaRevLexDec),
                  ValidationError);
}

TEST_CASE("koszul certificate") {
  const auto gap = build_lexsegment(mono(4, "1,0,1,1"), mono(4, "0,1,0,2"));
  CHECK(koszul_certificate(lexsegment_algebra_gb(gap)));

  // A cubic fiber element in an otherwise healthy set flips the verdict.
  const auto gb22 = veronese_gb(2, 2);
  ToricBinomial cubic{
      MixedMonomial{Monomial::one(2),
                    make_tmonomial(2, {TVariable{{1, 1}}, TVariable{{1, 1}},
                                       TVariable{{2, 2}}})},
      MixedMonomial{Monomial::one(2),
                    make_tmonomial(2, {TVariable{{1, 1}}, TVariable{{1, 2}},
                                       TVariable{{1, 2}}})}};
  auto extended = gb22;
  extended.push_back(cubic);
  CHECK_FALSE(koszul_certificate(extended));
}
