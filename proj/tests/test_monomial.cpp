#include <doctest.h>

#include <algorithm>

#include "lexseg/monomial.hpp"
#include "oracles.hpp"

using namespace lexseg;

namespace {

Monomial mono(int n, const std::string& csv) {
  return Monomial::from_csv(n, csv);
}

}  // namespace

TEST_CASE("construction and validation") {
  CHECK(mono(4, "1,0,1,1").degree() == 3);
  CHECK(mono(4, "1,0,1,1").pretty() == "x1*x3*x4");
  CHECK(Monomial::one(3).is_one());
  CHECK(Monomial::variable(3, 2).csv() == "0,1,0");
  CHECK(Monomial::power(4, 4, 2).pretty() == "x4^2");
  CHECK_THROWS_AS(Monomial(std::vector<int>{1, -1}), ValidationError);
  CHECK_THROWS_AS(mono(3, "1,0"), DimensionError);
  CHECK_THROWS_AS(mono(2, "1,x"), ValidationError);
  CHECK_THROWS_AS(Monomial::variable(3, 4), DimensionError);
}

TEST_CASE("arithmetic") {
  const Monomial a = mono(3, "1,1,0");
  const Monomial b = mono(3, "0,1,1");
  CHECK((a * b).csv() == "1,2,1");
  CHECK((a * b / a) == b);
  CHECK(gcd(a, b).csv() == "0,1,0");
  CHECK(a.divides(a * b));
  CHECK_FALSE(a.divides(b));
  CHECK_THROWS_AS(a / b, DomainError);
  CHECK_THROWS_AS(a * mono(2, "1,0"), DimensionError);
}

TEST_CASE("stats") {
  const Monomial m = mono(4, "1,0,1,1");
  CHECK(m.support() == std::vector<int>{1, 3, 4});
  CHECK(m.max_var() == 4);
  CHECK(m.min_var() == 1);

  const Monomial x2cubed = mono(4, "0,3,0,0");
  CHECK(x2cubed.support() == std::vector<int>{2});
  CHECK(x2cubed.max_var() == 2);
  CHECK(x2cubed.min_var() == 2);

  CHECK(mono(4, "2,0,0,1").exponent(1) == 2);
  CHECK(mono(4, "2,0,0,1").exponent(4) == 1);

  CHECK_THROWS_AS(Monomial::one(3).max_var(), DomainError);
  CHECK_THROWS_AS(Monomial::one(3).min_var(), DomainError);
}

TEST_CASE("cmp_lex examples") {
  CHECK(cmp_lex(mono(2, "2,0"), mono(2, "1,1")) > 0);
  CHECK(cmp_lex(mono(4, "1,0,1,1"), mono(4, "0,1,0,2")) > 0);
  CHECK(cmp_lex(mono(3, "0,1,1"), mono(3, "0,1,1")) == 0);
  CHECK_THROWS_AS(cmp_lex(mono(3, "1,0,0"), mono(3, "1,1,0")), DimensionError);
  CHECK_THROWS_AS(cmp_lex(mono(3, "1,0,0"), mono(2, "1,0")), DimensionError);
}

TEST_CASE("cmp_sigma examples") {
  // x_n > x_{n-1} > ... > x_1 under sigma.
  CHECK(cmp_sigma(mono(2, "1,0"), mono(2, "0,1")) < 0);
  CHECK(cmp_sigma(mono(4, "0,0,0,1"), mono(4, "0,0,1,0")) > 0);
  CHECK(cmp_sigma(mono(2, "1,1"), mono(2, "1,1")) == 0);
  // Degree dominates.
  CHECK(cmp_sigma(mono(2, "1,0"), mono(2, "1,1")) < 0);
}

TEST_CASE("cmp_sigma matches the definitional sort of M_3 in 4 variables") {
  auto slice = monomials_of_degree(4, 3);
  auto sorted_lib = slice;
  std::sort(sorted_lib.begin(), sorted_lib.end(),
            [](const Monomial& a, const Monomial& b) {
              return cmp_sigma(a, b) < 0;
            });
  auto sorted_oracle = slice;
  std::sort(sorted_oracle.begin(), sorted_oracle.end(),
            [](const Monomial& a, const Monomial& b) {
              return oracles::sigma_less(a.exponents(), b.exponents());
            });
  CHECK(sorted_lib == sorted_oracle);

  const auto pos = [&](const Monomial& m) {
    return std::find(sorted_oracle.begin(), sorted_oracle.end(), m) -
           sorted_oracle.begin();
  };
  // Positions of x2^3 and x1*x3*x4 agree with the definitional order.
  const Monomial a = mono(4, "0,3,0,0");
  const Monomial b = mono(4, "1,0,1,1");
  CHECK(((cmp_sigma(a, b) < 0) == (pos(a) < pos(b))));
}

TEST_CASE("cmp_succ examples") {
  CHECK(cmp_succ(mono(3, "0,2,0"), mono(3, "1,1,0")) > 0);   // nu1 decides
  CHECK(cmp_succ(mono(3, "1,1,0"), mono(3, "1,0,1")) > 0);   // lex tie-break
  const std::vector<std::string> expected{"0,2,0", "0,1,1", "0,0,2",
                                          "1,1,0", "1,0,1", "2,0,0"};
  auto slice = monomials_of_degree(3, 2);
  std::sort(slice.begin(), slice.end(),
            [](const Monomial& a, const Monomial& b) {
              return cmp_succ(a, b) > 0;
            });
  for (size_t i = 0; i < expected.size(); ++i)
    CHECK(slice[i].csv() == expected[i]);
}

TEST_CASE("orders are strict total orders on equal-degree slices") {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 1; d <= 3; ++d) {
      const auto slice = monomials_of_degree(n, d);
      for (const auto order : {MonomialOrder::Lex, MonomialOrder::SigmaRevLexDec,
                               MonomialOrder::Succ}) {
        for (const auto& a : slice) {
          for (const auto& b : slice) {
            const int ab = compare(order, a, b);
            const int ba = compare(order, b, a);
            CHECK(ab == -ba);
            CHECK((ab == 0) == (a == b));
          }
        }
        if (slice.size() <= 20) {
          for (const auto& a : slice)
            for (const auto& b : slice)
              for (const auto& c : slice)
                if (compare(order, a, b) > 0 && compare(order, b, c) > 0)
                  CHECK(compare(order, a, c) > 0);
        }
      }
    }
  }
}

TEST_CASE("succ agrees with lex when nu1 ties, sigma reverses revlex") {
  for (int n = 2; n <= 4; ++n) {
    const auto slice = monomials_of_degree(n, 3);
    for (const auto& a : slice) {
      for (const auto& b : slice) {
        if (a.exponent(1) == b.exponent(1))
          CHECK(cmp_succ(a, b) == cmp_lex(a, b));
        if (a != b)
          CHECK((cmp_sigma(a, b) < 0) ==
                oracles::revlex_greater(a.exponents(), b.exponents()));
      }
    }
  }
}

TEST_CASE("degree slice enumeration") {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d <= 4; ++d) {
      const auto slice = monomials_of_degree(n, d);
      CHECK(static_cast<long long>(slice.size()) ==
            oracles::comb(d + n - 1, n - 1));
      for (size_t i = 0; i + 1 < slice.size(); ++i)
        CHECK(cmp_lex(slice[i], slice[i + 1]) > 0);
      std::set<std::vector<int>> seen;
      for (const auto& m : slice) seen.insert(m.exponents());
      for (const auto& e : oracles::exponent_vectors(n, d))
        CHECK(seen.count(e) == 1);
    }
  }
}
