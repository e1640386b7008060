#pragma once

#include <vector>

#include "lexseg/lexsegment.hpp"
#include "lexseg/monomial.hpp"

namespace lexseg {

/// A tableau row: weakly increasing variable indices, length d. The row
/// (a_1,...,a_d) stands for the monomial x_{a_1}...x_{a_d}.
using Row = std::vector<int>;

/// Positive iff row a denotes the lex-larger monomial (first differing
/// position holds the smaller index).
int row_cmp(const Row& a, const Row& b);

Row monomial_to_row(const Monomial& m);
Monomial row_to_monomial(int vars, const Row& row);

/// N x d matrix of variable indices: rows weakly increasing left to right and
/// weakly decreasing top to bottom in the row order. Repeated rows are
/// allowed (squares of generators are legitimate standard monomials).
struct Tableau {
  int vars = 0;
  std::vector<Row> rows;

  int height() const { return static_cast<int>(rows.size()); }
  int width() const {
    return rows.empty() ? 0 : static_cast<int>(rows.front().size());
  }
  Monomial row_monomial(int i) const { return row_to_monomial(vars, rows[i]); }
};

/// Validates shape, entry range, row monotonicity and row order.
Tableau make_tableau(int vars, std::vector<Row> rows);

/// The quadratic standardness criterion: T_a T_b is standard iff a = b or
/// there is 1 <= i <= d with a_1 = b_1, ..., a_{i-1} = b_{i-1}, a_i < b_i
/// and, when i < d, b_d <= a_{i+1}.
bool is_standard_pair(const Row& a, const Row& b);

/// Standard iff every row pair is standard.
bool is_standard(const Tableau& tableau);

/// Multiset of variable indices, kept sorted ascending.
using Support = std::vector<int>;

Support support_of(const std::vector<Monomial>& factors);

/// The unique standard tableau with the given support. The first column
/// takes the N smallest indices; blocks of equal values are then filled
/// bottom-to-top, recursing on each block with the smallest indices still
/// unused. The result is asserted standard; if the assertion ever failed the
/// construction would fall back to exhaustive search with a loud diagnostic.
Tableau standard_tableau_from_support(int vars, Support support, int rows,
                                      int cols);

/// Factors of the standard representation of the product, largest first.
/// All factors share the degree of the inputs and multiply to the same
/// product.
std::vector<Monomial> standard_representation(
    const std::vector<Monomial>& factors);

/// Normalizes the factors and reports whether every factor of the standard
/// representation stays inside the segment. Always true by the closure
/// property of lexsegment sets; exists as a runtime probe.
bool segment_closure_check(const std::vector<Monomial>& factors,
                           const LexSegmentIdeal& segment);

}  // namespace lexseg
