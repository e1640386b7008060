#pragma once

#include <string>
#include <vector>

#include "lexseg/errors.hpp"

namespace lexseg {

/// Monomial in a fixed ambient variable set x_1 > x_2 > ... > x_n, stored as
/// an exponent vector with cached total degree.
///
/// Values are immutable after construction: products and quotients build new
/// monomials, so values can be shared freely between concurrent workers. The
/// ambient n is carried by every value; operations that mix different n throw
/// DimensionError instead of silently misbehaving.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int vars);
  /// x_index (1-based).
  static Monomial variable(int vars, int index);
  /// x_index^exp (1-based index).
  static Monomial power(int vars, int index, int exp);
  /// Parses the comma-separated exponent form, e.g. "1,0,1,1".
  static Monomial from_csv(int vars, const std::string& text);

  int vars() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  /// Exponent of x_index (1-based).
  int exponent(int index) const;
  const std::vector<int>& exponents() const { return exponents_; }

  /// Indices of variables with positive exponent, ascending.
  std::vector<int> support() const;
  int min_var() const;  // throws DomainError on the unit monomial
  int max_var() const;

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& rhs) const;
  /// Exact division; throws DomainError unless rhs divides *this.
  Monomial operator/(const Monomial& rhs) const;

  bool operator==(const Monomial& rhs) const {
    return exponents_ == rhs.exponents_;
  }
  bool operator!=(const Monomial& rhs) const { return !(*this == rhs); }

  /// Comma-separated exponent vector, the text form used by the CLI and all
  /// JSON output.
  std::string csv() const;
  /// Human form, e.g. "x1*x3^2"; "1" for the unit.
  std::string pretty() const;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

Monomial gcd(const Monomial& a, const Monomial& b);

/// The three orders used throughout:
///  - Lex: x_1 > x_2 > ... > x_n, defined on equal-degree monomials.
///  - SigmaRevLexDec: the decreasing revlex order, degree first, then the
///    reverse of revlex; makes x_n the largest variable.
///  - Succ: smaller x_1-exponent first, ties broken by Lex; defined on
///    equal-degree monomials.
enum class MonomialOrder { Lex, SigmaRevLexDec, Succ };

/// All comparators return <0, 0, >0 like strcmp; positive means a > b.
int cmp_lex(const Monomial& a, const Monomial& b);
int cmp_sigma(const Monomial& a, const Monomial& b);
int cmp_succ(const Monomial& a, const Monomial& b);
int compare(MonomialOrder order, const Monomial& a, const Monomial& b);

const char* order_name(MonomialOrder order);
MonomialOrder order_from_name(const std::string& name);

/// All monomials of the given degree in `vars` variables, lex-descending.
std::vector<Monomial> monomials_of_degree(int vars, int degree);

/// Total order for container keys only; not one of the mathematical orders.
bool key_less(const Monomial& a, const Monomial& b);

struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return key_less(a, b);
  }
};

}  // namespace lexseg
