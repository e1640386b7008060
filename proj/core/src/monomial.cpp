#include "lexseg/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <sstream>

namespace lexseg {

namespace {

int checked_degree(const std::vector<int>& exponents) {
  long long total = 0;
  for (int e : exponents) {
    if (e < 0) throw ValidationError("negative exponent in monomial");
    total += e;
  }
  if (total > std::numeric_limits<int>::max())
    throw OverflowError("monomial degree overflows");
  return static_cast<int>(total);
}

void require_same_vars(const Monomial& a, const Monomial& b,
                       const char* where) {
  if (a.vars() != b.vars())
    throw DimensionError(std::string(where) + ": ambient variable counts " +
                         std::to_string(a.vars()) + " and " +
                         std::to_string(b.vars()) + " do not match");
}

void require_same_degree(const Monomial& a, const Monomial& b,
                         const char* where) {
  if (a.degree() != b.degree())
    throw DimensionError(std::string(where) + ": degrees " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()) + " do not match");
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.empty())
    throw ValidationError("monomial needs at least one variable");
  degree_ = checked_degree(exponents_);
}

Monomial Monomial::one(int vars) {
  if (vars < 1) throw ValidationError("variable count must be positive");
  return Monomial(std::vector<int>(vars, 0));
}

Monomial Monomial::variable(int vars, int index) {
  return power(vars, index, 1);
}

Monomial Monomial::power(int vars, int index, int exp) {
  if (vars < 1) throw ValidationError("variable count must be positive");
  if (index < 1 || index > vars)
    throw DimensionError("variable index " + std::to_string(index) +
                         " outside 1.." + std::to_string(vars));
  std::vector<int> e(vars, 0);
  e[index - 1] = exp;
  return Monomial(std::move(e));
}

Monomial Monomial::from_csv(int vars, const std::string& text) {
  std::vector<int> exps;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw ValidationError("empty exponent in '" + text + "'");
    int value = 0;
    const char* first = tok.data() + b;
    const char* last = tok.data() + e + 1;
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
      throw ValidationError("bad exponent '" + tok + "' in '" + text + "'");
    exps.push_back(value);
  }
  if (static_cast<int>(exps.size()) != vars)
    throw DimensionError("exponent vector '" + text + "' has " +
                         std::to_string(exps.size()) + " entries, expected " +
                         std::to_string(vars));
  return Monomial(std::move(exps));
}

int Monomial::exponent(int index) const {
  if (index < 1 || index > vars())
    throw DimensionError("variable index " + std::to_string(index) +
                         " outside 1.." + std::to_string(vars()));
  return exponents_[index - 1];
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int i = 0; i < vars(); ++i)
    if (exponents_[i] > 0) out.push_back(i + 1);
  return out;
}

int Monomial::min_var() const {
  for (int i = 0; i < vars(); ++i)
    if (exponents_[i] > 0) return i + 1;
  throw DomainError("min(u) is undefined for the unit monomial");
}

int Monomial::max_var() const {
  for (int i = vars() - 1; i >= 0; --i)
    if (exponents_[i] > 0) return i + 1;
  throw DomainError("max(u) is undefined for the unit monomial");
}

bool Monomial::divides(const Monomial& other) const {
  require_same_vars(*this, other, "divides");
  for (int i = 0; i < vars(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  require_same_vars(*this, rhs, "product");
  std::vector<int> e(exponents_);
  for (int i = 0; i < vars(); ++i) {
    const long long sum =
        static_cast<long long>(e[i]) + rhs.exponents_[i];
    if (sum > std::numeric_limits<int>::max())
      throw OverflowError("exponent overflow in product");
    e[i] = static_cast<int>(sum);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  require_same_vars(*this, rhs, "quotient");
  std::vector<int> e(exponents_);
  for (int i = 0; i < vars(); ++i) {
    e[i] -= rhs.exponents_[i];
    if (e[i] < 0)
      throw DomainError("quotient " + pretty() + " / " + rhs.pretty() +
                        " is not a monomial");
  }
  return Monomial(std::move(e));
}

std::string Monomial::csv() const {
  std::string out;
  for (int i = 0; i < vars(); ++i) {
    if (i) out += ',';
    out += std::to_string(exponents_[i]);
  }
  return out;
}

std::string Monomial::pretty() const {
  if (is_one()) return "1";
  std::string out;
  for (int i = 0; i < vars(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "gcd");
  std::vector<int> e(a.vars());
  for (int i = 0; i < a.vars(); ++i)
    e[i] = std::min(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

int cmp_lex(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "cmp_lex");
  require_same_degree(a, b, "cmp_lex");
  for (int i = 0; i < a.vars(); ++i) {
    if (a.exponents()[i] != b.exponents()[i])
      return a.exponents()[i] > b.exponents()[i] ? 1 : -1;
  }
  return 0;
}

int cmp_sigma(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "cmp_sigma");
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  // Equal degree: a <_sigma b iff a >_revlex b, i.e. a has the smaller
  // exponent at the last position where they differ.
  for (int i = a.vars() - 1; i >= 0; --i) {
    if (a.exponents()[i] != b.exponents()[i])
      return a.exponents()[i] < b.exponents()[i] ? -1 : 1;
  }
  return 0;
}

int cmp_succ(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "cmp_succ");
  require_same_degree(a, b, "cmp_succ");
  if (a.exponents()[0] != b.exponents()[0])
    return a.exponents()[0] < b.exponents()[0] ? 1 : -1;
  return cmp_lex(a, b);
}

int compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  switch (order) {
    case MonomialOrder::Lex:
      return cmp_lex(a, b);
    case MonomialOrder::SigmaRevLexDec:
      return cmp_sigma(a, b);
    case MonomialOrder::Succ:
      return cmp_succ(a, b);
  }
  throw ValidationError("unknown monomial order");
}

const char* order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Lex:
      return "lex";
    case MonomialOrder::SigmaRevLexDec:
      return "revlex-dec";
    case MonomialOrder::Succ:
      return "succ";
  }
  return "?";
}

MonomialOrder order_from_name(const std::string& name) {
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "revlex-dec") return MonomialOrder::SigmaRevLexDec;
  if (name == "succ") return MonomialOrder::Succ;
  throw ValidationError("unknown order name '" + name + "'");
}

std::vector<Monomial> monomials_of_degree(int vars, int degree) {
  if (vars < 1) throw ValidationError("variable count must be positive");
  if (degree < 0) throw ValidationError("degree must be non-negative");
  std::vector<Monomial> out;
  std::vector<int> e(vars, 0);
  // Larger exponents on earlier variables first gives lex-descending order.
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == vars - 1) {
      e[pos] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[pos] = k;
      rec(pos + 1, remaining - k);
    }
    e[pos] = 0;
  };
  rec(0, degree);
  return out;
}

bool key_less(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars()) return a.vars() < b.vars();
  return a.exponents() < b.exponents();
}

}  // namespace lexseg
