#pragma once

// Test-side oracles, implemented independently of the library code they
// check: plain enumeration and the verbatim order definitions.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "lexseg/monomial.hpp"

namespace oracles {

inline long long comb(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// All exponent vectors of length n with the given sum, by plain odometer.
inline std::vector<std::vector<int>> exponent_vectors(int n, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      e[pos] = left;
      out.push_back(e);
      e[pos] = 0;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
    e[pos] = 0;
  };
  rec(0, degree);
  return out;
}

/// a > b in lex: larger exponent at the first differing position.
inline bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

/// a > b in revlex (equal degree): smaller exponent at the last differing
/// position, exactly the s-index condition.
inline bool revlex_greater(const std::vector<int>& a,
                           const std::vector<int>& b) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

/// a < b in the decreasing revlex order: smaller degree, or equal degree and
/// a > b in revlex.
inline bool sigma_less(const std::vector<int>& a, const std::vector<int>& b) {
  long long da = 0;
  long long db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db;
  return revlex_greater(a, b);
}

/// The segment between u and v inclusive, by filtering the full slice.
inline std::vector<std::vector<int>> segment(int n, const std::vector<int>& u,
                                             const std::vector<int>& v) {
  std::vector<std::vector<int>> out;
  long long d = 0;
  for (int x : u) d += x;
  for (const auto& w : exponent_vectors(n, static_cast<int>(d))) {
    const bool below_u = w == u || lex_greater(u, w);
    const bool above_v = w == v || lex_greater(w, v);
    if (below_u && above_v) out.push_back(w);
  }
  return out;
}

using Row = std::vector<int>;

/// Row a beats row b when its first differing entry is smaller.
inline bool row_greater(const Row& a, const Row& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

/// All ways to split the sorted multiset into `rows` weakly increasing rows
/// of length `cols`, each returned with rows sorted descending.
inline std::set<std::vector<Row>> all_tableaux(const std::vector<int>& support,
                                               int rows, int cols) {
  std::set<std::vector<Row>> out;
  std::vector<Row> slots(rows);
  std::function<void(size_t)> place = [&](size_t pos) {
    if (pos == support.size()) {
      std::vector<Row> copy = slots;
      for (auto& r : copy) std::sort(r.begin(), r.end());
      std::sort(copy.begin(), copy.end(),
                [](const Row& a, const Row& b) { return row_greater(a, b); });
      out.insert(copy);
      return;
    }
    for (int r = 0; r < rows; ++r) {
      if (static_cast<int>(slots[r].size()) == cols) continue;
      slots[r].push_back(support[pos]);
      place(pos + 1);
      slots[r].pop_back();
      if (slots[r].empty()) break;  // empty rows are interchangeable
    }
  };
  place(0);
  return out;
}

/// T_A <_lex T_B on whole tableaux: rows already sorted descending, compare
/// entry by entry with row_greater.
inline bool tableau_less(const std::vector<Row>& a,
                         const std::vector<Row>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return !row_greater(a[i], b[i]);
  }
  return false;
}

/// The lex-minimal tableau of the given support: the standard one.
inline std::vector<Row> minimal_tableau(const std::vector<int>& support,
                                        int rows, int cols) {
  const auto all = all_tableaux(support, rows, cols);
  const std::vector<Row>* best = nullptr;
  for (const auto& t : all)
    if (best == nullptr || tableau_less(t, *best)) best = &t;
  return *best;
}

}  // namespace oracles
