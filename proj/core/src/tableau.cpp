#include "lexseg/tableau.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>

namespace lexseg {

namespace {

void require_row(const Row& row, const char* where) {
  if (row.empty()) throw ValidationError(std::string(where) + ": empty row");
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 1)
      throw ValidationError(std::string(where) + ": entries must be >= 1");
    if (i && row[i - 1] > row[i])
      throw ValidationError(std::string(where) +
                            ": row entries must be weakly increasing");
  }
}

}  // namespace

int row_cmp(const Row& a, const Row& b) {
  if (a.size() != b.size())
    throw DimensionError("comparing rows of different widths");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

Row monomial_to_row(const Monomial& m) {
  Row row;
  row.reserve(m.degree());
  for (int i = 1; i <= m.vars(); ++i)
    for (int k = 0; k < m.exponent(i); ++k) row.push_back(i);
  return row;
}

Monomial row_to_monomial(int vars, const Row& row) {
  std::vector<int> e(vars, 0);
  for (int idx : row) {
    if (idx < 1 || idx > vars)
      throw DimensionError("row entry " + std::to_string(idx) +
                           " outside 1.." + std::to_string(vars));
    ++e[idx - 1];
  }
  return Monomial(std::move(e));
}

Tableau make_tableau(int vars, std::vector<Row> rows) {
  if (rows.empty()) throw ValidationError("tableau needs at least one row");
  const size_t width = rows.front().size();
  for (const auto& row : rows) {
    require_row(row, "tableau");
    if (row.size() != width)
      throw ValidationError("tableau rows have unequal widths");
    if (row.back() > vars)
      throw ValidationError("tableau entry exceeds variable count");
  }
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if (row_cmp(rows[i], rows[i + 1]) < 0)
      throw ValidationError("tableau rows out of decreasing order");
  return Tableau{vars, std::move(rows)};
}

bool is_standard_pair(const Row& a, const Row& b) {
  require_row(a, "is_standard_pair");
  require_row(b, "is_standard_pair");
  if (a.size() != b.size())
    throw DimensionError("standard pair check on rows of different widths");
  const size_t d = a.size();
  size_t i = 0;
  while (i < d && a[i] == b[i]) ++i;
  if (i == d) return true;  // a = b
  if (a[i] > b[i]) return false;
  if (i + 1 == d) return true;
  // Rows are weakly increasing, so the tail condition collapses to one test.
  return b[d - 1] <= a[i + 1];
}

bool is_standard(const Tableau& tableau) {
  for (int i = 0; i < tableau.height(); ++i)
    for (int j = i + 1; j < tableau.height(); ++j)
      if (!is_standard_pair(tableau.rows[i], tableau.rows[j])) return false;
  return true;
}

Support support_of(const std::vector<Monomial>& factors) {
  Support s;
  for (const auto& f : factors) {
    const Row row = monomial_to_row(f);
    s.insert(s.end(), row.begin(), row.end());
  }
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

// Fills rows [lo,hi) from column `col` on with the sorted slice `values`:
// column `col` takes the block's smallest values ascending downward, then
// each run of equal column values recurses bottom-to-top on the next chunk
// of the remaining values.
void fill_block(std::vector<Row>& rows, int lo, int hi, int col,
                const std::vector<int>& values, int vlo, int vhi) {
  const int k = hi - lo;
  const int width = static_cast<int>(rows.front().size());
  for (int t = 0; t < k; ++t) rows[lo + t][col] = values[vlo + t];
  if (col + 1 == width) return;
  const int per_row = width - col - 1;
  int cursor = vlo + k;
  // Runs of equal column values, visited bottom-to-top.
  int run_end = hi;
  while (run_end > lo) {
    int run_begin = run_end - 1;
    while (run_begin > lo &&
           rows[run_begin - 1][col] == rows[run_end - 1][col])
      --run_begin;
    const int take = (run_end - run_begin) * per_row;
    fill_block(rows, run_begin, run_end, col + 1, values, cursor,
               cursor + take);
    cursor += take;
    run_end = run_begin;
  }
  (void)vhi;
}

// All partitions of the sorted multiset into `rows` rows of `cols`. The
// smallest remaining index anchors a row; its mates are chosen as multiset
// combinations (duplicate values skipped at each level), so every partition
// appears exactly once.
std::vector<std::vector<Row>> all_row_partitions(const Support& remaining,
                                                 int rows, int cols) {
  std::vector<std::vector<Row>> out;
  if (rows == 0) {
    if (remaining.empty()) out.push_back({});
    return out;
  }
  std::vector<size_t> picked;
  std::function<void(size_t)> pick = [&](size_t from) {
    if (static_cast<int>(picked.size()) == cols - 1) {
      Row row{remaining[0]};
      std::vector<bool> used(remaining.size(), false);
      used[0] = true;
      for (size_t idx : picked) {
        row.push_back(remaining[idx]);
        used[idx] = true;
      }
      Support rest;
      for (size_t i = 0; i < remaining.size(); ++i)
        if (!used[i]) rest.push_back(remaining[i]);
      for (auto& sub : all_row_partitions(rest, rows - 1, cols)) {
        sub.push_back(row);
        out.push_back(std::move(sub));
      }
      return;
    }
    for (size_t i = from; i < remaining.size(); ++i) {
      if (i > from && remaining[i] == remaining[i - 1]) continue;
      picked.push_back(i);
      pick(i + 1);
      picked.pop_back();
    }
  };
  pick(1);
  return out;
}

Tableau brute_force_standard(int vars, const Support& support, int rows,
                             int cols) {
  std::set<std::vector<Row>> seen;
  std::optional<Tableau> best;
  for (auto& rowset : all_row_partitions(support, rows, cols)) {
    std::sort(rowset.begin(), rowset.end(),
              [](const Row& a, const Row& b) { return row_cmp(a, b) > 0; });
    if (!seen.insert(rowset).second) continue;
    Tableau t{vars, rowset};
    if (is_standard(t)) {
      if (best)
        throw ValidationError(
            "multiple standard tableaux share one support; uniqueness broken");
      best = std::move(t);
    }
  }
  if (!best)
    throw ValidationError("no standard tableau found for the given support");
  return *best;
}

}  // namespace

Tableau standard_tableau_from_support(int vars, Support support, int rows,
                                      int cols) {
  if (rows < 1 || cols < 1)
    throw DomainError("tableau dimensions must be positive");
  if (static_cast<int>(support.size()) != rows * cols)
    throw ValidationError("support has " + std::to_string(support.size()) +
                          " indices, expected " + std::to_string(rows * cols));
  std::sort(support.begin(), support.end());
  if (support.front() < 1 || support.back() > vars)
    throw ValidationError("support index outside 1.." + std::to_string(vars));

  std::vector<Row> matrix(rows, Row(cols, 0));
  fill_block(matrix, 0, rows, 0, support, 0,
             static_cast<int>(support.size()));
  Tableau out{vars, std::move(matrix)};
  if (!is_standard(out)) {
    std::fprintf(stderr,
                 "lexseg: recursive standard-tableau construction produced a "
                 "non-standard tableau; falling back to exhaustive search\n");
    out = brute_force_standard(vars, support, rows, cols);
  }
  if (support_of([&] {
        std::vector<Monomial> ms;
        for (int i = 0; i < out.height(); ++i) ms.push_back(out.row_monomial(i));
        return ms;
      }()) != support)
    throw ValidationError("standard tableau lost part of its support");
  return out;
}

std::vector<Monomial> standard_representation(
    const std::vector<Monomial>& factors) {
  if (factors.empty())
    throw DomainError("standard representation of an empty product");
  const int n = factors.front().vars();
  const int d = factors.front().degree();
  for (const auto& f : factors) {
    if (f.vars() != n)
      throw DimensionError("factors mix ambient variable counts");
    if (f.degree() != d)
      throw DimensionError("factors mix degrees " + std::to_string(d) +
                           " and " + std::to_string(f.degree()));
  }
  if (d == 0) return factors;
  const Tableau t = standard_tableau_from_support(
      n, support_of(factors), static_cast<int>(factors.size()), d);
  std::vector<Monomial> out;
  out.reserve(factors.size());
  for (int i = 0; i < t.height(); ++i) out.push_back(t.row_monomial(i));
  return out;
}

bool segment_closure_check(const std::vector<Monomial>& factors,
                           const LexSegmentIdeal& segment) {
  for (const auto& f : factors)
    if (!segment.contains(f))
      throw ValidationError("factor " + f.pretty() +
                            " is outside the segment");
  const auto rep = standard_representation(factors);
  for (const auto& w : rep)
    if (!segment.contains(w)) return false;
  return true;
}

}  // namespace lexseg
