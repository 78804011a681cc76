#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library's combinatorics, so they give independent answers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;
using Line = std::vector<int>;  // one-line form, 1-based images

inline void partitions_into(int n, int max_part, Parts& prefix, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

// Every partition of n, largest part first, then recursively: this is
// reverse-lexicographic order.
inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

// Cells as (row, col), both 1-based.
inline std::set<std::pair<int, int>> cells(const Parts& p) {
  std::set<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    for (int j = 1; j <= p[static_cast<std::size_t>(i)]; ++j) out.insert({i + 1, j});
  }
  return out;
}

inline Parts transpose(const Parts& p) {
  std::vector<int> columns;
  for (auto [i, j] : cells(p)) {
    if (static_cast<int>(columns.size()) < j) columns.resize(static_cast<std::size_t>(j), 0);
    ++columns[static_cast<std::size_t>(j - 1)];
  }
  return columns;
}

// Cells to the right in the same row plus cells below in the same column,
// plus the cell itself.
inline int hook_by_counting(const Parts& p, int row, int col) {
  int count = 0;
  for (auto [i, j] : cells(p)) {
    if ((i == row && j >= col) || (j == col && i > row)) ++count;
  }
  return count;
}

// Standard Young tableaux counted by trying every placement of 1..n.
inline std::uint64_t count_standard_tableaux(const Parts& p) {
  const auto all = cells(p);
  std::vector<std::pair<int, int>> order(all.begin(), all.end());
  const int n = static_cast<int>(order.size());
  std::vector<int> label(order.size(), 0);
  std::uint64_t count = 0;
  auto index = [&](int i, int j) {
    auto it = std::find(order.begin(), order.end(), std::make_pair(i, j));
    return it == order.end() ? -1 : static_cast<int>(it - order.begin());
  };
  auto place = [&](auto&& self, int next) -> void {
    if (next > n) {
      ++count;
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (label[static_cast<std::size_t>(c)] != 0) continue;
      auto [i, j] = order[static_cast<std::size_t>(c)];
      const int left = index(i, j - 1);
      const int up = index(i - 1, j);
      if (left >= 0 && label[static_cast<std::size_t>(left)] == 0) continue;
      if (up >= 0 && label[static_cast<std::size_t>(up)] == 0) continue;
      label[static_cast<std::size_t>(c)] = next;
      self(self, next + 1);
      label[static_cast<std::size_t>(c)] = 0;
    }
  };
  place(place, 1);
  return count;
}

// Shapes left after deleting one cell whose removal keeps a valid diagram.
inline std::vector<Parts> remove_one_corner(const Parts& p) {
  std::vector<Parts> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Parts q = p;
    --q[i];
    if (!std::is_sorted(q.begin(), q.end(), std::greater<>())) continue;
    if (q[i] == 0) q.pop_back();
    out.push_back(q);
  }
  return out;
}

inline std::vector<Line> all_lines(int n) {
  Line line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Line> out;
  do out.push_back(line);
  while (std::next_permutation(line.begin(), line.end()));
  return out;
}

inline Parts cycle_lengths(const Line& line) {
  const int n = static_cast<int>(line.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  Parts out;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = line[static_cast<std::size_t>(x - 1)]) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// All k-cycles of S_n moving each of 1..r, by filtering the whole group.
inline std::set<Line> filter_cycles(int n, int k, int r) {
  std::set<Line> out;
  for (const Line& line : all_lines(n)) {
    Parts type = cycle_lengths(line);
    Parts want(1, k);
    want.insert(want.end(), static_cast<std::size_t>(n - k), 1);
    if (type != want) continue;
    bool moves_all = true;
    for (int p = 1; p <= r; ++p) moves_all = moves_all && line[static_cast<std::size_t>(p - 1)] != p;
    if (moves_all) out.insert(line);
  }
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}

}  // namespace oracle
