#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

/// Largest n for which partition combinatorics are supported.
inline constexpr int kMaxPartitionN = 12;

/// A weakly decreasing sequence of positive integers. Stored dense (no
/// trailing zeros). Rows and columns are addressed 1-based, matching the
/// usual (i, j) cell convention for Young diagrams.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// (n) and (1^n).
  static Partition row(int n);
  static Partition column(int n);

  /// Parses "4,2,1" and the shorthand "4,2,1^3".
  static Partition parse(std::string_view text);

  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  /// Length of row i (1-based); zero beyond the last row.
  int row_length(int i) const;
  /// Length of column j (1-based); zero beyond the first row.
  int column_length(int j) const;
  bool contains_cell(int i, int j) const;

  /// Comma-joined parts with exponents expanded, e.g. "2,1,1,1".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

enum class ShapeClass { trivial, sign, hook, near_hook, other };

std::string_view to_string(ShapeClass shape_class);

/// All partitions of n in reverse-lexicographic order, starting from (n).
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& p);

/// arm + leg + 1 of the cell (i, j), 1-based.
int hook_length(const Partition& p, int i, int j);

/// Hook formula n! / prod h(i, j), exact.
std::uint64_t irrep_dimension(const Partition& p);

/// Shapes of n-1 obtained by removing one corner cell, top row first.
std::vector<Partition> branch_down(const Partition& p);

ShapeClass classify_shape(const Partition& p);

/// Standard Young tableau stored row by row; entries are 1..n.
using Tableau = std::vector<std::vector<int>>;

/// Standard Young tableaux of the shape, ordered lexicographically by their
/// row-reading word (rows concatenated top to bottom).
std::vector<Tableau> standard_tableaux(const Partition& p);

}  // namespace cayley
