#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cayley/exact.hpp"
#include "cayley/partitions.hpp"

namespace cayley {

/// Largest degree for which connection sets are materialized.
inline constexpr int kMaxMaterializeN = 8;

using IntMatrix =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Element of S_n in one-line form. Points are 1-based in the public API;
/// storage is 0-based. Composition is right to left: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  /// images[i] = sigma(i + 1), all values in [1, n].
  static Permutation from_one_line(std::span<const int> images);
  static Permutation from_one_line(std::initializer_list<int> images);
  /// Product of disjoint cycles written with 1-based points.
  static Permutation from_cycles(int n,
                                 const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  /// sigma(point), 1-based.
  int operator()(int point) const { return images_[point - 1] + 1; }
  /// 0-based access used by hot loops.
  int image0(int i) const { return images_[static_cast<std::size_t>(i)]; }

  std::vector<int> one_line() const;
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;
  bool fixes(int point) const { return (*this)(point) == point; }
  int fixed_points() const;

  /// Lexicographic rank of the one-line form among all of S_n.
  std::uint64_t rank() const;

  /// "(1 2 3)(4 5)"; the identity prints as "()".
  std::string cycle_notation() const;
  /// Space-separated images, e.g. "2 3 1".
  std::string one_line_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<std::uint8_t> images)
      : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;

  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation unrank_permutation(int n, std::uint64_t rank);
};

/// (a o b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

Permutation unrank_permutation(int n, std::uint64_t rank);

/// Cycle lengths including fixed points, sorted decreasing.
Partition cycle_type(const Permutation& sigma);

/// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// Inverse-closed, identity-free set of distinct permutations of one degree,
/// kept sorted by one-line form.
class ConnectionSet {
 public:
  ConnectionSet(int n, std::vector<Permutation> elements, std::string label);

  int degree() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::span<const Permutation> elements() const { return elements_; }
  const std::string& label() const { return label_; }
  bool contains(const Permutation& p) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::string label_;
};

/// |C(n, k; r)| = C(n - r, k - r) * (k - 1)!.
Integer cycle_set_size(int n, int k, int r);

/// All k-cycles of S_n whose support contains {1, ..., r}. r = 0 gives the
/// full class C(n, k).
ConnectionSet enum_cycles(int n, int k, int r);

/// Elements of H fixing j.
ConnectionSet stabilizer_slice(const ConnectionSet& h, int j);

/// Conjugates by the transposition (n j) and drops the fixed point n, giving
/// a connection set on n - 1 points.
ConnectionSet relabel_to_subgroup(const ConnectionSet& p, int j);

/// a \ b; both must have the same degree.
ConnectionSet set_difference(const ConnectionSet& a, const ConnectionSet& b,
                             std::string label);

/// Image of every element under x -> c x c^-1.
ConnectionSet conjugate_set(const ConnectionSet& h, const Permutation& c,
                            std::string label);

/// B[a][b] = #{h in H : h(a) = b}, 0-based indices. Rows sum to |H|.
IntMatrix quotient_matrix(const ConnectionSet& h);

/// One line per element: space-separated 1-based images.
std::string export_one_line(const ConnectionSet& h);

}  // namespace cayley
