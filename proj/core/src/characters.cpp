#include "cayley/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

// Shapes are handled as beta-sets: beta_i = lambda_i + (L - i) for a fixed
// length L. Removing a border strip of size s moves one bead from b to b - s
// (the target must be free); the strip height is the number of beads strictly
// between the two positions.
using Key = std::pair<std::vector<int>, std::vector<int>>;

class CharacterMemo {
 public:
  std::int64_t lookup_or_compute(const std::vector<int>& shape,
                                 const std::vector<int>& cycles) {
    Key key{shape, cycles};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    std::int64_t value = compute(shape, cycles);
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
    return value;
  }

 private:
  std::int64_t compute(const std::vector<int>& shape,
                       const std::vector<int>& cycles) {
    if (cycles.empty()) return shape.empty() ? 1 : 0;
    const int strip = cycles.front();
    std::vector<int> rest(cycles.begin() + 1, cycles.end());

    const int length = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < length; ++i) {
      beta[static_cast<std::size_t>(i)] =
          shape[static_cast<std::size_t>(i)] + (length - 1 - i);
    }
    std::int64_t total = 0;
    for (int i = 0; i < length; ++i) {
      const int from = beta[static_cast<std::size_t>(i)];
      const int to = from - strip;
      if (to < 0) continue;
      if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
      int height = 0;
      for (int b : beta) {
        if (b > to && b < from) ++height;
      }
      std::vector<int> moved = beta;
      moved[static_cast<std::size_t>(i)] = to;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> smaller;
      for (int j = 0; j < length; ++j) {
        int part = moved[static_cast<std::size_t>(j)] - (length - 1 - j);
        if (part > 0) smaller.push_back(part);
      }
      const std::int64_t sub = lookup_or_compute(smaller, rest);
      total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
  }

  std::shared_mutex mutex_;
  std::map<Key, std::int64_t> table_;
};

CharacterMemo& memo() {
  static CharacterMemo instance;
  return instance;
}

void require_same_n(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) {
    throw ParameterError("shape and class partition different integers");
  }
  if (a.n() > kMaxPartitionN) {
    throw ParameterError("characters are supported for n <= 12");
  }
}

int hook_leg(const Partition& shape) {
  // m for (n-m, 1^m); -1 if not a hook (trivial and sign included).
  const auto& p = shape.vec();
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] != 1) return -1;
  }
  return static_cast<int>(p.size()) - 1;
}

int near_hook_leg(const Partition& shape) {
  // m for (n-m, 2, 1^(m-2)); -1 otherwise.
  return classify_shape(shape) == ShapeClass::near_hook
             ? shape.n() - shape.row_length(1)
             : -1;
}

std::vector<Rational> distinct_decreasing(std::vector<Rational> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace

std::int64_t character(const Partition& shape, const Partition& cycle_class) {
  require_same_n(shape, cycle_class);
  return memo().lookup_or_compute(shape.vec(), cycle_class.vec());
}

Rational normalized_character(const Partition& shape,
                              const Partition& cycle_class) {
  return Rational(character(shape, cycle_class)) /
         Rational(irrep_dimension(shape));
}

Integer class_size(const Partition& cycle_class) {
  Integer z = 1;
  std::map<int, int> counts;
  for (int part : cycle_class.parts()) ++counts[part];
  for (auto [part, count] : counts) {
    for (int i = 0; i < count; ++i) z *= part;
    z *= factorial(count);
  }
  return factorial(cycle_class.n()) / z;
}

Rational norm_char_ncycle(const Partition& shape) {
  const int n = shape.n();
  const int m = hook_leg(shape);
  if (m < 0) return 0;
  Rational value(n * factorial(n - m - 1) * factorial(m), factorial(n));
  return (m % 2 == 0) ? value : Rational(-value);
}

Rational norm_char_n1cycle(const Partition& shape) {
  const int n = shape.n();
  if (shape.length() == 1) return 1;
  if (shape.row_length(1) == 1) return (n % 2 == 0) ? 1 : -1;
  const int m = near_hook_leg(shape);
  if (m < 0) return 0;
  Rational value(Integer(n - 1) * (n - m) * factorial(n - m - 2) * m *
                     factorial(m - 2),
                 factorial(n));
  return (m % 2 == 1) ? value : Rational(-value);
}

Rational class_sum_eigenvalue(const Partition& shape,
                              const Partition& cycle_class) {
  require_same_n(shape, cycle_class);
  return Rational(class_size(cycle_class)) *
         normalized_character(shape, cycle_class);
}

std::vector<Rational> restricted_class_sum_spectrum(const Partition& shape,
                                                    const Partition& sub_class) {
  if (sub_class.n() + 1 != shape.n()) {
    throw ParameterError("sub_class must partition n - 1");
  }
  std::vector<Rational> values;
  for (const Partition& lower : branch_down(shape)) {
    values.push_back(class_sum_eigenvalue(lower, sub_class));
  }
  return distinct_decreasing(std::move(values));
}

std::vector<Rational> n1cycle_slice_spectrum(const Partition& shape) {
  const int n = shape.n();
  const ShapeClass kind = classify_shape(shape);
  if (n < 5 || kind == ShapeClass::trivial || kind == ShapeClass::sign) {
    throw ParameterError(
        "n1cycle_slice_spectrum requires n >= 5 and a shape other than (n), "
        "(1^n)");
  }
  auto signed_value = [](int exponent, Integer magnitude) {
    return Rational(exponent % 2 == 0 ? magnitude : Integer(-magnitude));
  };
  if (kind == ShapeClass::hook) {
    const int m = hook_leg(shape);
    return distinct_decreasing(
        {signed_value(m, factorial(m) * factorial(n - 2 - m)),
         signed_value(m - 1, factorial(m - 1) * factorial(n - 1 - m))});
  }
  if (kind == ShapeClass::near_hook) {
    const int m = near_hook_leg(shape);
    return distinct_decreasing(
        {signed_value(m - 1, factorial(m - 1) * factorial(n - 1 - m)),
         Rational(0)});
  }
  return {Rational(0)};
}

std::vector<Rational> n1cycle_slice_spectrum_branching(const Partition& shape) {
  const int n = shape.n();
  // Schur scalar of the full (n-1)-cycle class of S_{n-1} on each shape of
  // n - 1: (n-2)! * normalized character from the n-cycle closed form.
  std::vector<Rational> values;
  const Rational slice_size(factorial(n - 2));
  for (const Partition& lower : branch_down(shape)) {
    values.push_back(slice_size * norm_char_ncycle(lower));
  }
  return distinct_decreasing(std::move(values));
}

std::vector<CyclePredictionRow> n2cycle_character_table(int n) {
  if (n < 5 || n > kMaxPartitionN) {
    throw ParameterError("n2cycle_character_table requires 5 <= n <= 12");
  }
  const auto parity = [](int e) -> std::int64_t { return e % 2 == 0 ? 1 : -1; };
  auto ones = [](int count) { return std::vector<int>(static_cast<std::size_t>(count), 1); };
  auto concat = [](std::vector<int> head, const std::vector<int>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return Partition(std::move(head));
  };
  const Rational half_n_n3(Integer(n) * (n - 3), 2);

  std::vector<CyclePredictionRow> rows;
  rows.push_back({"(n)", Partition::row(n), 1, 1});
  rows.push_back({"(1^n)", Partition::column(n), 1, parity(n - 1)});
  rows.push_back({"(n-1,1)", Partition({n - 1, 1}), n - 1, 1});
  rows.push_back({"(2,1^(n-2))", concat({2}, ones(n - 2)), n - 1, parity(n - 1)});
  rows.push_back({"(n-2,2)", Partition({n - 2, 2}), half_n_n3, -1});
  rows.push_back({"(2^2,1^(n-4))", concat({2, 2}, ones(n - 4)), half_n_n3, parity(n)});
  for (int m = 3; m <= n - 3; ++m) {
    Rational dim(factorial(n),
                 Integer(2) * m * (n - 2) * (n - m) * (n - m - 1) *
                     factorial(m - 3) * factorial(n - m - 3));
    rows.push_back({"(n-m,3,1^(m-3))", concat({n - m, 3}, ones(m - 3)), dim,
                    parity(m)});
  }
  for (int m = 4; m <= n - 2; ++m) {
    Rational dim(factorial(n),
                 Integer(2) * (m - 1) * (m - 2) * (n - 2) * (n - m + 1) *
                     factorial(m - 4) * factorial(n - m - 2));
    rows.push_back({"(n-m,2^2,1^(m-4))", concat({n - m, 2, 2}, ones(m - 4)), dim,
                    parity(m)});
  }
  return rows;
}

}  // namespace cayley
