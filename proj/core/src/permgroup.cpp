#include "cayley/permgroup.hpp"

#include <algorithm>
#include <numeric>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

void require_degree(int n) {
  if (n < 1 || n > 255) throw ParameterError("permutation degree out of range");
}

}  // namespace

Permutation Permutation::identity(int n) {
  require_degree(n);
  std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  require_degree(n);
  std::vector<std::uint8_t> stored(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw ParameterError("one-line form is not a bijection on [n]");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    stored[i] = static_cast<std::uint8_t>(v - 1);
  }
  return Permutation(std::move(stored));
}

Permutation Permutation::from_one_line(std::initializer_list<int> images) {
  return from_one_line(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(
    int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > n || used[static_cast<std::size_t>(from - 1)]) {
        throw ParameterError("cycles are not disjoint points of [n]");
      }
      used[static_cast<std::size_t>(from - 1)] = true;
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return from_one_line(images);
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a == b) return identity(n);
  return from_cycles(n, {{a, b}});
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<std::uint8_t>(i);
  }
  return Permutation(std::move(inv));
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int transpositions = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Permutation::fixed_points() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) ++count;
  }
  return count;
}

std::uint64_t Permutation::rank() const {
  const std::size_t n = images_.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller_later = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (images_[j] < images_[i]) ++smaller_later;
    }
    rank = rank * (n - i) + smaller_later;
  }
  return rank;
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string Permutation::one_line_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw ParameterError("compose: degree mismatch");
  }
  std::vector<std::uint8_t> out(a.images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = a.images_[b.images_[x]];
  return Permutation(std::move(out));
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
  require_degree(n);
  std::vector<std::uint8_t> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
  for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * i;
  std::vector<std::uint8_t> images;
  images.reserve(pool.size());
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t index = rank / fact[static_cast<std::size_t>(i)];
    rank %= fact[static_cast<std::size_t>(i)];
    images.push_back(pool[index]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(index));
  }
  return Permutation(std::move(images));
}

Partition cycle_type(const Permutation& sigma) {
  std::vector<int> lengths;
  std::vector<bool> seen(static_cast<std::size_t>(sigma.degree()), false);
  for (int start = 0; start < sigma.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int length = 0;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = sigma.image0(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > kMaxMaterializeN) {
    throw CapExceeded("all_permutations: n must lie in [1, 8]");
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

ConnectionSet::ConnectionSet(int n, std::vector<Permutation> elements,
                             std::string label)
    : n_(n), elements_(std::move(elements)), label_(std::move(label)) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Permutation& p = elements_[i];
    if (p.degree() != n_) throw ParameterError("connection set degree mismatch");
    if (p.is_identity()) {
      throw ParameterError("connection set contains the identity");
    }
    if (i > 0 && elements_[i - 1] == p) {
      throw ParameterError("connection set contains a repeated element");
    }
  }
  for (const Permutation& p : elements_) {
    if (!contains(p.inverse())) {
      throw ParameterError("connection set is not closed under inverse");
    }
  }
}

bool ConnectionSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

Integer cycle_set_size(int n, int k, int r) {
  return binomial(n - r, k - r) * factorial(k - 1);
}

namespace {

std::string cycle_label(int n, int k, int r) {
  if (r == 0) {
    return "C(" + std::to_string(n) + "," + std::to_string(k) + ")";
  }
  return "C(" + std::to_string(n) + "," + std::to_string(k) + ";" +
         std::to_string(r) + ")";
}

}  // namespace

ConnectionSet enum_cycles(int n, int k, int r) {
  if (k < 2 || k > n || r < 0 || r >= k) {
    throw ParameterError("enum_cycles requires 2 <= k <= n and 0 <= r < k");
  }
  if (n > kMaxMaterializeN) {
    throw CapExceeded("enum_cycles: n must be at most 8 to materialize");
  }
  std::vector<Permutation> out;
  // Supports are {1..r} plus every (k - r)-subset of {r+1..n}.
  std::vector<int> rest;
  for (int x = r + 1; x <= n; ++x) rest.push_back(x);
  std::vector<bool> choose(rest.size(), false);
  std::fill(choose.begin(), choose.begin() + (k - r), true);
  do {
    std::vector<int> support;
    for (int x = 1; x <= r; ++x) support.push_back(x);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (choose[i]) support.push_back(rest[i]);
    }
    // Fix the smallest point first; the (k-1)! orderings of the rest give
    // each k-cycle on this support exactly once.
    std::vector<int> tail(support.begin() + 1, support.end());
    do {
      std::vector<int> cycle{support.front()};
      cycle.insert(cycle.end(), tail.begin(), tail.end());
      out.push_back(Permutation::from_cycles(n, {cycle}));
    } while (std::next_permutation(tail.begin(), tail.end()));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return ConnectionSet(n, std::move(out), cycle_label(n, k, r));
}

ConnectionSet stabilizer_slice(const ConnectionSet& h, int j) {
  if (j < 1 || j > h.degree()) {
    throw ParameterError("stabilizer_slice: point out of range");
  }
  std::vector<Permutation> out;
  for (const Permutation& p : h) {
    if (p.fixes(j)) out.push_back(p);
  }
  return ConnectionSet(h.degree(), std::move(out),
                       h.label() + " & G_" + std::to_string(j));
}

ConnectionSet relabel_to_subgroup(const ConnectionSet& p, int j) {
  const int n = p.degree();
  if (n < 2 || j < 1 || j > n) {
    throw ParameterError("relabel_to_subgroup: point out of range");
  }
  const Permutation swap = Permutation::transposition(n, n, j);
  std::vector<Permutation> out;
  out.reserve(p.size());
  for (const Permutation& g : p) {
    if (!g.fixes(j)) {
      throw ParameterError("relabel_to_subgroup: element " +
                           g.cycle_notation() + " does not fix " +
                           std::to_string(j));
    }
    Permutation moved = swap * g * swap;
    std::vector<int> images = moved.one_line();
    images.pop_back();
    out.push_back(Permutation::from_one_line(images));
  }
  return ConnectionSet(n - 1, std::move(out),
                       "f_" + std::to_string(j) + "(" + p.label() + ")");
}

ConnectionSet set_difference(const ConnectionSet& a, const ConnectionSet& b,
                             std::string label) {
  if (a.degree() != b.degree()) {
    throw ParameterError("set_difference: degree mismatch");
  }
  std::vector<Permutation> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ConnectionSet(a.degree(), std::move(out), std::move(label));
}

ConnectionSet conjugate_set(const ConnectionSet& h, const Permutation& c,
                            std::string label) {
  const Permutation c_inv = c.inverse();
  std::vector<Permutation> out;
  out.reserve(h.size());
  for (const Permutation& g : h) out.push_back(c * g * c_inv);
  return ConnectionSet(h.degree(), std::move(out), std::move(label));
}

IntMatrix quotient_matrix(const ConnectionSet& h) {
  const int n = h.degree();
  IntMatrix b = IntMatrix::Zero(n, n);
  for (const Permutation& p : h) {
    for (int a = 0; a < n; ++a) ++b(a, p.image0(a));
  }
  if (b != b.transpose()) {
    throw NumericalError("quotient matrix is not symmetric");
  }
  return b;
}

std::string export_one_line(const ConnectionSet& h) {
  std::string out;
  for (const Permutation& p : h) {
    out += p.one_line_string();
    out += '\n';
  }
  return out;
}

}  // namespace cayley
