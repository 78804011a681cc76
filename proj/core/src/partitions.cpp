#include "cayley/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "cayley/errors.hpp"

namespace cayley {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ParameterError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ParameterError("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::row(int n) { return Partition(std::vector<int>{n}); }

Partition Partition::column(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  auto read_int = [&](std::string_view token) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParameterError("malformed partition '" + std::string(text) + "'");
    }
    return value;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      int part = read_int(token.substr(0, caret));
      int times = read_int(token.substr(caret + 1));
      if (times < 0) throw ParameterError("negative exponent in partition");
      parts.insert(parts.end(), static_cast<std::size_t>(times), part);
    } else {
      parts.push_back(read_int(token));
    }
    start = end + 1;
  }
  return Partition(std::move(parts));
}

int Partition::row_length(int i) const {
  return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)]
                                   : 0;
}

int Partition::column_length(int j) const {
  if (j < 1) return 0;
  int count = 0;
  for (int part : parts_) {
    if (part >= j) ++count;
  }
  return count;
}

bool Partition::contains_cell(int i, int j) const {
  return j >= 1 && j <= row_length(i);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string_view to_string(ShapeClass shape_class) {
  switch (shape_class) {
    case ShapeClass::trivial:
      return "trivial";
    case ShapeClass::sign:
      return "sign";
    case ShapeClass::hook:
      return "hook";
    case ShapeClass::near_hook:
      return "near_hook";
    case ShapeClass::other:
      return "other";
  }
  return "other";
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1 || n > kMaxPartitionN) {
    throw ParameterError("enumerate_partitions: n must lie in [1, 12]");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> columns;
  for (int j = 1; j <= p.row_length(1); ++j) {
    columns.push_back(p.column_length(j));
  }
  return Partition(std::move(columns));
}

int hook_length(const Partition& p, int i, int j) {
  if (!p.contains_cell(i, j)) {
    throw ParameterError("hook_length: cell (" + std::to_string(i) + "," +
                         std::to_string(j) + ") outside diagram " +
                         p.to_string());
  }
  int arm = p.row_length(i) - j;
  int leg = p.column_length(j) - i;
  return arm + leg + 1;
}

std::uint64_t irrep_dimension(const Partition& p) {
  if (p.n() > kMaxPartitionN) {
    throw ParameterError("irrep_dimension: n must be at most 12");
  }
  std::uint64_t numerator = 1;
  for (int i = 2; i <= p.n(); ++i) numerator *= static_cast<std::uint64_t>(i);
  std::uint64_t hooks = 1;
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = 1; j <= p.row_length(i); ++j) {
      hooks *= static_cast<std::uint64_t>(hook_length(p, i, j));
    }
  }
  return numerator / hooks;
}

std::vector<Partition> branch_down(const Partition& p) {
  if (p.n() < 2) throw ParameterError("branch_down requires n >= 2");
  std::vector<Partition> out;
  const auto& parts = p.vec();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool corner = (i + 1 == parts.size()) || parts[i + 1] < parts[i];
    if (!corner) continue;
    std::vector<int> smaller = parts;
    if (--smaller[i] == 0) smaller.pop_back();
    out.emplace_back(std::move(smaller));
  }
  return out;
}

ShapeClass classify_shape(const Partition& p) {
  const int n = p.n();
  const auto& parts = p.vec();
  if (parts.size() == 1) return ShapeClass::trivial;
  if (parts.front() == 1) return ShapeClass::sign;
  // Only a first row longer than one and a second row of at most two cells
  // can be a hook or near hook; everything below row two must be single cells.
  bool tail_ones =
      std::all_of(parts.begin() + 2, parts.end(), [](int x) { return x == 1; });
  if (!tail_ones) return ShapeClass::other;
  if (parts[1] == 1) return ShapeClass::hook;
  if (parts[1] == 2) {
    int m = n - parts[0];
    if (m >= 2 && m <= n - 2) return ShapeClass::near_hook;
  }
  return ShapeClass::other;
}

namespace {

void fill_tableaux(const Partition& shape, int next, std::vector<int>& fill,
                   Tableau& current, std::vector<Tableau>& out) {
  if (next > shape.n()) {
    out.push_back(current);
    return;
  }
  for (int row = 0; row < shape.length(); ++row) {
    auto r = static_cast<std::size_t>(row);
    if (fill[r] >= shape.row_length(row + 1)) continue;
    if (row > 0 && fill[r - 1] <= fill[r]) continue;
    current[r].push_back(next);
    ++fill[r];
    fill_tableaux(shape, next + 1, fill, current, out);
    --fill[r];
    current[r].pop_back();
  }
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> word;
  for (const auto& row : t) word.insert(word.end(), row.begin(), row.end());
  return word;
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& p) {
  std::vector<Tableau> out;
  std::vector<int> fill(static_cast<std::size_t>(p.length()), 0);
  Tableau current(static_cast<std::size_t>(p.length()));
  fill_tableaux(p, 1, fill, current, out);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return reading_word(a) < reading_word(b);
  });
  return out;
}

}  // namespace cayley
