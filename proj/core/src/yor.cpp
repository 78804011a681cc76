#include "cayley/yor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "cayley/errors.hpp"

namespace cayley {

std::vector<int> adjacent_word(const Permutation& sigma) {
  // Sorting the one-line form with adjacent swaps: swapping positions i, i+1
  // replaces sigma by sigma * s_i. Once sorted, sigma s_{j1} ... s_{jL} = e,
  // so sigma = s_{jL} ... s_{j1}.
  std::vector<int> line = sigma.one_line();
  std::vector<int> swaps;
  const int n = static_cast<int>(line.size());
  for (int target = 0; target < n; ++target) {
    auto pos = static_cast<int>(
        std::find(line.begin() + target, line.end(), target + 1) -
        line.begin());
    for (int p = pos; p > target; --p) {
      std::swap(line[static_cast<std::size_t>(p - 1)],
                line[static_cast<std::size_t>(p)]);
      swaps.push_back(p);  // positions p-1, p (0-based) = letter s_p
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

namespace {

struct CellPosition {
  int row;
  int col;
};

std::vector<CellPosition> positions_of(const Tableau& t, int n) {
  std::vector<CellPosition> where(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      where[static_cast<std::size_t>(t[r][c])] = {static_cast<int>(r),
                                                  static_cast<int>(c)};
    }
  }
  return where;
}

}  // namespace

IrrepEvaluator::IrrepEvaluator(Partition shape, std::size_t dim_cap)
    : shape_(std::move(shape)) {
  const int n = shape_.n();
  if (n < 1 || n > kMaxEvaluatorN) {
    throw ParameterError("IrrepEvaluator: shape must partition n in [1, 8]");
  }
  const std::uint64_t dim = irrep_dimension(shape_);
  if (dim > dim_cap) {
    throw CapExceeded("irrep " + shape_.to_string() + " has dimension " +
                      std::to_string(dim) + " above cap " +
                      std::to_string(dim_cap));
  }
  tableaux_ = standard_tableaux(shape_);
  dim_ = static_cast<int>(tableaux_.size());

  std::map<Tableau, int> index;
  for (int t = 0; t < dim_; ++t) index.emplace(tableaux_[static_cast<std::size_t>(t)], t);

  actions_.resize(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int i = 1; i < n; ++i) {
    GeneratorAction& action = actions_[static_cast<std::size_t>(i - 1)];
    action.diagonal.assign(static_cast<std::size_t>(dim_), 0.0);
    action.partner.assign(static_cast<std::size_t>(dim_), -1);
    action.coupling.assign(static_cast<std::size_t>(dim_), 0.0);
    for (int t = 0; t < dim_; ++t) {
      const Tableau& tab = tableaux_[static_cast<std::size_t>(t)];
      auto where = positions_of(tab, n);
      CellPosition a = where[static_cast<std::size_t>(i)];
      CellPosition b = where[static_cast<std::size_t>(i + 1)];
      int axial = (b.col - b.row) - (a.col - a.row);
      double inv = 1.0 / axial;
      action.diagonal[static_cast<std::size_t>(t)] = inv;
      if (a.row != b.row && a.col != b.col) {
        Tableau swapped = tab;
        swapped[static_cast<std::size_t>(a.row)][static_cast<std::size_t>(a.col)] = i + 1;
        swapped[static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col)] = i;
        action.partner[static_cast<std::size_t>(t)] = index.at(swapped);
        action.coupling[static_cast<std::size_t>(t)] = std::sqrt(1.0 - inv * inv);
      }
    }
  }
}

Eigen::MatrixXd IrrepEvaluator::generator(int i) const {
  if (i < 1 || i >= degree()) throw ParameterError("generator index out of range");
  RowMatrix m = RowMatrix::Identity(dim_, dim_);
  apply_left(i, m);
  return m;
}

void IrrepEvaluator::apply_left(int letter, RowMatrix& m) const {
  const GeneratorAction& action = actions_[static_cast<std::size_t>(letter - 1)];
  for (int t = 0; t < dim_; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    const int p = action.partner[ut];
    if (p < 0) {
      if (action.diagonal[ut] != 1.0) m.row(t) *= action.diagonal[ut];
    } else if (p > t) {
      const auto up = static_cast<std::size_t>(p);
      const double c = action.coupling[ut];
      const double dt = action.diagonal[ut];
      const double dp = action.diagonal[up];
      for (int col = 0; col < dim_; ++col) {
        const double xt = m(t, col);
        const double xp = m(p, col);
        m(t, col) = dt * xt + c * xp;
        m(p, col) = c * xt + dp * xp;
      }
    }
  }
}

Eigen::MatrixXd IrrepEvaluator::evaluate(const Permutation& sigma) const {
  if (sigma.degree() != degree()) {
    throw ParameterError("evaluate: permutation degree mismatch");
  }
  RowMatrix m = RowMatrix::Identity(dim_, dim_);
  // rho(sigma) = G_{w0} ... G_{w(L-1)}: apply the rightmost factor first.
  std::vector<int> word = adjacent_word(sigma);
  for (auto it = word.rbegin(); it != word.rend(); ++it) apply_left(*it, m);
  return m;
}

void IrrepEvaluator::accumulate(const Permutation& sigma, RowMatrix& scratch,
                                RowMatrix& total) const {
  scratch.setIdentity();
  std::vector<int> word = adjacent_word(sigma);
  for (auto it = word.rbegin(); it != word.rend(); ++it) apply_left(*it, scratch);
  total += scratch;
}

Eigen::MatrixXd IrrepEvaluator::sum_over_set(const ConnectionSet& h,
                                             int workers) const {
  if (h.degree() != degree()) {
    throw ParameterError("sum_over_set: connection set degree mismatch");
  }
  constexpr std::size_t kChunk = 64;
  const auto elements = h.elements();
  const std::size_t chunks = (elements.size() + kChunk - 1) / kChunk;
  std::vector<RowMatrix> partial(chunks, RowMatrix::Zero(dim_, dim_));

  auto run_chunks = [&](std::size_t first, std::size_t stride) {
    RowMatrix scratch(dim_, dim_);
    for (std::size_t c = first; c < chunks; c += stride) {
      const std::size_t end = std::min(elements.size(), (c + 1) * kChunk);
      for (std::size_t e = c * kChunk; e < end; ++e) {
        accumulate(elements[e], scratch, partial[c]);
      }
    }
  };

  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || chunks < 2) {
    run_chunks(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(threads, chunks); ++w) {
      pool.emplace_back(run_chunks, w, std::min(threads, chunks));
    }
    for (auto& t : pool) t.join();
  }

  RowMatrix total = RowMatrix::Zero(dim_, dim_);
  for (const RowMatrix& p : partial) total += p;
  return total;
}

IrrepEvaluator build_evaluator(const Partition& shape, std::size_t dim_cap) {
  return IrrepEvaluator(shape, dim_cap);
}

}  // namespace cayley
