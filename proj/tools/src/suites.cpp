#include "cayleyspec/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <Eigen/Core>

#include "cayley/bounds.hpp"
#include "cayley/characters.hpp"
#include "cayley/eigensolver.hpp"
#include "cayley/oracle.hpp"
#include "cayley/partitions.hpp"
#include "cayley/permgroup.hpp"
#include "cayley/spectra.hpp"
#include "cayley/yor.hpp"

namespace cayleyspec {

using namespace cayley;

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (messages.size() < 10) messages.push_back(what);
}

namespace {

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

std::string params(int n, int k, int r) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + ")";
}

// Standard tableaux counted by filling 1..n one cell at a time, with no
// reference to hooks or branching.
std::uint64_t count_fillings(const std::vector<int>& target, std::vector<int>& rows,
                             int remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (rows[i] == target[i]) continue;
    if (i > 0 && rows[i] == rows[i - 1]) continue;
    ++rows[i];
    total += count_fillings(target, rows, remaining - 1);
    --rows[i];
  }
  return total;
}

Permutation class_representative(const Partition& cycle_class) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : cycle_class.parts()) {
    std::vector<int> cycle;
    for (int i = 0; i < len; ++i) cycle.push_back(next++);
    if (len > 1) cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(cycle_class.n(), cycles);
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::vector<double> distinct_values(const Spectrum& s) {
  std::vector<double> out;
  for (const auto& e : s.entries) out.push_back(e.value);
  return out;
}

bool same_values(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

// Every (n, k, r) with 1 <= r < k < n inside [n_min, n_max].
template <typename F>
void for_each_instance(int n_min, int n_max, F&& f) {
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int r = 1; r < k; ++r) f(n, k, r);
    }
  }
}

}  // namespace

SuiteResult suite_partitions(const SuiteLimits& limits) {
  SuiteResult s{"partitions"};
  const int n_max = pick(limits.n_max, 10);
  for (int n = 1; n <= n_max; ++n) {
    Integer square_sum = 0;
    for (const Partition& p : enumerate_partitions(n)) {
      const std::uint64_t dim = irrep_dimension(p);
      square_sum += Integer(dim) * dim;
      s.expect(irrep_dimension(conjugate(p)) == dim, "conjugate dimension " + p.to_string());
      s.expect(conjugate(conjugate(p)) == p, "double conjugate " + p.to_string());
      if (n >= 2) {
        std::uint64_t below = 0;
        for (const Partition& q : branch_down(p)) below += irrep_dimension(q);
        s.expect(below == dim, "branching dimension " + p.to_string());
      }
      if (n <= 8) {
        std::vector<int> rows(p.vec().size(), 0);
        s.expect(count_fillings(p.vec(), rows, n) == dim, "tableau count " + p.to_string());
        s.expect(standard_tableaux(p).size() == dim, "tableau list " + p.to_string());
      }
    }
    s.expect(square_sum == factorial(n), "sum of squared dimensions at n=" + std::to_string(n));
  }
  return s;
}

SuiteResult suite_yor(const SuiteLimits& limits) {
  SuiteResult s{"yor"};
  const int n_max = pick(limits.n_max, 7);
  std::mt19937_64 rng(20240611);
  for (int n = 2; n <= n_max; ++n) {
    std::uniform_int_distribution<std::uint64_t> any(
        0, factorial(n).convert_to<std::uint64_t>() - 1);
    const std::vector<Partition> classes = enumerate_partitions(n);
    for (const Partition& shape : enumerate_partitions(n)) {
      const IrrepEvaluator ev(shape);
      const std::string tag = " (" + shape.to_string() + ")";
      const auto id = Eigen::MatrixXd::Identity(ev.dim(), ev.dim());
      s.expect(static_cast<std::uint64_t>(ev.dim()) == irrep_dimension(shape), "dim" + tag);
      std::vector<Eigen::MatrixXd> g;
      for (int i = 1; i < n; ++i) g.push_back(ev.generator(i));
      for (int i = 0; i + 1 < n; ++i) {
        s.expect(max_abs(g[i] - g[i].transpose()) < 1e-10, "generator symmetric" + tag);
        s.expect(max_abs(g[i] * g[i] - id) < 1e-10, "generator involution" + tag);
        for (int j = i + 1; j + 1 < n; ++j) {
          if (j == i + 1) {
            s.expect(max_abs(g[i] * g[j] * g[i] - g[j] * g[i] * g[j]) < 1e-10, "braid" + tag);
          } else {
            s.expect(max_abs(g[i] * g[j] - g[j] * g[i]) < 1e-10, "far commute" + tag);
          }
        }
      }
      for (int trial = 0; trial < 100; ++trial) {
        const Permutation a = unrank_permutation(n, any(rng));
        const Permutation b = unrank_permutation(n, any(rng));
        const Eigen::MatrixXd ra = ev.evaluate(a);
        s.expect(max_abs(ev.evaluate(a * b) - ra * ev.evaluate(b)) < 1e-10,
                 "homomorphism" + tag);
        s.expect(max_abs(ra * ra.transpose() - id) < 1e-10, "orthogonal" + tag);
        s.expect(max_abs(ev.evaluate(a.inverse()) - ra.transpose()) < 1e-10, "inverse" + tag);
      }
      s.expect(max_abs(ev.evaluate(Permutation::identity(n)) - id) < 1e-12, "identity" + tag);
      for (const Partition& cls : classes) {
        const double trace = ev.evaluate(class_representative(cls)).trace();
        s.expect(std::abs(trace - static_cast<double>(character(shape, cls))) < 1e-8,
                 "trace vs character" + tag + " on (" + cls.to_string() + ")");
      }
    }
  }
  return s;
}

SuiteResult suite_characters(const SuiteLimits& limits) {
  SuiteResult s{"characters"};
  const int n_max = pick(limits.n_max, 10);
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<Partition> shapes = enumerate_partitions(n);
    for (const Partition& shape : shapes) {
      s.expect(character(shape, Partition::column(n)) ==
                   static_cast<std::int64_t>(irrep_dimension(shape)),
               "character at identity " + shape.to_string());
      if (n <= 9 && n >= 2) {
        s.expect(norm_char_ncycle(shape) == normalized_character(shape, Partition::row(n)),
                 "n-cycle closed form " + shape.to_string());
      }
      if (n <= 9 && n >= 3) {
        s.expect(norm_char_n1cycle(shape) ==
                     normalized_character(shape, Partition({n - 1, 1})),
                 "(n-1)-cycle closed form " + shape.to_string());
      }
    }
    if (n <= 8) {
      for (const Partition& cls : shapes) {
        Integer square_sum = 0;
        for (const Partition& shape : shapes) {
          const std::int64_t chi = character(shape, cls);
          square_sum += Integer(chi) * chi;
        }
        s.expect(square_sum * class_size(cls) == factorial(n),
                 "column orthogonality (" + cls.to_string() + ")");
      }
    }
  }
  return s;
}

SuiteResult suite_table2(const SuiteLimits& limits) {
  SuiteResult s{"table2"};
  const int lo = limits.n > 0 ? limits.n : 5;
  const int hi = limits.n > 0 ? limits.n : pick(limits.n_max, 9);
  for (int n = lo; n <= hi; ++n) {
    const Partition cls({n - 2, 1, 1});
    std::map<Partition, const CyclePredictionRow*> listed;
    const auto rows = n2cycle_character_table(n);
    for (const auto& row : rows) {
      s.expect(listed.emplace(row.shape, &row).second,
               "family collision at n=" + std::to_string(n) + " on " + row.shape.to_string());
    }
    for (const Partition& shape : enumerate_partitions(n)) {
      const std::int64_t chi = character(shape, cls);
      auto it = listed.find(shape);
      if (it == listed.end()) {
        s.expect(chi == 0, "unlisted shape " + shape.to_string() + " has character " +
                               std::to_string(chi));
        continue;
      }
      s.expect(chi == it->second->character, "character of " + shape.to_string());
      s.expect(Rational(irrep_dimension(shape)) == it->second->dimension,
               "dimension of " + shape.to_string());
    }
  }
  return s;
}

SuiteResult suite_slice(const SuiteLimits& limits) {
  SuiteResult s{"slice"};
  const int n_max = pick(limits.n_max, 7);
  for (int n = 5; n <= n_max; ++n) {
    const ConnectionSet slice = stabilizer_slice(enum_cycles(n, n - 1, 0), n);
    for (const Partition& shape : enumerate_partitions(n)) {
      const ShapeClass kind = classify_shape(shape);
      if (kind == ShapeClass::trivial || kind == ShapeClass::sign) continue;
      const std::vector<Rational> closed = n1cycle_slice_spectrum(shape);
      s.expect(closed == n1cycle_slice_spectrum_branching(shape),
               "closed form vs branching " + shape.to_string());
      std::vector<double> expected;
      for (const Rational& q : closed) expected.push_back(to_double(q));
      const IrrepBlock block = irrep_spectrum(shape, slice);
      s.expect(same_values(distinct_values(block.spectrum), expected, 1e-6),
               "numeric slice spectrum " + shape.to_string());
    }
  }
  return s;
}

SuiteResult suite_closed_forms(const SuiteLimits& limits) {
  SuiteResult s{"closed_forms"};
  for_each_instance(3, pick(limits.n_max, 7), [&](int n, int k, int r) {
    const IrrepBlock block = irrep_spectrum(Partition({n - 1, 1}), enum_cycles(n, k, r));
    const auto closed = standard_spectrum_closed_form(n, k, r);
    std::vector<double> expected;
    for (const auto& v : closed) expected.push_back(to_double(v.value));
    s.expect(same_values(distinct_values(block.spectrum), expected, 1e-6),
             "standard spectrum " + params(n, k, r));
    if (k == n - 1 && block.spectrum.entries.size() == closed.size()) {
      for (std::size_t i = 0; i < closed.size(); ++i) {
        s.expect(closed[i].multiplicity == block.spectrum.entries[i].multiplicity,
                 "standard multiplicity " + params(n, k, r));
      }
    }
  });
  return s;
}

SuiteResult suite_quotient(const SuiteLimits& limits) {
  SuiteResult s{"quotient"};
  for_each_instance(3, pick(limits.n_max, 7), [&](int n, int k, int r) {
    const ConnectionSet h = enum_cycles(n, k, r);
    const IntMatrix b = quotient_matrix(h);
    s.expect(b == b.transpose(), "B symmetric " + params(n, k, r));
    s.expect((b.rowwise().sum().array() == static_cast<std::int64_t>(h.size())).all(),
             "B row sums " + params(n, k, r));
    const double m = to_double(mu2(n, k, r));
    const std::vector<double> eig = sym_eigenvalues(b.cast<double>());
    s.expect(std::abs(eig[1] - m) < 1e-8, "lambda2(B) vs mu2 " + params(n, k, r));
    const IrrepBlock block = irrep_spectrum(Partition({n - 1, 1}), h);
    s.expect(std::abs(block.spectrum.entries.front().raw - m) < 1e-8,
             "standard lambda1 vs mu2 " + params(n, k, r));
  });
  return s;
}

SuiteResult suite_recurrence(const SuiteLimits& limits) {
  SuiteResult s{"recurrence"};
  const int n_max = pick(limits.n_max, 30);
  for (int n = 6; n <= n_max; ++n) {
    for (int k = 4; k <= n - 2; ++k) {
      for (int r = 1; r <= k - 2; ++r) {
        s.expect(mu2_recurrence_holds(n, k, r), "recurrence " + params(n, k, r));
      }
    }
  }
  return s;
}

SuiteResult suite_spectra(const SuiteLimits& limits) {
  SuiteResult s{"spectra"};
  SpectrumOptions options;
  options.workers = limits.workers;
  for_each_instance(3, pick(limits.n_max, 7), [&](int n, int k, int r) {
    const std::string tag = " " + params(n, k, r);
    const GraphSpectrum& g = cached_graph_spectrum(n, k, r, options);
    const double tol = options.snap_tolerance(g.degree);
    const double nf = to_double(Rational(factorial(n)));
    s.expect(g.spectrum.total_multiplicity() == factorial(n).convert_to<std::uint64_t>(),
             "total multiplicity" + tag);
    s.expect(std::abs(g.spectrum.value_sum()) < 1e-6 * nf, "trace zero" + tag);
    s.expect(g.spectrum.multiplicity_of(static_cast<double>(g.degree), tol) ==
                 static_cast<std::uint64_t>(expected_component_count(k)),
             "degree multiplicity" + tag);
    if (k % 2 == 0) {
      bool symmetric = true;
      for (const auto& e : g.spectrum.entries) {
        symmetric = symmetric && g.spectrum.multiplicity_of(-e.value, tol) == e.multiplicity;
      }
      s.expect(symmetric, "spectrum symmetric under negation" + tag);
    }
    // Transpose law: all elements share the sign (-1)^(k-1).
    const double sign = k % 2 == 0 ? -1.0 : 1.0;
    std::map<Partition, const IrrepBlock*> by_shape;
    for (const auto& b : g.blocks) by_shape[b.shape] = &b;
    for (const auto& b : g.blocks) {
      const IrrepBlock& other = *by_shape.at(conjugate(b.shape));
      std::vector<double> flipped;
      for (const auto& e : other.spectrum.entries) flipped.push_back(sign * e.value);
      std::sort(flipped.begin(), flipped.end(), std::greater<>());
      s.expect(same_values(distinct_values(b.spectrum), flipped, tol),
               "transpose law " + b.shape.to_string() + tag);
    }
    const auto alpha2 =
        strictly_second_largest(g.spectrum, g.degree, expected_component_count(k), tol);
    s.expect(alpha2.value >= to_double(mu2(n, k, r)) - tol, "alpha2 >= mu2" + tag);
  });
  return s;
}

SuiteResult suite_weyl(const SuiteLimits& limits) {
  SuiteResult s{"weyl"};
  const int n = limits.n > 0 ? limits.n : 7;
  for (int r = 1; r <= n - 2; ++r) {
    const Decomposition pieces = slice_union(enum_cycles(n, n - 1, r));
    const Decomposition difference = class_minus_slices(n, r);
    for (const Partition& shape : enumerate_partitions(n)) {
      for (const Decomposition* d : {&pieces, &difference}) {
        for (BoundKind kind : {BoundKind::weyl_upper, BoundKind::weyl_lower}) {
          const BoundCertificate c = weyl_certify(shape, *d, kind);
          s.expect(c.holds, to_log_line(c));
        }
      }
    }
  }
  return s;
}

SuiteResult suite_recursive(const SuiteLimits& limits) {
  SuiteResult s{"recursive"};
  SpectrumOptions options;
  options.workers = limits.workers;
  const int n_max = pick(limits.n_max, 7);
  for (int n = 5; n <= n_max; ++n) {
    for (int k = 3; k <= n - 2; ++k) {
      for (int r = 1; r <= k - 2; ++r) {
        const BoundCertificate c = certify_recursive_bound(n, k, r, options);
        s.expect(c.holds, to_log_line(c));
      }
    }
  }
  return s;
}

SuiteResult suite_components(const SuiteLimits& limits) {
  SuiteResult s{"components"};
  const int n_max = std::min(pick(limits.n_max, 7), kMaxOracleStructureN);
  for_each_instance(3, std::min(n_max, 6), [&](int n, int k, int r) {
    const StructureReport st = structure_check(build_graph(enum_cycles(n, k, r), limits.workers));
    s.expect(st.components == expected_component_count(k), "components " + params(n, k, r));
    if (k % 2 == 0) s.expect(st.bipartite, "even k bipartite " + params(n, k, r));
  });
  if (n_max >= 7) {
    for (int r = 1; r <= 5; ++r) {
      const StructureReport st = structure_check(build_graph(enum_cycles(7, 6, r), limits.workers));
      s.expect(st.components == 1 && st.bipartite, "connected bipartite " + params(7, 6, r));
    }
  }
  return s;
}

SuiteResult suite_oracle(const SuiteLimits& limits) {
  SuiteResult s{"oracle"};
  SpectrumOptions options;
  options.workers = limits.workers;
  const int n_max = std::min(pick(limits.n_max, 6), kMaxOracleSpectrumN);
  for (int n = 5; n <= n_max; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int r = 1; r < k; ++r) {
        const ConnectionSet h = enum_cycles(n, k, r);
        const GraphInstance g = build_graph(h, limits.workers);
        const Spectrum brute = brute_spectrum(g, options);
        const GraphSpectrum& assembled = cached_graph_spectrum(n, k, r, options);
        const SpectrumComparison cmp =
            compare_spectra(brute, assembled, options.snap_tolerance(h.size()));
        s.expect(cmp.equal, "oracle vs assembly " + params(n, k, r));
        if (n == 5) {
          const IntMatrix b = quotient_matrix(h);
          for (int i = 1; i <= n; ++i) {
            s.expect(equitable_quotient(g, i) == b,
                     "equitable quotient base " + std::to_string(i) + " " + params(n, k, r));
          }
        }
      }
    }
  }
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "partitions", "yor",     "characters", "table2",    "slice",
      "closed_forms", "quotient", "recurrence", "spectra", "weyl",
      "recursive",  "components", "oracle"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteLimits& limits) {
  static const std::map<std::string, std::function<SuiteResult(const SuiteLimits&)>> table = {
      {"partitions", suite_partitions}, {"yor", suite_yor},
      {"characters", suite_characters}, {"table2", suite_table2},
      {"slice", suite_slice},           {"closed_forms", suite_closed_forms},
      {"quotient", suite_quotient},     {"recurrence", suite_recurrence},
      {"spectra", suite_spectra},       {"weyl", suite_weyl},
      {"recursive", suite_recursive},   {"components", suite_components},
      {"oracle", suite_oracle}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second(limits);
}

}  // namespace cayleyspec
