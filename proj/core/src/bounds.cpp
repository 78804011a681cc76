#include "cayley/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

#include "cayley/characters.hpp"
#include "cayley/eigensolver.hpp"
#include "cayley/errors.hpp"

namespace cayley {

Rational mu2(int n, int k, int r) {
  if (!(1 <= r && r < k && k < n)) {
    throw ParameterError("mu2 requires 1 <= r < k < n");
  }
  const Rational scale = Rational(factorial(k - 2) * binomial(n - r, k - r), n - r);
  const Rational inner = Rational((k - 1) * (n - k)) -
                         Rational((k - r - 1) * (k - r), n - r - 1);
  return scale * inner;
}

bool mu2_recurrence_holds(int n, int k, int r) {
  if (!(1 <= r && r <= k - 2 && k <= n - 2)) {
    throw ParameterError("the recurrence needs 1 <= r <= k-2 and k <= n-2");
  }
  return mu2(n, k, r) == mu2(n - 1, k, r) + mu2(n, k, r + 1);
}

std::vector<ClosedFormValue> standard_spectrum_closed_form(int n, int k, int r) {
  if (!(1 <= r && r < k && k < n && n >= 3)) {
    throw ParameterError("standard_spectrum_closed_form requires 1 <= r < k < n");
  }
  std::vector<ClosedFormValue> out;
  if (k == n - 1) {
    const Integer unit = factorial(n - 3);
    if (r == 1) {
      out.push_back({Rational(unit), static_cast<std::uint64_t>(n - 2)});
      out.push_back({Rational(-factorial(n - 2)), 1});
    } else {
      out.push_back({Rational(r * unit), static_cast<std::uint64_t>(n - r - 1)});
      out.push_back({Rational((2 * r - n) * unit), 1});
      out.push_back({Rational((r - n) * unit), static_cast<std::uint64_t>(r - 1)});
    }
  } else {
    const Integer base = factorial(k - 2) * binomial(n - r, k - r);
    out.push_back({mu2(n, k, r), std::nullopt});
    if (r == 1) {
      out.push_back({Rational(-factorial(k - 2) * binomial(n - 2, k - 2)), std::nullopt});
    } else {
      out.push_back({Rational(base) * (Rational(r * (n - k), n - r) - 1), std::nullopt});
      out.push_back({Rational(-base), std::nullopt});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.value > b.value; });
  // Coinciding values merge; multiplicities add when known.
  std::vector<ClosedFormValue> merged;
  for (const auto& v : out) {
    if (!merged.empty() && merged.back().value == v.value) {
      if (merged.back().multiplicity && v.multiplicity) {
        *merged.back().multiplicity += *v.multiplicity;
      }
      continue;
    }
    merged.push_back(v);
  }
  return merged;
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::weyl_upper: return "weyl_upper";
    case BoundKind::weyl_lower: return "weyl_lower";
    case BoundKind::hhc_level2: return "hhc_level2";
    case BoundKind::hhc_level3: return "hhc_level3";
  }
  return "?";
}

Decomposition slice_union(const ConnectionSet& h) {
  const int n = h.degree();
  for (const Permutation& p : h) {
    if (p.fixed_points() != 1) {
      throw ParameterError("slice_union: " + p.cycle_notation() +
                           " does not fix exactly one point");
    }
  }
  Decomposition d{Decomposition::Form::disjoint_union, h, {}, ""};
  std::string joined;
  for (int j = 1; j <= n; ++j) {
    ConnectionSet slice = stabilizer_slice(h, j);
    if (slice.empty()) continue;
    if (!joined.empty()) joined += " + ";
    joined += "P" + std::to_string(j);
    d.parts.push_back(std::move(slice));
  }
  d.description = h.label() + " = " + joined;
  return d;
}

Decomposition class_minus_slices(int n, int r) {
  if (!(1 <= r && r <= n - 2)) {
    throw ParameterError("class_minus_slices requires 1 <= r <= n-2");
  }
  ConnectionSet full = enum_cycles(n, n - 1, 0);
  Decomposition d{Decomposition::Form::difference, enum_cycles(n, n - 1, r), {full}, ""};
  std::string joined;
  for (int j = 1; j <= r; ++j) {
    if (!joined.empty()) joined += " + ";
    joined += "P" + std::to_string(j);
    d.parts.push_back(stabilizer_slice(full, j));
  }
  d.description = d.whole.label() + " = " + full.label() + " \\ (" + joined + ")";
  return d;
}

Decomposition chain_step(const ConnectionSet& h, int j) {
  ConnectionSet fixing = stabilizer_slice(h, j);
  ConnectionSet moving = set_difference(h, fixing, h.label() + " moving " + std::to_string(j));
  Decomposition d{Decomposition::Form::disjoint_union, h, {fixing, moving}, ""};
  d.description = h.label() + " = (fixing " + std::to_string(j) + ") + (moving " +
                  std::to_string(j) + ")";
  return d;
}

std::string to_log_line(const BoundCertificate& c) {
  char numbers[96];
  std::snprintf(numbers, sizeof numbers, "bound=%.10g computed=%.10g", c.bound,
                c.computed);
  return "target=" + c.target + " kind=" + std::string(to_string(c.kind)) +
         " decomposition=\"" + c.decomposition + "\" " + numbers +
         " holds=" + (c.holds ? "true" : "false");
}

namespace {

struct Extremes {
  double top = 0.0;
  double bottom = 0.0;
};

std::vector<Permutation> sorted_union(const std::vector<ConnectionSet>& sets,
                                      std::size_t first) {
  std::vector<Permutation> all;
  for (std::size_t i = first; i < sets.size(); ++i) {
    all.insert(all.end(), sets[i].begin(), sets[i].end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

void validate(const Decomposition& d) {
  if (d.parts.empty()) throw ParameterError("decomposition has no parts");
  for (const ConnectionSet& p : d.parts) {
    if (p.degree() != d.whole.degree()) {
      throw ParameterError("decomposition parts differ in degree");
    }
  }
  const std::vector<Permutation> whole(d.whole.begin(), d.whole.end());
  if (d.form == Decomposition::Form::disjoint_union) {
    if (sorted_union(d.parts, 0) != whole) {
      throw ParameterError("parts are not a disjoint cover of the whole set");
    }
    return;
  }
  const ConnectionSet& minuend = d.parts.front();
  std::vector<Permutation> removed = sorted_union(d.parts, 1);
  std::vector<Permutation> expected;
  std::set_difference(minuend.begin(), minuend.end(), whole.begin(), whole.end(),
                      std::back_inserter(expected));
  if (removed != expected ||
      !std::includes(minuend.begin(), minuend.end(), whole.begin(), whole.end())) {
    throw ParameterError("subtracted parts do not account for minuend minus whole");
  }
}

// The point j when the set is every (n-1)-cycle fixing j, otherwise 0.
int full_slice_point(const ConnectionSet& s) {
  const int n = s.degree();
  if (s.empty() || Integer(s.size()) != factorial(n - 2)) return 0;
  int j = 0;
  for (const Permutation& p : s) {
    if (p.fixed_points() != 1) return 0;
    int fixed = 1;
    while (!p.fixes(fixed)) ++fixed;
    if (j == 0) j = fixed;
    if (fixed != j) return 0;
  }
  return j;
}

Extremes block_extremes(const Partition& shape, const ConnectionSet& s,
                        const SpectrumOptions& options) {
  if (s.empty()) return {};
  const ShapeClass kind = classify_shape(shape);
  if (shape.n() >= 5 && kind != ShapeClass::trivial && kind != ShapeClass::sign &&
      full_slice_point(s) != 0) {
    std::vector<Rational> values = n1cycle_slice_spectrum(shape);
    return {to_double(values.front()), to_double(values.back())};
  }
  IrrepBlock block = irrep_spectrum(shape, s, options);
  if (block.skipped) return {block.upper_bound, block.lower_bound};
  return {block.spectrum.largest(), block.spectrum.smallest()};
}

}  // namespace

BoundCertificate weyl_certify(const Partition& shape, const Decomposition& d,
                              BoundKind kind, const SpectrumOptions& options) {
  if (kind != BoundKind::weyl_upper && kind != BoundKind::weyl_lower) {
    throw ParameterError("weyl_certify handles the weyl_upper and weyl_lower kinds");
  }
  validate(d);
  const bool upper = kind == BoundKind::weyl_upper;
  const Extremes whole = block_extremes(shape, d.whole, options);

  double bound = 0.0;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const Extremes part = block_extremes(shape, d.parts[i], options);
    const bool subtracted = d.form == Decomposition::Form::difference && i > 0;
    if (upper) {
      bound += subtracted ? -part.bottom : part.top;
    } else {
      bound += subtracted ? -part.top : part.bottom;
    }
  }
  BoundCertificate c;
  c.target = shape.to_string() + "@" + d.whole.label();
  c.kind = kind;
  c.decomposition = d.description;
  c.bound = bound;
  c.computed = upper ? whole.top : whole.bottom;
  const double tol = options.snap_tolerance(d.whole.size());
  c.holds = upper ? c.computed <= bound + tol : c.computed >= bound - tol;
  return c;
}

const GraphSpectrum& cached_graph_spectrum(int n, int k, int r,
                                           const SpectrumOptions& options) {
  using Key = std::tuple<int, int, int, double, std::size_t>;
  static std::mutex mutex;
  static std::map<Key, GraphSpectrum> memo;
  const Key key{n, k, r, options.tol, options.dim_cap};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  GraphSpectrum computed = assemble_graph_spectrum(enum_cycles(n, k, r), options);
  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(computed)).first->second;
}

double recursive_upper_bound(int n, int k, int r, int level,
                             const SpectrumOptions& options) {
  if (!(1 <= r && r <= k - 2 && k <= n - 2)) {
    throw ParameterError("recursive_upper_bound requires 1 <= r <= k-2 and k <= n-2");
  }
  const int expected = k % 2 == 0 ? 2 : 3;
  if (level != expected) {
    throw ParameterError("level " + std::to_string(level) + " does not apply to k = " +
                         std::to_string(k) + "; use level " + std::to_string(expected));
  }
  const auto lvl = static_cast<std::uint64_t>(level);
  const GraphSpectrum& sub = cached_graph_spectrum(n - 1, k, r, options);
  const GraphSpectrum& rest = cached_graph_spectrum(n, k, r + 1, options);
  if (sub.partial || rest.partial) {
    throw CapExceeded("recursive_upper_bound: sub-instance spectrum is partial");
  }
  return sub.spectrum.at_level(lvl) + rest.spectrum.at_level(lvl);
}

std::optional<double> largest_non_quotient_eigenvalue(const GraphSpectrum& graph,
                                                      const ConnectionSet& h,
                                                      const SpectrumOptions& options) {
  const IntMatrix b = quotient_matrix(h);
  const Spectrum quotient = Spectrum::from_values(
      sym_eigenvalues(b.cast<double>()), options.cluster_gap(h.size()),
      options.snap_tolerance(h.size()));
  const double tol = options.snap_tolerance(h.size());
  // With only even generators the sign-twisted coset partition is equitable
  // too, with the same quotient, so B's spectrum is carried twice.
  const bool all_even = std::all_of(h.begin(), h.end(),
                                    [](const Permutation& p) { return p.sign() == 1; });
  const std::uint64_t copies = all_even ? 2 : 1;
  for (const SpectrumEntry& e : graph.spectrum.entries) {
    if (e.multiplicity > copies * quotient.multiplicity_of(e.value, tol)) return e.value;
  }
  return std::nullopt;
}

BoundCertificate certify_recursive_bound(int n, int k, int r,
                                         const SpectrumOptions& options) {
  const int level = k % 2 == 0 ? 2 : 3;
  BoundCertificate c;
  c.target = "Cay(S_" + std::to_string(n) + ",C(" + std::to_string(n) + "," +
             std::to_string(k) + ";" + std::to_string(r) + "))";
  c.kind = level == 2 ? BoundKind::hhc_level2 : BoundKind::hhc_level3;
  c.decomposition = "C(" + std::to_string(n) + "," + std::to_string(k) + ";" +
                    std::to_string(r) + ") = (fixing " + std::to_string(n) +
                    ") + (moving " + std::to_string(n) + ")";
  c.bound = recursive_upper_bound(n, k, r, level, options);
  const GraphSpectrum& graph = cached_graph_spectrum(n, k, r, options);
  const auto non_b = largest_non_quotient_eigenvalue(graph, enum_cycles(n, k, r), options);
  c.computed = non_b.value_or(-std::numeric_limits<double>::infinity());
  c.holds = c.computed <= c.bound + options.snap_tolerance(graph.degree);
  return c;
}

Table1Prediction table1_prediction(int n, int r) {
  if (n < 5 || r < 1 || r > n - 2) {
    throw ParameterError("table1_prediction requires n >= 5 and 1 <= r <= n-2");
  }
  Table1Prediction p;
  p.n = n;
  p.r = r;
  std::vector<int> hook_tail(static_cast<std::size_t>(n - 2), 1);
  hook_tail.insert(hook_tail.begin(), 2);
  const Partition standard({n - 1, 1});
  const Partition transpose_standard(hook_tail);
  const Integer unit = factorial(n - 3);

  if (r == 1 && (n == 5 || n == 6)) {
    p.small_case = true;
    p.cell = "r=1 (small case)";
    return p;
  }
  if (n % 2 == 1) {
    if (r == 1) {
      p.cell = "n odd, r=1";
      p.value = Rational(factorial(n - 2));
      p.required = {transpose_standard};
      p.multiplicity = static_cast<std::uint64_t>(n - 1);
    } else if (2 * r < n) {
      p.cell = "n odd, 2<=r<n/2";
      p.value = Rational((n - r) * unit);
      p.required = {transpose_standard};
      p.multiplicity = static_cast<std::uint64_t>((n - 1) * (r - 1));
    } else {
      p.cell = "n odd, n/2<r<=n-2";
      p.value = Rational(r * unit);
      p.required = {standard};
      p.multiplicity = static_cast<std::uint64_t>((n - 1) * (n - r - 1));
    }
    return p;
  }
  p.value = Rational(r * unit);
  p.required = {standard, transpose_standard};
  if (r <= 2) {
    std::vector<int> three(static_cast<std::size_t>(n - 3), 1);
    three.insert(three.begin(), 3);
    p.cell = "n even, r=1,2";
    p.optional = {Partition({n - 2, 1, 1}), Partition(three)};
  } else {
    p.cell = "n even, 3<=r<=n-2";
    p.multiplicity = static_cast<std::uint64_t>(2 * (n - 1) * (n - r - 1));
  }
  return p;
}

}  // namespace cayley
