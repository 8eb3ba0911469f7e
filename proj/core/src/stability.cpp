#include "rankstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "barcode_util.hpp"
#include "rankstab/bottleneck.hpp"
#include "rankstab/errors.hpp"

namespace rankstab {

namespace {

double max_abs(std::span<const double> v) {
  double out = 0.0;
  for (double x : v) out = std::max(out, std::abs(x));
  return out;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

void finish(StabilityReport& report) {
  report.global_pass = true;
  report.worst_margin = kInfinity;
  for (const auto& e : report.entries) {
    report.global_pass = report.global_pass && e.pass;
    const double margin = std::isinf(e.lhs) ? -kInfinity : e.rhs - e.lhs;
    report.worst_margin = std::min(report.worst_margin, margin);
  }
}

StabilityEntry make_entry(const LineParam& line, double lhs, double rhs) {
  const bool pass = std::isfinite(lhs) && lhs <= rhs + kVerificationTolerance;
  return {line, std::nullopt, lhs, rhs, pass};
}

double unweighted_line_distance(const MultiFilteredComplex& m, const MultiFilteredComplex& n,
                                const LineParam& line, std::size_t degree) {
  return bottleneck_distance(detail::barcode_or_empty(restrict_to_line(m, line), degree),
                             detail::barcode_or_empty(restrict_to_line(n, line), degree));
}

void require_epsilon(double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw PreconditionError("epsilon must be a finite non-negative real");
  }
}

}  // namespace

std::string_view construction_name(Construction c) {
  switch (c) {
    case Construction::DiagonalShift:
      return "diagonal-shift";
    case Construction::GradePerturbation:
      return "grade-perturbation";
    case Construction::Given:
      return "given";
  }
  return "unknown";
}

InterleavedPair make_shift_pair(const MultiFilteredComplex& m, double epsilon) {
  require_epsilon(epsilon);
  return {m, diagonal_shift(m, epsilon), epsilon, Construction::DiagonalShift};
}

InterleavedPair make_given_pair(const MultiFilteredComplex& m, const MultiFilteredComplex& n,
                                double claimed_epsilon) {
  require_epsilon(claimed_epsilon);
  if (m.ambient_dimension() != n.ambient_dimension()) {
    throw PreconditionError("complexes have different ambient dimensions");
  }
  return {m, n, claimed_epsilon, Construction::Given};
}

InterleavedPair perturb_grades(const MultiFilteredComplex& m, double epsilon, std::uint64_t seed) {
  require_epsilon(epsilon);
  std::mt19937_64 gen(seed);
  const auto& simplices = m.simplices();

  std::vector<std::vector<double>> noisy(simplices.size());
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto g = simplices[i].grade.coords();
    noisy[i].resize(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      noisy[i][k] = g[k] + epsilon * (2.0 * unit - 1.0);
    }
  }

  // Restore monotonicity: each grade becomes the max over its closure. Faces
  // are processed first by visiting simplices in increasing dimension.
  std::map<std::vector<VertexId>, std::size_t> index;
  for (std::size_t i = 0; i < simplices.size(); ++i) index.emplace(simplices[i].vertices, i);
  std::vector<std::size_t> by_dim(simplices.size());
  std::iota(by_dim.begin(), by_dim.end(), std::size_t{0});
  std::stable_sort(by_dim.begin(), by_dim.end(), [&](std::size_t a, std::size_t b) {
    return simplices[a].dimension() < simplices[b].dimension();
  });
  for (std::size_t i : by_dim) {
    for (const auto& face : facets_of(simplices[i].vertices)) {
      const auto& f = noisy[index.at(face)];
      for (std::size_t k = 0; k < f.size(); ++k) noisy[i][k] = std::max(noisy[i][k], f[k]);
    }
  }

  std::vector<Simplex> out;
  out.reserve(simplices.size());
  double certified = 0.0;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    certified = std::max(certified, max_abs_diff(noisy[i], simplices[i].grade.coords()));
    out.push_back({simplices[i].vertices, Grade(std::move(noisy[i]))});
  }
  return {m, MultiFilteredComplex(m.ambient_dimension(), std::move(out)), certified,
          Construction::GradePerturbation};
}

StabilityReport verify_rank_stability(const InterleavedPair& pair, const LineGrid& grid,
                                      std::size_t degree) {
  StabilityReport report;
  report.construction = pair.construction;
  report.bound = pair.epsilon;
  for (const auto& line : sample_lines(grid, joint_bounds(pair.m, pair.n))) {
    report.entries.push_back(
        make_entry(line, per_line_distance(pair.m, pair.n, line, degree), pair.epsilon));
  }
  finish(report);
  return report;
}

StabilityReport verify_line_interleaving(const InterleavedPair& pair, const LineGrid& grid,
                                         std::size_t degree) {
  StabilityReport report;
  report.construction = pair.construction;
  report.bound = pair.epsilon;
  for (const auto& line : sample_lines(grid, joint_bounds(pair.m, pair.n))) {
    report.entries.push_back(make_entry(line, unweighted_line_distance(pair.m, pair.n, line, degree),
                                        pair.epsilon / line.m_star()));
  }
  finish(report);
  return report;
}

Grade stabilization_grade(const MultiFilteredComplex& m) {
  if (m.empty()) throw PreconditionError("stabilization grade of an empty complex");
  return m.grade_bounds().hi;
}

EtaBound eta_bound(const LineParam& line, const LineParam& other_line, const Grade& c) {
  if (line.dimension() != other_line.dimension() || c.size() != line.dimension()) {
    throw PreconditionError("lines and stabilization grade differ in dimension");
  }
  const auto m = line.direction();
  const auto mp = other_line.direction();
  const auto b = line.offset();
  const auto bp = other_line.offset();

  EtaBound out{line, other_line, c};
  out.c_norm = std::max(max_abs(m), max_abs(mp));
  out.b = std::max(max_abs(b), max_abs(bp));
  out.a = std::max(max_abs_diff(c.coords(), b) * max_abs(m) / line.m_star(),
                   max_abs_diff(c.coords(), bp) * max_abs(mp) / other_line.m_star());
  out.k = out.a + 2.0 * out.b;
  out.eta = (out.k * max_abs_diff(m, mp) + out.c_norm * max_abs_diff(b, bp)) /
            (line.m_star() * other_line.m_star());
  return out;
}

StabilityReport verify_internal_stability(const MultiFilteredComplex& m, const LineParam& line,
                                          const LineParam& other_line, std::size_t degree) {
  const EtaBound bound = eta_bound(line, other_line, stabilization_grade(m));
  const double lhs =
      bottleneck_distance(detail::barcode_or_empty(restrict_to_line(m, line), degree),
                          detail::barcode_or_empty(restrict_to_line(m, other_line), degree));
  StabilityReport report;
  report.construction = Construction::Given;
  report.internal = true;
  report.bound = bound.eta;
  StabilityEntry entry = make_entry(line, lhs, bound.eta);
  entry.other_line = other_line;
  report.entries.push_back(std::move(entry));
  finish(report);
  return report;
}

}  // namespace rankstab
