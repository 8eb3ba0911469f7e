#include "rankstab/matching.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "rankstab/bottleneck.hpp"
#include "rankstab/errors.hpp"
#include "rankstab/persistence.hpp"
#include "barcode_util.hpp"

namespace rankstab {

namespace {

constexpr double kBoxMargin = 0.1;

std::vector<std::vector<double>> planar_directions(std::size_t steps) {
  std::vector<std::vector<double>> dirs(steps);
  const double step = (std::numbers::pi / 2.0) / static_cast<double>(steps);
  for (std::size_t i = 0; 2 * i + 1 <= steps; ++i) {
    const std::size_t mirror = steps - 1 - i;
    if (i == mirror) {
      dirs[i] = {1.0, 1.0};  // θ = π/4 exactly
      continue;
    }
    const double t = std::tan((static_cast<double>(i) + 0.5) * step);
    dirs[i] = {1.0, t};
    dirs[mirror] = {t, 1.0};
  }
  return dirs;
}

// All index tuples of an `extent`^n grid, last coordinate varying fastest.
template <typename Fn>
void for_each_grid_point(std::size_t n, std::size_t extent, Fn fn) {
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    fn(idx);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++idx[k] < extent) break;
      idx[k] = 0;
      if (k == 0) return;
    }
  }
}

std::vector<std::vector<double>> cube_directions(std::size_t n, std::size_t steps) {
  const double delta = 1.0 / static_cast<double>(steps + 1);
  std::vector<double> values(steps);
  for (std::size_t j = 0; j < steps; ++j) {
    values[j] = steps == 1 ? 1.0
                           : delta + (1.0 - delta) * static_cast<double>(j) /
                                         static_cast<double>(steps - 1);
  }
  std::vector<std::vector<double>> dirs;
  std::set<std::vector<double>> seen;
  for_each_grid_point(n, steps, [&](const std::vector<std::size_t>& idx) {
    std::vector<double> d(n);
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) top = std::max(top, d[i] = values[idx[i]]);
    for (double& x : d) x /= top;
    if (seen.insert(d).second) dirs.push_back(std::move(d));
  });
  return dirs;
}

}  // namespace

std::vector<LineParam> sample_lines(const LineGrid& grid, const GradeBox& bounding_hint) {
  if (grid.direction_steps == 0 || grid.offset_steps == 0) {
    throw PreconditionError("line grid step counts must be positive");
  }
  GradeBox box = bounding_hint;
  if (grid.offset_box) {
    box = *grid.offset_box;
  } else if (box.lo.size() == box.hi.size()) {
    std::vector<double> lo(box.lo.coords().begin(), box.lo.coords().end());
    std::vector<double> hi(box.hi.coords().begin(), box.hi.coords().end());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      const double pad = kBoxMargin * (hi[i] - lo[i]);
      if (pad > 0.0) {
        lo[i] -= pad;
        hi[i] += pad;
      }
    }
    box = {Grade(std::move(lo)), Grade(std::move(hi))};
  }
  const std::size_t n = box.lo.size();
  if (n == 0 || box.hi.size() != n) throw PreconditionError("offset box has inconsistent dimension");
  if (!weakly_below(box.lo, box.hi)) throw PreconditionError("offset box has min ⋠ max");

  std::vector<std::vector<double>> directions;
  if (n == 1) {
    directions = {{1.0}};
  } else if (n == 2) {
    directions = planar_directions(grid.direction_steps);
  } else {
    directions = cube_directions(n, grid.direction_steps);
  }

  std::vector<std::vector<double>> offsets;
  const double k = static_cast<double>(grid.offset_steps);
  for_each_grid_point(n, grid.offset_steps, [&](const std::vector<std::size_t>& idx) {
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * (static_cast<double>(idx[i]) + 0.5) / k;
    }
    offsets.push_back(std::move(b));
  });

  std::vector<LineParam> lines;
  std::set<LineParam> seen;
  auto add = [&](LineParam line) {
    if (seen.insert(line).second) lines.push_back(std::move(line));
  };
  for (const auto& m : directions) {
    for (const auto& b : offsets) add(canonicalize_line(m, b));
  }
  for (const auto& line : grid.extra_lines) {
    if (line.dimension() != n) throw PreconditionError("extra line has the wrong dimension");
    add(line);
  }
  return lines;
}

GradeBox joint_bounds(const MultiFilteredComplex& m, const MultiFilteredComplex& n) {
  if (m.empty() && n.empty()) throw PreconditionError("both complexes are empty");
  if (m.empty()) return n.grade_bounds();
  if (n.empty()) return m.grade_bounds();
  const auto a = m.grade_bounds();
  const auto b = n.grade_bounds();
  return {meet(a.lo, b.lo), join(a.hi, b.hi)};
}

double per_line_distance(const MultiFilteredComplex& m, const MultiFilteredComplex& n,
                         const LineParam& line, std::size_t degree) {
  if (m.ambient_dimension() != n.ambient_dimension()) {
    throw PreconditionError("complexes have different ambient dimensions");
  }
  const Barcode a = detail::barcode_or_empty(restrict_to_line(m, line), degree);
  const Barcode b = detail::barcode_or_empty(restrict_to_line(n, line), degree);
  const double d = bottleneck_distance(a, b);
  return std::isinf(d) ? kInfinity : line.m_star() * d;
}

MatchResult matching_distance_over(const MultiFilteredComplex& m, const MultiFilteredComplex& n,
                                   const std::vector<LineParam>& lines, std::size_t degree) {
  MatchResult result;
  result.per_line.reserve(lines.size());
  for (const auto& line : lines) {
    result.per_line.push_back({line, per_line_distance(m, n, line, degree)});
  }
  for (const auto& entry : result.per_line) {
    if (!result.argmax || entry.distance > result.value) {
      result.value = entry.distance;
      result.argmax = entry.line;
    }
    if (std::isinf(entry.distance)) break;
  }
  return result;
}

MatchResult matching_distance_lb(const MultiFilteredComplex& m, const MultiFilteredComplex& n,
                                 const LineGrid& grid, std::size_t degree) {
  return matching_distance_over(m, n, sample_lines(grid, joint_bounds(m, n)), degree);
}

}  // namespace rankstab
