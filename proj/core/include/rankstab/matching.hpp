#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rankstab/complex.hpp"
#include "rankstab/line.hpp"

namespace rankstab {

/// A finite family of admissible lines to sample.
///
/// For n = 2 directions are (1, tan θ) or (cot θ, 1) for θ on a midpoint grid
/// of `direction_steps` angles in (0, π/2). For other n they are the points of
/// a uniform grid on [δ, 1]^n, δ = 1/(direction_steps + 1), rescaled to max 1.
/// Offsets are midpoints of an `offset_steps`^n grid over the offset box.
struct LineGrid {
  std::size_t direction_steps = 16;
  std::size_t offset_steps = 8;
  /// Explicit box for offsets; when absent the bounding hint expanded by 10%
  /// per side is used.
  std::optional<GradeBox> offset_box;
  std::vector<LineParam> extra_lines;
};

/// Lines of `grid`, canonical, duplicate-free, extra lines appended last.
/// Throws PreconditionError for zero step counts or a box with lo ⋠ hi.
std::vector<LineParam> sample_lines(const LineGrid& grid, const GradeBox& bounding_hint);

/// Union of both complexes' grade boxes. At least one complex must be non-empty.
GradeBox joint_bounds(const MultiFilteredComplex& m, const MultiFilteredComplex& n);

/// m* · d_B(B(M_L), B(N_L)) in the given degree; may be +∞.
double per_line_distance(const MultiFilteredComplex& m, const MultiFilteredComplex& n,
                         const LineParam& line, std::size_t degree);

struct LineDistance {
  LineParam line;
  double distance;
};

/// value = max over `per_line`; `argmax` is the first line attaining it, or the
/// first line with +∞ if any.
struct MatchResult {
  double value = 0.0;
  std::optional<LineParam> argmax;
  std::vector<LineDistance> per_line;
};

/// Grid lower bound for d_match(ρ_M, ρ_N) in the given degree.
MatchResult matching_distance_lb(const MultiFilteredComplex& m, const MultiFilteredComplex& n,
                                 const LineGrid& grid, std::size_t degree);

/// Same, over an explicit line list.
MatchResult matching_distance_over(const MultiFilteredComplex& m, const MultiFilteredComplex& n,
                                   const std::vector<LineParam>& lines, std::size_t degree);

}  // namespace rankstab
