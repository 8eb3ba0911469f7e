#include "rankstab/line.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rankstab/errors.hpp"

namespace rankstab {

namespace {

// Offsets whose components already sum to zero within this tolerance are left
// untouched, which makes canonicalization exactly idempotent.
constexpr double kOffsetSumTolerance = 1e-12;

}  // namespace

std::vector<double> LineParam::point_at(double s) const {
  std::vector<double> p(direction_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = s * direction_[i] + offset_[i];
  return p;
}

LineParam canonicalize_line(std::span<const double> raw_direction,
                            std::span<const double> raw_offset) {
  if (raw_direction.empty()) throw InadmissibleLineError("line direction is empty");
  if (raw_direction.size() != raw_offset.size()) {
    throw PreconditionError("line direction and offset differ in dimension");
  }
  for (double x : raw_direction) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw InadmissibleLineError("line direction components must be positive and finite");
    }
  }
  for (double x : raw_offset) {
    if (!std::isfinite(x)) throw PreconditionError("line offset must be finite");
  }

  const double top = *std::max_element(raw_direction.begin(), raw_direction.end());
  std::vector<double> m(raw_direction.size());
  std::transform(raw_direction.begin(), raw_direction.end(), m.begin(),
                 [top](double x) { return x / top; });

  std::vector<double> b(raw_offset.begin(), raw_offset.end());
  const double offset_sum = std::accumulate(b.begin(), b.end(), 0.0);
  if (std::abs(offset_sum) > kOffsetSumTolerance) {
    const double shift = -offset_sum / std::accumulate(m.begin(), m.end(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += shift * m[i];
  }

  const double m_star = *std::min_element(m.begin(), m.end());
  return LineParam(std::move(m), std::move(b), m_star);
}

LineParam diagonal_line(std::size_t n) {
  const std::vector<double> ones(n, 1.0);
  const std::vector<double> zeros(n, 0.0);
  return canonicalize_line(ones, zeros);
}

double push_to_line(const Grade& g, const LineParam& line) {
  if (g.size() != line.dimension()) {
    throw PreconditionError("grade has dimension " + std::to_string(g.size()) +
                            " but line has dimension " + std::to_string(line.dimension()));
  }
  const auto m = line.direction();
  const auto b = line.offset();
  double s = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.size(); ++i) s = std::max(s, (g[i] - b[i]) / m[i]);
  return s;
}

bool on_line(std::span<const double> point, const LineParam& line, double tol) {
  if (point.size() != line.dimension()) return false;
  const auto m = line.direction();
  const auto b = line.offset();
  // Parameter from the coordinate with the largest slope is the best conditioned.
  const auto top = static_cast<std::size_t>(std::max_element(m.begin(), m.end()) - m.begin());
  const double s = (point[top] - b[top]) / m[top];
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (std::abs(s * m[i] + b[i] - point[i]) > tol) return false;
  }
  return true;
}

}  // namespace rankstab
