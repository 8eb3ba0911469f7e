#pragma once

#include <span>
#include <vector>

#include "rankstab/grade.hpp"

namespace rankstab {

/// An admissible line u = s·m + b in canonical form.
///
/// Canonical means every m_i > 0, max_i m_i = 1 and Σ_i b_i = 0. The only way
/// to obtain a LineParam is canonicalize_line(), so raw parameterizations never
/// circulate.
class LineParam {
 public:
  std::span<const double> direction() const noexcept { return direction_; }
  std::span<const double> offset() const noexcept { return offset_; }
  /// min_i m_i, the weight of the line.
  double m_star() const noexcept { return m_star_; }
  std::size_t dimension() const noexcept { return direction_.size(); }

  /// The point s·m + b. Coordinates are not guaranteed finite for huge s.
  std::vector<double> point_at(double s) const;

  friend bool operator==(const LineParam&, const LineParam&) = default;
  friend auto operator<=>(const LineParam& a, const LineParam& b) {
    if (auto c = a.direction_ <=> b.direction_; c != 0) return c;
    return a.offset_ <=> b.offset_;
  }

 private:
  friend LineParam canonicalize_line(std::span<const double>, std::span<const double>);
  LineParam(std::vector<double> m, std::vector<double> b, double m_star)
      : direction_(std::move(m)), offset_(std::move(b)), m_star_(m_star) {}

  std::vector<double> direction_;
  std::vector<double> offset_;
  double m_star_ = 1.0;
};

/// Rescales the direction so its largest component is 1 and slides the offset
/// along the line until its components sum to zero. The point set is unchanged.
/// Throws InadmissibleLineError if any direction component is <= 0 or not finite.
LineParam canonicalize_line(std::span<const double> raw_direction,
                            std::span<const double> raw_offset);

inline LineParam canonicalize_line(const std::vector<double>& raw_direction,
                                   const std::vector<double>& raw_offset) {
  return canonicalize_line(std::span<const double>(raw_direction),
                           std::span<const double>(raw_offset));
}

/// The diagonal line m = (1,...,1), b = 0 in R^n.
LineParam diagonal_line(std::size_t n);

/// Least s with g ⪯ s·m + b, i.e. max_i (g_i - b_i) / m_i.
double push_to_line(const Grade& g, const LineParam& line);

/// Whether `point` lies on the line within absolute tolerance `tol` per coordinate.
bool on_line(std::span<const double> point, const LineParam& line, double tol);

}  // namespace rankstab
