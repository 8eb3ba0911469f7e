#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rankstab {

/// A point of R^n at which a simplex enters a multifiltration.
///
/// Coordinates are always finite. The partial order is the componentwise one:
/// `u <= v` iff u_i <= v_i for every i, and `u < v` (strict) iff u_i < v_i for
/// every i. Note that the strict order is not the negation of the weak one.
class Grade {
 public:
  Grade() = default;
  explicit Grade(std::vector<double> coords);
  Grade(std::initializer_list<double> coords) : Grade(std::vector<double>(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  friend bool operator==(const Grade&, const Grade&) = default;

 private:
  std::vector<double> coords_;
};

/// u ⪯ v componentwise. Throws PreconditionError on dimension mismatch.
bool weakly_below(const Grade& u, const Grade& v);
/// u ≺ v componentwise.
bool strictly_below(const Grade& u, const Grade& v);

/// Componentwise maximum.
Grade join(const Grade& u, const Grade& v);
/// Componentwise minimum.
Grade meet(const Grade& u, const Grade& v);

/// ‖u - v‖∞
double max_norm_distance(const Grade& u, const Grade& v);

/// Inclusive componentwise bounding box.
struct GradeBox {
  Grade lo;
  Grade hi;
};

}  // namespace rankstab
