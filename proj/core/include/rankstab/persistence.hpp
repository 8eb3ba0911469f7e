#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "rankstab/complex.hpp"

namespace rankstab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Half-open interval [birth, death) in a barcode. An essential interval has
/// death == kInfinity.
struct Interval {
  double birth = 0.0;
  double death = kInfinity;
  std::size_t degree = 0;

  bool essential() const noexcept { return death == kInfinity; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Multiset of intervals of one homology degree, kept sorted by birth, then
/// essential intervals before finite ones, then by death.
class Barcode {
 public:
  explicit Barcode(std::size_t degree = 0) : degree_(degree) {}
  /// Throws ValidationError if an interval has the wrong degree, birth >= death
  /// or a non-finite birth.
  Barcode(std::size_t degree, std::vector<Interval> intervals);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }
  std::size_t essential_count() const;

  /// Number of intervals with birth <= s and death > t.
  std::size_t count_containing(double s, double t) const;

  friend bool operator==(const Barcode&, const Barcode&) = default;

 private:
  std::size_t degree_;
  std::vector<Interval> intervals_;
};

/// Query for ρ_M(u, v) in a given homology degree. Requires u ⪯ v.
struct RankQuery {
  Grade u;
  Grade v;
  std::size_t degree = 0;
};

/// Filtration order used for reduction: by (entry value, dimension,
/// lexicographic vertex ids). Returns indices into `filtration.simplices()`.
std::vector<std::size_t> order_simplices(const ScalarFiltration& filtration);

/// Barcode of the sublevel persistence module in `degree` over F2, by plain
/// left-to-right column reduction. Zero-length intervals are dropped.
/// Throws PreconditionError if degree exceeds the largest simplex dimension
/// (or the filtration is empty).
Barcode compute_barcode(const ScalarFiltration& filtration, std::size_t degree);

/// All barcodes of degrees 0..max_dimension from a single reduction.
std::vector<Barcode> compute_barcodes(const ScalarFiltration& filtration);

/// dim H_degree({σ : grade(σ) ⪯ u}; F2) by Gaussian elimination.
std::size_t betti_at(const MultiFilteredComplex& complex, const Grade& u, std::size_t degree);

/// Rank over F2 of H_degree(K_u) -> H_degree(K_v). Throws PreconditionError
/// unless q.u ⪯ q.v.
std::size_t rank_invariant(const MultiFilteredComplex& complex, const RankQuery& q);

}  // namespace rankstab
