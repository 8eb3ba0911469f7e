#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rankstab/grade.hpp"
#include "rankstab/line.hpp"

namespace rankstab {

using VertexId = std::uint32_t;

/// A simplex with its entry grade. `vertices` is kept sorted ascending.
struct Simplex {
  std::vector<VertexId> vertices;
  Grade grade;

  std::size_t dimension() const noexcept { return vertices.size() - 1; }
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// A finite one-critical multifiltered simplicial complex over R^n.
///
/// Construction validates that the simplex list is closed under faces, has no
/// duplicates, and that grades are monotone along faces. Input order is kept,
/// which makes serialization byte-stable.
class MultiFilteredComplex {
 public:
  /// Throws ValidationError naming the offending simplex or face pair.
  MultiFilteredComplex(std::size_t ambient_dimension, std::vector<Simplex> simplices);

  std::size_t ambient_dimension() const noexcept { return ambient_dimension_; }
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }

  /// Largest simplex dimension, or nullopt for the empty complex.
  std::optional<std::size_t> max_dimension() const;

  /// Componentwise bounding box of all grades. Requires a non-empty complex.
  GradeBox grade_bounds() const;

  friend bool operator==(const MultiFilteredComplex&, const MultiFilteredComplex&) = default;

 private:
  std::size_t ambient_dimension_;
  std::vector<Simplex> simplices_;
};

struct FilteredSimplex {
  std::vector<VertexId> vertices;
  double value;

  std::size_t dimension() const noexcept { return vertices.size() - 1; }
  friend bool operator==(const FilteredSimplex&, const FilteredSimplex&) = default;
};

/// A one-parameter filtration: face-closed, duplicate-free and monotone.
class ScalarFiltration {
 public:
  /// Throws ValidationError on missing faces, duplicates, non-finite values
  /// or non-monotone entry values.
  explicit ScalarFiltration(std::vector<FilteredSimplex> simplices);

  const std::vector<FilteredSimplex>& simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  std::optional<std::size_t> max_dimension() const;

 private:
  std::vector<FilteredSimplex> simplices_;
};

/// The restriction M_L: each simplex enters at push_to_line(grade, L).
ScalarFiltration restrict_to_line(const MultiFilteredComplex& complex, const LineParam& line);

/// The complex whose sublevel module is M(ε⃗): every grade is lowered by ε in
/// each coordinate. Throws PreconditionError for negative or non-finite ε.
MultiFilteredComplex diagonal_shift(const MultiFilteredComplex& complex, double epsilon);

/// Codimension-one faces of a sorted vertex list (empty for vertices).
std::vector<std::vector<VertexId>> facets_of(const std::vector<VertexId>& vertices);

}  // namespace rankstab
