#include "rankstab/complex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankstab/errors.hpp"
#include "simplex_index.hpp"

namespace rankstab {

namespace {

std::string describe_grade(const Grade& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + ")";
}

}  // namespace

std::vector<std::vector<VertexId>> facets_of(const std::vector<VertexId>& vertices) {
  std::vector<std::vector<VertexId>> faces;
  if (vertices.size() < 2) return faces;
  faces.reserve(vertices.size());
  for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
    std::vector<VertexId> face;
    face.reserve(vertices.size() - 1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (i != skip) face.push_back(vertices[i]);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

MultiFilteredComplex::MultiFilteredComplex(std::size_t ambient_dimension,
                                           std::vector<Simplex> simplices)
    : ambient_dimension_(ambient_dimension), simplices_(std::move(simplices)) {
  if (ambient_dimension_ == 0) throw ValidationError("ambient dimension must be positive");
  for (const auto& s : simplices_) {
    if (s.grade.size() != ambient_dimension_) {
      throw ValidationError("simplex " + detail::describe(s.vertices) + " has a grade of dimension " +
                            std::to_string(s.grade.size()) + ", expected " +
                            std::to_string(ambient_dimension_));
    }
  }
  const auto index = detail::build_index(
      simplices_.size(), [this](std::size_t i) -> std::vector<VertexId>& { return simplices_[i].vertices; });
  for (const auto& s : simplices_) {
    for (const auto& face : facets_of(s.vertices)) {
      const Simplex& f = simplices_[index.at(face)];
      if (!weakly_below(f.grade, s.grade)) {
        throw ValidationError("grade " + describe_grade(s.grade) + " of simplex " +
                              detail::describe(s.vertices) + " is not above grade " +
                              describe_grade(f.grade) + " of its face " +
                              detail::describe(f.vertices));
      }
    }
  }
}

std::optional<std::size_t> MultiFilteredComplex::max_dimension() const {
  if (simplices_.empty()) return std::nullopt;
  std::size_t d = 0;
  for (const auto& s : simplices_) d = std::max(d, s.dimension());
  return d;
}

GradeBox MultiFilteredComplex::grade_bounds() const {
  if (simplices_.empty()) throw PreconditionError("empty complex has no grade bounds");
  GradeBox box{simplices_.front().grade, simplices_.front().grade};
  for (const auto& s : simplices_) {
    box.lo = meet(box.lo, s.grade);
    box.hi = join(box.hi, s.grade);
  }
  return box;
}

ScalarFiltration::ScalarFiltration(std::vector<FilteredSimplex> simplices)
    : simplices_(std::move(simplices)) {
  for (const auto& s : simplices_) {
    if (!std::isfinite(s.value)) throw ValidationError("entry values must be finite");
  }
  const auto index = detail::build_index(
      simplices_.size(), [this](std::size_t i) -> std::vector<VertexId>& { return simplices_[i].vertices; });
  for (const auto& s : simplices_) {
    for (const auto& face : facets_of(s.vertices)) {
      const FilteredSimplex& f = simplices_[index.at(face)];
      if (f.value > s.value) {
        throw ValidationError("simplex " + detail::describe(s.vertices) + " enters at " +
                              std::to_string(s.value) + " before its face " +
                              detail::describe(f.vertices) + " at " + std::to_string(f.value));
      }
    }
  }
}

std::optional<std::size_t> ScalarFiltration::max_dimension() const {
  if (simplices_.empty()) return std::nullopt;
  std::size_t d = 0;
  for (const auto& s : simplices_) d = std::max(d, s.dimension());
  return d;
}

ScalarFiltration restrict_to_line(const MultiFilteredComplex& complex, const LineParam& line) {
  if (complex.ambient_dimension() != line.dimension()) {
    throw PreconditionError("line dimension does not match the complex");
  }
  std::vector<FilteredSimplex> out;
  out.reserve(complex.size());
  for (const auto& s : complex.simplices()) {
    out.push_back({s.vertices, push_to_line(s.grade, line)});
  }
  return ScalarFiltration(std::move(out));
}

MultiFilteredComplex diagonal_shift(const MultiFilteredComplex& complex, double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw PreconditionError("shift must be a finite non-negative real");
  }
  std::vector<Simplex> out;
  out.reserve(complex.size());
  for (const auto& s : complex.simplices()) {
    std::vector<double> g(s.grade.coords().begin(), s.grade.coords().end());
    for (double& x : g) x -= epsilon;
    out.push_back({s.vertices, Grade(std::move(g))});
  }
  return MultiFilteredComplex(complex.ambient_dimension(), std::move(out));
}

}  // namespace rankstab
