#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rankstab/complex.hpp"
#include "rankstab/errors.hpp"

namespace rankstab::detail {

using SimplexIndex = std::map<std::vector<VertexId>, std::size_t>;

inline std::string describe(const std::vector<VertexId>& vertices) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
  os << '}';
  return os.str();
}

/// Sorts each vertex list and checks for empty simplices, repeated vertices,
/// duplicate simplices and missing facets. Returns the vertex-set index.
/// `vertices_of(i)` yields a mutable reference to the i-th vertex list.
template <typename VerticesOf>
SimplexIndex build_index(std::size_t count, VerticesOf vertices_of) {
  SimplexIndex index;
  for (std::size_t i = 0; i < count; ++i) {
    auto& v = vertices_of(i);
    if (v.empty()) throw ValidationError("simplex #" + std::to_string(i) + " has no vertices");
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
      throw ValidationError("simplex " + describe(v) + " repeats a vertex");
    }
    if (!index.emplace(v, i).second) {
      throw ValidationError("duplicate simplex " + describe(v));
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& face : facets_of(vertices_of(i))) {
      if (!index.contains(face)) {
        throw ValidationError("face " + describe(face) + " of simplex " +
                              describe(vertices_of(i)) + " is missing");
      }
    }
  }
  return index;
}

}  // namespace rankstab::detail
