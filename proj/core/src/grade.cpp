#include "rankstab/grade.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankstab/errors.hpp"

namespace rankstab {

namespace {

void require_same_size(const Grade& u, const Grade& v) {
  if (u.size() != v.size()) {
    throw PreconditionError("grade dimension mismatch: " + std::to_string(u.size()) + " vs " +
                            std::to_string(v.size()));
  }
}

}  // namespace

Grade::Grade(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double x : coords_) {
    if (!std::isfinite(x)) throw PreconditionError("grade coordinates must be finite");
  }
}

bool weakly_below(const Grade& u, const Grade& v) {
  require_same_size(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] <= v[i])) return false;
  }
  return true;
}

bool strictly_below(const Grade& u, const Grade& v) {
  require_same_size(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] < v[i])) return false;
  }
  return true;
}

Grade join(const Grade& u, const Grade& v) {
  require_same_size(u, v);
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = std::max(u[i], v[i]);
  return Grade(std::move(out));
}

Grade meet(const Grade& u, const Grade& v) {
  require_same_size(u, v);
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = std::min(u[i], v[i]);
  return Grade(std::move(out));
}

double max_norm_distance(const Grade& u, const Grade& v) {
  require_same_size(u, v);
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) d = std::max(d, std::abs(u[i] - v[i]));
  return d;
}

}  // namespace rankstab
