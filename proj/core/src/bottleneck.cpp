#include "rankstab/bottleneck.hpp"

#include <algorithm>
#include <cmath>

#include "rankstab/errors.hpp"

namespace rankstab {

namespace {

// Kuhn's augmenting-path maximum matching on a left-to-right adjacency list.
class BipartiteMatcher {
 public:
  BipartiteMatcher(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t right_size)
      : adjacency_(adjacency), match_of_right_(right_size, kFree) {}

  std::size_t maximum_matching() {
    std::size_t size = 0;
    for (std::size_t left = 0; left < adjacency_.size(); ++left) {
      visited_.assign(match_of_right_.size(), false);
      if (augment(left)) ++size;
    }
    return size;
  }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  bool augment(std::size_t left) {
    for (std::size_t right : adjacency_[left]) {
      if (visited_[right]) continue;
      visited_[right] = true;
      if (match_of_right_[right] == kFree || augment(match_of_right_[right])) {
        match_of_right_[right] = left;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adjacency_;
  std::vector<std::size_t> match_of_right_;
  std::vector<bool> visited_;
};

}  // namespace

double interval_cost(const Interval& a, const Interval& b) {
  if (a.essential() && b.essential()) return std::abs(a.birth - b.birth);
  if (a.essential() || b.essential()) return kInfinity;
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_cost(const Interval& a) {
  if (a.essential()) return kInfinity;
  return (a.death - a.birth) / 2.0;
}

bool feasible(const MatchingInstance& instance) {
  const auto& left = instance.left.intervals();
  const auto& right = instance.right.intervals();
  const double delta = instance.threshold;
  const std::size_t p = left.size();
  const std::size_t q = right.size();

  // Left side: left intervals, then diagonal copies of right intervals.
  // Right side: right intervals, then diagonal copies of left intervals.
  std::vector<std::vector<std::size_t>> adjacency(p + q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (interval_cost(left[i], right[j]) <= delta) adjacency[i].push_back(j);
    }
    if (diagonal_cost(left[i]) <= delta) adjacency[i].push_back(q + i);
  }
  for (std::size_t j = 0; j < q; ++j) {
    auto& row = adjacency[p + j];
    if (diagonal_cost(right[j]) <= delta) row.push_back(j);
    for (std::size_t i = 0; i < p; ++i) row.push_back(q + i);
  }
  return BipartiteMatcher(adjacency, p + q).maximum_matching() == p + q;
}

std::vector<double> bottleneck_candidates(const Barcode& a, const Barcode& b) {
  std::vector<double> out{0.0};
  for (const auto& i : a.intervals()) {
    for (const auto& j : b.intervals()) {
      const double c = interval_cost(i, j);
      if (std::isfinite(c)) out.push_back(c);
    }
  }
  for (const auto* bars : {&a.intervals(), &b.intervals()}) {
    for (const auto& i : *bars) {
      const double c = diagonal_cost(i);
      if (std::isfinite(c)) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double bottleneck_distance(const Barcode& a, const Barcode& b) {
  if (a.degree() != b.degree()) throw PreconditionError("barcodes have different degrees");
  if (a.essential_count() != b.essential_count()) return kInfinity;

  const auto candidates = bottleneck_candidates(a, b);
  // The largest candidate is always feasible: essentials pair among themselves
  // and every finite interval goes to the diagonal.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible({a, b, candidates[mid]})) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

}  // namespace rankstab
