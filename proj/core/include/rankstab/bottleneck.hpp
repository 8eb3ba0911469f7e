#pragma once

#include <vector>

#include "rankstab/persistence.hpp"

namespace rankstab {

/// Barcodes to be matched at threshold δ.
struct MatchingInstance {
  const Barcode& left;
  const Barcode& right;
  double threshold = 0.0;
};

/// ∞-norm cost of matching I with J: max of endpoint gaps, birth gap when both
/// are essential, +∞ when exactly one is essential.
double interval_cost(const Interval& a, const Interval& b);

/// Cost of matching I to the diagonal: half its length, +∞ if essential.
double diagonal_cost(const Interval& a);

/// Whether a partial matching of cost <= δ exists. Decided by a maximum
/// bipartite matching on the δ-admissibility graph.
bool feasible(const MatchingInstance& instance);

/// Exact bottleneck distance. +∞ iff the essential counts differ; otherwise
/// the smallest feasible element of the candidate set
/// {pairwise costs} ∪ {diagonal costs} ∪ {0}.
/// Throws PreconditionError if the degrees differ.
double bottleneck_distance(const Barcode& a, const Barcode& b);

/// The finite candidate thresholds, sorted and deduplicated.
std::vector<double> bottleneck_candidates(const Barcode& a, const Barcode& b);

}  // namespace rankstab
