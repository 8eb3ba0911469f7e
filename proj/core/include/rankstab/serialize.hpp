#pragma once

#include <string>
#include <vector>

#include "rankstab/matching.hpp"
#include "rankstab/persistence.hpp"
#include "rankstab/stability.hpp"

namespace rankstab {

// JSON writers. Infinite values are written as null. Output is byte-stable for
// identical inputs and ends with a newline.

/// [{degree, birth, death}] sorted by (degree, birth, essential first, death).
std::string barcodes_to_json(const std::vector<Barcode>& barcodes);

/// {m, b, mStar}
std::string line_to_json(const LineParam& line);

/// {line: {m, b, mStar}, degree, distance, weighted}; `weighted` is m*·distance.
std::string bottleneck_result_to_json(const LineParam& line, std::size_t degree, double distance,
                                      double weighted);

/// {value, argmax: {m, b}, table: [{m, b, mStar, distance}]}
std::string match_result_to_json(const MatchResult& result);

/// {construction, epsilon | eta, entries: [{line, lhs, rhs, pass}], globalPass, worstMargin}
std::string stability_report_to_json(const StabilityReport& report);

// CSV writers for per-line tables. Infinite values are written as "inf".

std::string match_result_to_csv(const MatchResult& result);
std::string stability_report_to_csv(const StabilityReport& report);

}  // namespace rankstab
