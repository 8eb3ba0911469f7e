#pragma once

#include "rankstab/persistence.hpp"

namespace rankstab::detail {

/// compute_barcode, but an empty barcode when `degree` exceeds the filtration's
/// dimension. Homology in such degrees is zero.
inline Barcode barcode_or_empty(const ScalarFiltration& f, std::size_t degree) {
  const auto top = f.max_dimension();
  if (!top || degree > *top) return Barcode(degree);
  return compute_barcode(f, degree);
}

}  // namespace rankstab::detail
