#include "rankstab/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "rankstab/errors.hpp"

namespace rankstab {

namespace {

bool interval_less(const Interval& a, const Interval& b) {
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.essential() != b.essential()) return a.essential();
  return a.death < b.death;
}

using Column = std::vector<std::size_t>;

// In-place symmetric difference of two sorted index columns (addition over F2).
void add_column(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

struct Reduction {
  std::vector<std::size_t> order;
  // (creator, destroyer) positions in `order`.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> essentials;
};

Reduction reduce(const ScalarFiltration& filtration) {
  Reduction r;
  r.order = order_simplices(filtration);
  const auto& simplices = filtration.simplices();
  const std::size_t count = r.order.size();

  std::map<std::vector<VertexId>, std::size_t> position;
  for (std::size_t p = 0; p < count; ++p) position.emplace(simplices[r.order[p]].vertices, p);

  std::vector<Column> columns(count);
  for (std::size_t p = 0; p < count; ++p) {
    for (const auto& face : facets_of(simplices[r.order[p]].vertices)) {
      columns[p].push_back(position.at(face));
    }
    std::sort(columns[p].begin(), columns[p].end());
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_column(count, kNone);
  std::vector<bool> paired(count, false);
  Column scratch;
  for (std::size_t j = 0; j < count; ++j) {
    Column& col = columns[j];
    while (!col.empty() && pivot_column[col.back()] != kNone) {
      add_column(col, columns[pivot_column[col.back()]], scratch);
    }
    if (!col.empty()) {
      pivot_column[col.back()] = j;
      paired[col.back()] = true;
      paired[j] = true;
      r.pairs.emplace_back(col.back(), j);
    }
  }
  for (std::size_t p = 0; p < count; ++p) {
    if (!paired[p]) r.essentials.push_back(p);
  }
  return r;
}

// Rank over F2 of a dense matrix given as packed bit rows.
std::size_t f2_rank(std::vector<std::vector<std::uint64_t>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t words = rows.front().size();
  for (std::size_t bit = 0; bit < words * 64 && rank < rows.size(); ++bit) {
    const std::size_t w = bit / 64;
    const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
    std::size_t found = rank;
    while (found < rows.size() && !(rows[found][w] & mask)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[rank], rows[found]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i][w] & mask)) {
        for (std::size_t k = 0; k < words; ++k) rows[i][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

// Rank of the boundary map from q-simplices to (q-1)-simplices of `simplices`.
std::size_t boundary_rank(const std::vector<const Simplex*>& simplices, std::size_t q) {
  if (q == 0) return 0;
  std::map<std::vector<VertexId>, std::size_t> lower;
  for (const Simplex* s : simplices) {
    if (s->dimension() == q - 1) lower.emplace(s->vertices, lower.size());
  }
  const std::size_t words = (lower.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  for (const Simplex* s : simplices) {
    if (s->dimension() != q) continue;
    std::vector<std::uint64_t> row(std::max<std::size_t>(words, 1), 0);
    for (const auto& face : facets_of(s->vertices)) {
      const std::size_t idx = lower.at(face);
      row[idx / 64] ^= std::uint64_t{1} << (idx % 64);
    }
    rows.push_back(std::move(row));
  }
  return f2_rank(std::move(rows));
}

}  // namespace

Barcode::Barcode(std::size_t degree, std::vector<Interval> intervals)
    : degree_(degree), intervals_(std::move(intervals)) {
  for (const auto& i : intervals_) {
    if (i.degree != degree_) throw ValidationError("interval degree differs from barcode degree");
    if (!std::isfinite(i.birth)) throw ValidationError("interval birth must be finite");
    if (!(i.birth < i.death)) throw ValidationError("interval must satisfy birth < death");
  }
  std::sort(intervals_.begin(), intervals_.end(), interval_less);
}

std::size_t Barcode::essential_count() const {
  return static_cast<std::size_t>(std::count_if(intervals_.begin(), intervals_.end(),
                                                [](const Interval& i) { return i.essential(); }));
}

std::size_t Barcode::count_containing(double s, double t) const {
  return static_cast<std::size_t>(std::count_if(
      intervals_.begin(), intervals_.end(),
      [s, t](const Interval& i) { return i.birth <= s && i.death > t; }));
}

std::vector<std::size_t> order_simplices(const ScalarFiltration& filtration) {
  const auto& simplices = filtration.simplices();
  std::vector<std::size_t> order(simplices.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = simplices[a];
    const auto& y = simplices[b];
    if (x.value != y.value) return x.value < y.value;
    if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
    return x.vertices < y.vertices;
  });
  return order;
}

std::vector<Barcode> compute_barcodes(const ScalarFiltration& filtration) {
  const auto top = filtration.max_dimension();
  if (!top) return {};
  const Reduction r = reduce(filtration);
  const auto& simplices = filtration.simplices();

  std::vector<std::vector<Interval>> by_degree(*top + 1);
  for (const auto& [creator, destroyer] : r.pairs) {
    const auto& c = simplices[r.order[creator]];
    const double birth = c.value;
    const double death = simplices[r.order[destroyer]].value;
    if (birth < death) by_degree[c.dimension()].push_back({birth, death, c.dimension()});
  }
  for (std::size_t p : r.essentials) {
    const auto& c = simplices[r.order[p]];
    by_degree[c.dimension()].push_back({c.value, kInfinity, c.dimension()});
  }

  std::vector<Barcode> out;
  out.reserve(by_degree.size());
  for (std::size_t d = 0; d < by_degree.size(); ++d) out.emplace_back(d, std::move(by_degree[d]));
  return out;
}

Barcode compute_barcode(const ScalarFiltration& filtration, std::size_t degree) {
  const auto top = filtration.max_dimension();
  if (!top || degree > *top) {
    throw PreconditionError("homology degree " + std::to_string(degree) +
                            " exceeds the largest simplex dimension");
  }
  auto all = compute_barcodes(filtration);
  return std::move(all[degree]);
}

std::size_t betti_at(const MultiFilteredComplex& complex, const Grade& u, std::size_t degree) {
  if (u.size() != complex.ambient_dimension()) {
    throw PreconditionError("query grade dimension does not match the complex");
  }
  std::vector<const Simplex*> sub;
  for (const auto& s : complex.simplices()) {
    if (weakly_below(s.grade, u)) sub.push_back(&s);
  }
  const auto cells = static_cast<std::size_t>(std::count_if(
      sub.begin(), sub.end(), [degree](const Simplex* s) { return s->dimension() == degree; }));
  return cells - boundary_rank(sub, degree) - boundary_rank(sub, degree + 1);
}

std::size_t rank_invariant(const MultiFilteredComplex& complex, const RankQuery& q) {
  if (q.u.size() != complex.ambient_dimension() || q.v.size() != complex.ambient_dimension()) {
    throw PreconditionError("query grade dimension does not match the complex");
  }
  if (!weakly_below(q.u, q.v)) throw PreconditionError("rank query requires u ⪯ v");

  // Two-step filtration: K_u at 0, K_v \ K_u at 1.
  std::vector<FilteredSimplex> two_step;
  for (const auto& s : complex.simplices()) {
    if (weakly_below(s.grade, q.v)) {
      two_step.push_back({s.vertices, weakly_below(s.grade, q.u) ? 0.0 : 1.0});
    }
  }
  const ScalarFiltration filtration(std::move(two_step));
  const auto top = filtration.max_dimension();
  if (!top || q.degree > *top) return 0;
  return compute_barcode(filtration, q.degree).count_containing(0.0, 1.0);
}

}  // namespace rankstab
