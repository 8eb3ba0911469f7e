#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rankstab/complex.hpp"
#include "rankstab/matching.hpp"
#include "rankstab/persistence.hpp"

namespace rankstab {

/// Absolute slack used by every stability check.
inline constexpr double kVerificationTolerance = 1e-9;

enum class Construction {
  /// N = diagonal_shift(M, ε).
  DiagonalShift,
  /// ‖grade_N(σ) - grade_M(σ)‖∞ <= ε for every σ.
  GradePerturbation,
  /// Caller-supplied pair with a claimed, uncertified bound.
  Given,
};

std::string_view construction_name(Construction c);

/// Two complexes on the same simplices whose sublevel modules are
/// `epsilon`-interleaved by construction.
struct InterleavedPair {
  MultiFilteredComplex m;
  MultiFilteredComplex n;
  double epsilon = 0.0;
  Construction construction = Construction::DiagonalShift;
};

struct StabilityEntry {
  LineParam line;
  /// Second line for internal-stability checks.
  std::optional<LineParam> other_line;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct StabilityReport {
  Construction construction = Construction::DiagonalShift;
  /// ε for external checks, η for internal ones.
  double bound = 0.0;
  bool internal = false;
  std::vector<StabilityEntry> entries;
  bool global_pass = true;
  /// min(rhs - lhs) over entries; +∞ for an empty report.
  double worst_margin = kInfinity;
};

/// Constants of the internal-stability bound for two canonical lines.
struct EtaBound {
  LineParam line;
  LineParam other_line;
  Grade c;
  double a = 0.0;
  double b = 0.0;
  double c_norm = 0.0;
  double k = 0.0;
  double eta = 0.0;
};

/// Pair for the diagonal-shift construction.
InterleavedPair make_shift_pair(const MultiFilteredComplex& m, double epsilon);

/// Pair for a caller-supplied N with a claimed bound; the two complexes must
/// share ambient dimension.
InterleavedPair make_given_pair(const MultiFilteredComplex& m, const MultiFilteredComplex& n,
                                double claimed_epsilon);

/// Moves every grade by an independent vector with entries uniform in
/// [-ε, ε], then restores monotonicity by taking the componentwise max over
/// faces. The generator is std::mt19937_64 seeded with `seed`; each draw maps
/// the top 53 bits x to ε·(2·x·2⁻⁵³ − 1), simplices in stored order, coordinates
/// in index order. The certified ε is the realized maximum grade displacement.
InterleavedPair perturb_grades(const MultiFilteredComplex& m, double epsilon, std::uint64_t seed);

/// For every sampled line: lhs = m*·d_B(B(M_L), B(N_L)), rhs = ε.
StabilityReport verify_rank_stability(const InterleavedPair& pair, const LineGrid& grid,
                                      std::size_t degree);

/// Unweighted per-line form: lhs = d_B(B(M_L), B(N_L)), rhs = ε / m*.
StabilityReport verify_line_interleaving(const InterleavedPair& pair, const LineGrid& grid,
                                         std::size_t degree);

/// Componentwise maximum of all grades. Throws PreconditionError if empty.
Grade stabilization_grade(const MultiFilteredComplex& m);

/// A, B, C, K and η for the pair of lines and stabilization grade c.
EtaBound eta_bound(const LineParam& line, const LineParam& other_line, const Grade& c);

/// One-entry report: lhs = d_B(B(M_L), B(M_L')), rhs = η.
StabilityReport verify_internal_stability(const MultiFilteredComplex& m, const LineParam& line,
                                          const LineParam& other_line, std::size_t degree);

}  // namespace rankstab
