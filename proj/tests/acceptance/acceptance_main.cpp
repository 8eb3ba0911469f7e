// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "rankstab/rankstab.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace {

using namespace rankstab;
using testing::Rng;

constexpr double kExactTol = 1e-12;
constexpr double kReparamTol = 1e-9;
constexpr std::size_t kMaxSimplices = 50;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << "; " << checks << " checks";
    if (failures) os << ", " << failures << " failed (first: " << first_failure << ")";
    return {failures == 0, os.str()};
  }
};

Outcome barcode_oracle() {
  Rng rng(1001);
  Tally t;
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = testing::random_scalar_filtration(rng, 8);
    std::set<double> values;
    for (const auto& s : f.simplices()) values.insert(s.value);
    const auto barcodes = compute_barcodes(f);
    for (std::size_t q = 0; q <= 1; ++q) {
      const Barcode bc = q < barcodes.size() ? barcodes[q] : Barcode(q);
      for (double s : values)
        for (double u : values) {
          if (s > u) continue;
          t.check(bc.count_containing(s, u) == testing::brute_force_persistent_rank(f, s, u, q),
                  "trial " + std::to_string(trial));
        }
    }
  }
  return t.outcome("200 filtrations, degrees 0-1, integer equality");
}

Outcome bottleneck_oracle() {
  Rng rng(2002);
  Tally t;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t ea = static_cast<std::size_t>(rng.integer(0, 2));
    const std::size_t eb = trial % 10 == 0 ? static_cast<std::size_t>(rng.integer(0, 2)) : ea;
    const auto a = testing::random_barcode(rng, 6, ea, trial % 2 == 0);
    const auto b = testing::random_barcode(rng, 6, eb, trial % 2 == 0);
    const double got = bottleneck_distance(a, b);
    const double want = testing::exhaustive_bottleneck(a.intervals(), b.intervals());
    const bool ok = (std::isinf(got) && std::isinf(want)) || std::abs(got - want) <= kExactTol;
    t.check(ok, "trial " + std::to_string(trial));
  }
  return t.outcome("200 pairs incl. essential bars, tol 1e-12");
}

Outcome rank_consistency() {
  Rng rng(3003);
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::random_complex(rng, 2, 20, 0.0, 3.0, trial % 2 ? 0.5 : 0.0);
    for (int k = 0; k < 10; ++k) {
      const auto line = testing::random_line(rng, 2);
      const double s = rng.uniform(-1.0, 4.0);
      const double u_t = s + rng.uniform(0.05, 3.0);
      const Grade u(line.point_at(s)), v(line.point_at(u_t));
      const auto restricted = compute_barcodes(restrict_to_line(m, line));
      for (std::size_t q = 0; q <= 1; ++q) {
        const std::size_t rank = rank_invariant(m, {u, v, q});
        const std::size_t along = q < restricted.size() ? restricted[q].count_containing(s, u_t) : 0;
        const std::size_t brute = testing::brute_force_rank_invariant(m, u, v, q);
        t.check(strictly_below(u, v) && rank == along && rank == brute,
                "trial " + std::to_string(trial) + " degree " + std::to_string(q));
      }
    }
  }
  return t.outcome("100 complexes x 10 line queries, degrees 0-1");
}

struct PairSet {
  std::vector<InterleavedPair> pairs;
};

const PairSet& certified_pairs() {
  static const PairSet set = [] {
    PairSet out;
    Rng rng(4004);
    const double eps[] = {0.0, 0.1, 0.5, 1.0};
    for (int i = 0; i < 100; ++i) {
      const auto m = testing::random_complex(rng, 2, 30, 0.0, 3.0, i % 3 == 0 ? 0.25 : 0.0, 8);
      out.pairs.push_back(make_shift_pair(m, eps[i % 4]));
    }
    for (int i = 0; i < 100; ++i) {
      const auto m = testing::random_complex(rng, 2, 30, 0.0, 3.0, i % 3 == 0 ? 0.25 : 0.0, 8);
      out.pairs.push_back(perturb_grades(m, eps[i % 4] + 0.05, static_cast<std::uint64_t>(i)));
    }
    return out;
  }();
  return set;
}

template <typename Verify>
Outcome check_pairs(Verify verify, const char* summary) {
  const LineGrid grid{16, 8, std::nullopt, {}};
  Tally t;
  double worst = kInfinity;
  std::size_t lines = 0;
  const auto& pairs = certified_pairs().pairs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t q = 0; q <= 1; ++q) {
      const auto report = verify(pairs[i], grid, q);
      lines += report.entries.size();
      worst = std::min(worst, report.worst_margin);
      t.check(report.global_pass && report.worst_margin >= -kVerificationTolerance,
              std::string(construction_name(pairs[i].construction)) + " pair " + std::to_string(i));
    }
  }
  std::ostringstream os;
  os << summary << ", " << lines << " line checks, worst margin " << worst;
  return t.outcome(os.str());
}

Outcome external_stability() {
  return check_pairs(verify_rank_stability, "m*.d_B <= eps on 200 pairs, 16x8 grid, degrees 0-1");
}

Outcome line_interleaving() {
  return check_pairs(verify_line_interleaving, "d_B <= eps/m* + 1e-9 on the same pairs");
}

Outcome internal_stability() {
  Tally t;
  // Worked examples of the bound's constants.
  const auto e1 = eta_bound(diagonal_line(2), diagonal_line(2), Grade{1, 1});
  t.check(std::abs(e1.eta) <= kExactTol, "eta example L = L'");
  const auto e2 = eta_bound(diagonal_line(2), canonicalize_line({1.0, 1.0}, {0.1, -0.1}), Grade{1, 1});
  t.check(std::abs(e2.c_norm - 1) <= kExactTol && std::abs(e2.b - 0.1) <= kExactTol &&
              std::abs(e2.a - 1.1) <= kExactTol && std::abs(e2.k - 1.3) <= kExactTol &&
              std::abs(e2.eta - 0.1) <= kExactTol,
          "eta example offset change");
  const auto e3 = eta_bound(diagonal_line(2), canonicalize_line({1.0, 0.5}, {0.0, 0.0}), Grade{1, 1});
  t.check(std::abs(e3.c_norm - 1) <= kExactTol && std::abs(e3.b) <= kExactTol &&
              std::abs(e3.a - 2) <= kExactTol && std::abs(e3.k - 2) <= kExactTol &&
              std::abs(e3.eta - 2) <= kExactTol,
          "eta example direction change");

  Rng rng(6006);
  double worst = kInfinity;
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::random_complex(rng, 2, 12);
    for (int k = 0; k < 50; ++k) {
      const auto l = testing::random_line(rng, 2);
      const auto lp = testing::random_line(rng, 2);
      for (std::size_t q = 0; q <= 1; ++q) {
        const auto report = verify_internal_stability(m, l, lp, q);
        worst = std::min(worst, report.worst_margin);
        t.check(report.global_pass, "complex " + std::to_string(trial) + " pair " + std::to_string(k));
      }
    }
  }
  std::ostringstream os;
  os << "3 worked examples to 1e-12, 100 complexes x 50 line pairs, worst margin " << worst;
  return t.outcome(os.str());
}

std::string fixture(const char* name) { return std::string(RANKSTAB_FIXTURE_DIR) + "/" + name; }

Outcome metric_consistency() {
  Tally t;
  Rng rng(7007);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t e = static_cast<std::size_t>(rng.integer(0, 2));
    const auto a = testing::random_barcode(rng, 6, e, false);
    const auto b = testing::random_barcode(rng, 6, e, false);
    const auto c = testing::random_barcode(rng, 6, e, false);
    const double ab = bottleneck_distance(a, b);
    t.check(ab == bottleneck_distance(b, a), "symmetry");
    t.check(bottleneck_distance(a, c) <= ab + bottleneck_distance(b, c) + kExactTol, "triangle");
    t.check(bottleneck_distance(a, a) == 0.0, "identity");
  }

  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_complex(rng, 2, 20);
    const auto n = perturb_grades(m, 0.6, rng.raw()).n;
    const LineGrid coarse{4, 3, std::nullopt, {}};
    const LineGrid fine{8, 5, std::nullopt, sample_lines(coarse, joint_bounds(m, n))};
    for (std::size_t q = 0; q <= 1; ++q) {
      t.check(matching_distance_lb(m, n, coarse, q).value <= matching_distance_lb(m, n, fine, q).value,
              "grid refinement");
    }
  }

  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::random_complex(rng, 2, 15);
    const auto n = perturb_grades(m, 0.5, rng.raw()).n;
    const std::vector<double> dir{rng.uniform(0.1, 1), rng.uniform(0.1, 1)};
    const std::vector<double> off{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double scale = rng.uniform(0.2, 7), slide = rng.uniform(-3, 3);
    const auto l1 = canonicalize_line(dir, off);
    const auto l2 = canonicalize_line({dir[0] * scale, dir[1] * scale},
                                      {off[0] + slide * dir[0], off[1] + slide * dir[1]});
    for (std::size_t q = 0; q <= 1; ++q) {
      t.check(std::abs(per_line_distance(m, n, l1, q) - per_line_distance(m, n, l2, q)) <= kReparamTol,
              "reparameterization");
    }
  }

  using cli::Command;
  std::vector<cli::RunConfig> matrix;
  auto add = [&](Command c, std::vector<std::string> inputs, auto&& tweak) {
    cli::RunConfig cfg;
    cfg.command = c;
    cfg.inputs = std::move(inputs);
    tweak(cfg);
    matrix.push_back(cfg);
  };
  const auto edge = fixture("two_vertices_edge.bif");
  const auto moved = fixture("two_vertices_edge_moved.bif");
  const auto square = fixture("square.bif");
  add(Command::Barcode, {edge}, [](auto& c) { c.line = "1,1:0,0"; c.degree = 0; });
  add(Command::Barcode, {square}, [](auto& c) { c.line = "1,0.3:0.5,0"; });
  add(Command::Bottleneck, {edge, moved}, [](auto& c) { c.line = "1,0.5:0,0"; });
  add(Command::Rank, {edge}, [](auto& c) { c.u = "0,0"; c.v = "2,2"; });
  add(Command::MatchDist, {square, edge}, [](auto& c) { c.grid = "16x8"; });
  add(Command::MatchDist, {square, moved}, [](auto& c) { c.grid = "6x4"; c.format = cli::Format::Csv; });
  add(Command::VerifyExternal, {edge}, [](auto& c) { c.construction = "shift"; c.epsilon = 0.25; c.grid = "16x8"; });
  add(Command::VerifyExternal, {square}, [](auto& c) { c.construction = "perturb"; c.epsilon = 0.3; c.seed = 5; });
  add(Command::VerifyExternal, {edge, moved}, [](auto& c) { c.construction = "given"; c.epsilon = 0.1; });
  add(Command::VerifyInternal, {square}, [](auto& c) { c.line = "1,1:0,0"; c.other_line = "0.5,1:1,0"; });
  add(Command::Rank, {fixture("malformed.bif")}, [](auto& c) { c.u = "0,0"; c.v = "1,1"; });
  std::set<int> codes;
  for (const auto& cfg : matrix) {
    const auto first = cli::run(cfg);
    const auto second = cli::run(cfg);
    codes.insert(first.exit_code);
    t.check(first.exit_code == second.exit_code && first.output == second.output &&
                first.diagnostics == second.diagnostics,
            "CLI determinism");
  }
  t.check(codes == std::set<int>{0, 1, 2}, "fixture matrix covers exit codes 0, 1, 2");

  return t.outcome("bottleneck metric axioms, grid monotonicity, reparameterization, CLI bytes");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1. barcode oracle", barcode_oracle},
      {"2. bottleneck oracle", bottleneck_oracle},
      {"3. rank-invariant consistency", rank_consistency},
      {"4. external stability (m*.d_B <= eps)", external_stability},
      {"5. line interleaving (d_B <= eps/m*)", line_interleaving},
      {"6. internal stability", internal_stability},
      {"7. metric/consistency suite", metric_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
