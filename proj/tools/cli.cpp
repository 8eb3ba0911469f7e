#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rankstab/rankstab.hpp"

namespace rankstab::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("invalid number '" + item + "' in " + what);
    }
  }
  if (out.empty()) throw UsageError("empty " + what);
  return out;
}

LineParam parse_line(const std::string& text, std::size_t n) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("line must look like m1,...,mn:b1,...,bn");
  const auto m = parse_reals(text.substr(0, colon), "line direction");
  const auto b = parse_reals(text.substr(colon + 1), "line offset");
  if (m.size() != n || b.size() != n) {
    throw UsageError("line '" + text + "' must have " + std::to_string(n) + " components");
  }
  return canonicalize_line(m, b);
}

Grade parse_grade(const std::string& text, std::size_t n, const std::string& what) {
  auto coords = parse_reals(text, what);
  if (coords.size() != n) throw UsageError(what + " must have " + std::to_string(n) + " components");
  return Grade(std::move(coords));
}

LineGrid parse_grid(const std::optional<std::string>& flag) {
  std::string text = "16x8";
  if (flag) {
    text = *flag;
  } else if (const char* env = std::getenv(kGridEnv); env && *env) {
    text = env;
  }
  const auto x = text.find('x');
  LineGrid grid;
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto d = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const auto o = std::stoul(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) throw std::invalid_argument(text);
    grid.direction_steps = d;
    grid.offset_steps = o;
  } catch (const std::exception&) {
    throw UsageError("grid must look like <directions>x<offsets>, got '" + text + "'");
  }
  if (grid.direction_steps == 0 || grid.offset_steps == 0) throw UsageError("grid steps must be positive");
  return grid;
}

// Diagnostics are prefixed with the file name (and line for parse errors).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MultiFilteredComplex load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return parse_bifiltration(in);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": parse error: " +
                     std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  } catch (const ValidationError& e) {
    throw InputError(path + ": validation error: " + e.what());
  }
}

void require_inputs(const RunConfig& c, std::size_t count, const char* command) {
  if (c.inputs.size() != count) {
    throw UsageError(std::string(command) + " needs exactly " + std::to_string(count) +
                     " --input file(s)");
  }
}

template <typename T>
const T& require(const std::optional<T>& v, const char* flag, const char* command) {
  if (!v) throw UsageError(std::string(command) + " requires " + flag);
  return *v;
}

void require_json(const RunConfig& c, const char* command) {
  if (c.format != Format::Json) throw UsageError(std::string(command) + " only supports --format json");
}

std::string run_barcode(const RunConfig& c) {
  require_json(c, "barcode");
  require_inputs(c, 1, "barcode");
  const auto m = load(c.inputs[0]);
  const auto line = parse_line(require(c.line, "--line", "barcode"), m.ambient_dimension());
  const auto f = restrict_to_line(m, line);
  if (c.degree) return barcodes_to_json({compute_barcode(f, *c.degree)});
  return barcodes_to_json(compute_barcodes(f));
}

std::string run_bottleneck(const RunConfig& c) {
  require_json(c, "bottleneck");
  require_inputs(c, 2, "bottleneck");
  const auto m = load(c.inputs[0]);
  const auto n = load(c.inputs[1]);
  if (m.ambient_dimension() != n.ambient_dimension()) {
    throw UsageError("inputs have different ambient dimensions");
  }
  const auto line = parse_line(require(c.line, "--line", "bottleneck"), m.ambient_dimension());
  const std::size_t degree = c.degree.value_or(0);
  const double weighted = per_line_distance(m, n, line, degree);
  const double unweighted = std::isinf(weighted) ? weighted : weighted / line.m_star();
  return bottleneck_result_to_json(line, degree, unweighted, weighted);
}

std::string run_rank(const RunConfig& c) {
  require_json(c, "rank");
  require_inputs(c, 1, "rank");
  const auto m = load(c.inputs[0]);
  const std::size_t n = m.ambient_dimension();
  RankQuery q{parse_grade(require(c.u, "--u", "rank"), n, "--u"),
              parse_grade(require(c.v, "--v", "rank"), n, "--v"), c.degree.value_or(0)};
  return std::to_string(rank_invariant(m, q)) + "\n";
}

std::string run_matchdist(const RunConfig& c) {
  require_inputs(c, 2, "matchdist");
  const auto m = load(c.inputs[0]);
  const auto n = load(c.inputs[1]);
  if (m.ambient_dimension() != n.ambient_dimension()) {
    throw UsageError("inputs have different ambient dimensions");
  }
  LineGrid grid = parse_grid(c.grid);
  for (const auto& text : c.extra_lines) grid.extra_lines.push_back(parse_line(text, m.ambient_dimension()));
  const auto result = matching_distance_lb(m, n, grid, c.degree.value_or(0));
  return c.format == Format::Csv ? match_result_to_csv(result) : match_result_to_json(result);
}

std::pair<std::string, bool> run_verify_external(const RunConfig& c) {
  const std::string construction = require(c.construction, "--construction", "verify-external");
  const double epsilon = require(c.epsilon, "--epsilon", "verify-external");
  InterleavedPair pair = [&] {
    if (construction == "shift") {
      require_inputs(c, 1, "verify-external --construction shift");
      return make_shift_pair(load(c.inputs[0]), epsilon);
    }
    if (construction == "perturb") {
      require_inputs(c, 1, "verify-external --construction perturb");
      const auto seed = require(c.seed, "--seed", "verify-external --construction perturb");
      return perturb_grades(load(c.inputs[0]), epsilon, seed);
    }
    if (construction == "given") {
      require_inputs(c, 2, "verify-external --construction given");
      return make_given_pair(load(c.inputs[0]), load(c.inputs[1]), epsilon);
    }
    throw UsageError("unknown construction '" + construction + "' (shift, perturb, given)");
  }();
  if (c.write_partner) {
    std::ofstream out(*c.write_partner, std::ios::binary);
    if (!out) throw InputError(*c.write_partner + ": cannot write file");
    out << serialize_bifiltration(pair.n);
  }
  const auto report = verify_rank_stability(pair, parse_grid(c.grid), c.degree.value_or(0));
  std::string text =
      c.format == Format::Csv ? stability_report_to_csv(report) : stability_report_to_json(report);
  return {std::move(text), report.global_pass};
}

std::pair<std::string, bool> run_verify_internal(const RunConfig& c) {
  require_json(c, "verify-internal");
  require_inputs(c, 1, "verify-internal");
  const auto m = load(c.inputs[0]);
  const std::size_t n = m.ambient_dimension();
  const auto line = parse_line(require(c.line, "--line", "verify-internal"), n);
  const auto other = parse_line(require(c.other_line, "--line2", "verify-internal"), n);
  const auto report = verify_internal_stability(m, line, other, c.degree.value_or(0));
  return {stability_report_to_json(report), report.global_pass};
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    bool pass = true;
    switch (config.command) {
      case Command::Barcode:
        result.output = run_barcode(config);
        break;
      case Command::Bottleneck:
        result.output = run_bottleneck(config);
        break;
      case Command::Rank:
        result.output = run_rank(config);
        break;
      case Command::MatchDist:
        result.output = run_matchdist(config);
        break;
      case Command::VerifyExternal:
        std::tie(result.output, pass) = run_verify_external(config);
        break;
      case Command::VerifyInternal:
        std::tie(result.output, pass) = run_verify_internal(config);
        break;
    }
    if (config.output) {
      std::ofstream out(*config.output, std::ios::binary);
      if (!out) throw InputError(*config.output + ": cannot write file");
      out << result.output;
    }
    result.exit_code = pass ? kExitOk : kExitVerificationFailed;
    if (!pass) result.diagnostics = "verification failed\n";
  } catch (const InputError& e) {
    result = {kExitUsage, "", std::string(e.what()) + "\n"};
  } catch (const UsageError& e) {
    result = {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    result = {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-invariant and matching-distance toolkit for multifiltered complexes"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "json";

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--input", config.inputs, "Bifiltration file (repeat for two inputs)")->required();
    sub->add_option("--degree", config.degree, "Homology degree");
    sub->add_option("--output", config.output, "Write result to this file instead of stdout");
    if (with_format) {
      sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    }
  };

  auto* barcode = app.add_subcommand("barcode", "Barcode of the restriction to a line");
  add_common(barcode, false);
  barcode->add_option("--line", config.line, "m1,...,mn:b1,...,bn")->required();

  auto* bottleneck = app.add_subcommand("bottleneck", "Bottleneck distance of two restrictions");
  add_common(bottleneck, false);
  bottleneck->add_option("--line", config.line, "m1,...,mn:b1,...,bn")->required();

  auto* rank = app.add_subcommand("rank", "Rank invariant rho(u, v)");
  add_common(rank, false);
  rank->add_option("--u", config.u, "u1,...,un")->required();
  rank->add_option("--v", config.v, "v1,...,vn")->required();

  auto* matchdist = app.add_subcommand("matchdist", "Grid lower bound of the matching distance");
  add_common(matchdist, true);
  matchdist->add_option("--grid", config.grid, "<directions>x<offsets>");
  matchdist->add_option("--line", config.extra_lines, "Extra line to evaluate (repeatable)");

  auto* external = app.add_subcommand("verify-external", "Check m*·d_B <= epsilon on a line grid");
  add_common(external, true);
  external->add_option("--construction", config.construction, "shift, perturb or given")->required();
  external->add_option("--epsilon", config.epsilon, "Interleaving bound")->required();
  external->add_option("--seed", config.seed, "Seed for --construction perturb");
  external->add_option("--grid", config.grid, "<directions>x<offsets>");
  external->add_option("--write-partner", config.write_partner, "Write the second complex here");

  auto* internal = app.add_subcommand("verify-internal", "Check d_B(M_L, M_L') <= eta");
  add_common(internal, false);
  internal->add_option("--line", config.line, "m1,...,mn:b1,...,bn")->required();
  internal->add_option("--line2", config.other_line, "m1,...,mn:b1,...,bn")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (barcode->parsed()) config.command = Command::Barcode;
  if (bottleneck->parsed()) config.command = Command::Bottleneck;
  if (rank->parsed()) config.command = Command::Rank;
  if (matchdist->parsed()) config.command = Command::MatchDist;
  if (external->parsed()) config.command = Command::VerifyExternal;
  if (internal->parsed()) config.command = Command::VerifyInternal;
  config.format = format == "csv" ? Format::Csv : Format::Json;

  const RunResult result = run(config);
  if (!config.output) out << result.output;
  err << result.diagnostics;
  return result.exit_code;
}

}  // namespace rankstab::cli
