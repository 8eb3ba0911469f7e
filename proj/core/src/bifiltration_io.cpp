#include "rankstab/bifiltration_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "rankstab/errors.hpp"

namespace rankstab {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t v = 0;
  if (token.empty() || token.front() == '-' || !parse_number(token, v)) {
    throw ParseError(line, std::string("expected a non-negative integer ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return v;
}

}  // namespace

MultiFilteredComplex parse_bifiltration(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Simplex> simplices;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view text(raw);
    const auto tokens = split_ws(text);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "bifiltration") {
        throw ParseError(line_no, "expected header 'bifiltration <n>'");
      }
      n = parse_count(tokens[1], line_no, "ambient dimension");
      if (n == 0) throw ParseError(line_no, "ambient dimension must be positive");
      have_header = true;
      continue;
    }

    const auto sep = std::find(tokens.begin(), tokens.end(), std::string_view(";"));
    if (sep == tokens.end()) throw ParseError(line_no, "missing ';' between vertices and grade");
    const std::size_t left = static_cast<std::size_t>(sep - tokens.begin());
    if (left == 0) throw ParseError(line_no, "missing simplex dimension");
    const std::size_t k = parse_count(tokens[0], line_no, "simplex dimension");
    if (left - 1 != k + 1) {
      throw ParseError(line_no, std::to_string(k) + "-simplex needs " + std::to_string(k + 1) +
                                    " vertex ids, got " + std::to_string(left - 1));
    }
    std::vector<VertexId> vertices;
    vertices.reserve(k + 1);
    for (std::size_t i = 1; i < left; ++i) {
      const std::size_t v = parse_count(tokens[i], line_no, "vertex id");
      if (v > std::numeric_limits<VertexId>::max()) {
        throw ParseError(line_no, "vertex id out of range");
      }
      vertices.push_back(static_cast<VertexId>(v));
    }
    const std::size_t right = tokens.size() - left - 1;
    if (right != n) {
      throw ParseError(line_no, "grade needs " + std::to_string(n) + " reals, got " +
                                    std::to_string(right));
    }
    std::vector<double> coords;
    coords.reserve(n);
    for (std::size_t i = left + 1; i < tokens.size(); ++i) {
      double x = 0.0;
      if (!parse_number(tokens[i], x) || !std::isfinite(x)) {
        throw ParseError(line_no, "expected a finite real, got '" + std::string(tokens[i]) + "'");
      }
      coords.push_back(x);
    }
    simplices.push_back({std::move(vertices), Grade(std::move(coords))});
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header 'bifiltration <n>'");
  return MultiFilteredComplex(n, std::move(simplices));
}

MultiFilteredComplex parse_bifiltration(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_bifiltration(in);
}

std::string format_real(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string serialize_bifiltration(const MultiFilteredComplex& complex) {
  std::string out = "bifiltration " + std::to_string(complex.ambient_dimension()) + "\n";
  for (const auto& s : complex.simplices()) {
    out += std::to_string(s.dimension());
    for (VertexId v : s.vertices) out += " " + std::to_string(v);
    out += " ;";
    for (double x : s.grade.coords()) out += " " + format_real(x);
    out += "\n";
  }
  return out;
}

}  // namespace rankstab
