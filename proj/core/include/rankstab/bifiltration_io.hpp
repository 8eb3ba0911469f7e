#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "rankstab/complex.hpp"

namespace rankstab {

/// Reads the text format
///
///     # comment
///     bifiltration <n>
///     <k> <v0> ... <vk> ; <g1> ... <gn>
///
/// one simplex per line, where k is the simplex dimension. Blank lines and
/// lines starting with '#' are ignored. Missing faces are reported, never
/// filled in.
///
/// Throws ParseError (with 1-based line number) for malformed text and
/// ValidationError for structurally invalid complexes.
MultiFilteredComplex parse_bifiltration(std::istream& in);
MultiFilteredComplex parse_bifiltration(std::string_view text);

/// Inverse of parse_bifiltration. Simplices are written in stored order and
/// reals in shortest round-trip form, so output is byte-stable.
std::string serialize_bifiltration(const MultiFilteredComplex& complex);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_real(double value);

}  // namespace rankstab
