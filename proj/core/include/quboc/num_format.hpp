#pragma once

#include <string>

namespace quboc {

/// Shortest decimal string that parses back to exactly the same double.
std::string shortest_repr(double value);

/// Strict full-token double parse; throws std::runtime_error on failure.
double parse_double(const std::string& token);

/// Human-readable report format, 6 significant digits.
std::string report_repr(double value);

}  // namespace quboc
