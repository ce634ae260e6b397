#include "quboc/num_format.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace quboc {

std::string shortest_repr(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::runtime_error("to_chars failed");
    return std::string(buf, ptr);
}

double parse_double(const std::string& token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw std::runtime_error("not a valid number: '" + token + "'");
    }
    return value;
}

std::string report_repr(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return std::string(buf);
}

}  // namespace quboc
