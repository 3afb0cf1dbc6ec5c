#pragma once

#include <stdexcept>
#include <string>

namespace twotype {

// Parameter combination that cannot be realized (balance violated, negative
// implied rate, ...). CLI maps this to exit code 3.
struct InfeasibleParams : std::runtime_error {
    explicit InfeasibleParams(const std::string& what) : std::runtime_error(what) {}
};

// Not enough usable data points for an estimate (short degree tails).
struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; carries the 1-based line number.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line_no)
        : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    std::size_t line;
};

} // namespace twotype
