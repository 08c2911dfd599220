#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace redqaoa {

inline constexpr const char* kVersion = "0.1.0";

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input parsing failure; carries the 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

/// Raised when a simulation would exceed the qubit guard.
struct GuardError : Error {
    using Error::Error;
};

/// Statevector qubit ceiling. Defaults to 24; the RED_QAOA_GUARD
/// environment variable overrides it process-wide.
int statevector_guard();

/// Density-matrix qubit ceiling (4^n entries), fixed at 10.
inline constexpr int kDensityMatrixGuard = 10;

void check_statevector_guard(int node_count);

} // namespace redqaoa
