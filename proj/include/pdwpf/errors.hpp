#pragma once

#include <stdexcept>
#include <string>

namespace pdwpf {

// Every failure mode callers are expected to branch on gets its own type.
// Anything else (logic errors, bad sizes) surfaces as std::invalid_argument.

struct SingularWeight : std::runtime_error {
    explicit SingularWeight(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateRapidities : std::runtime_error {
    explicit DegenerateRapidities(const std::string& what) : std::runtime_error(what) {}
};

struct NoUnitPivot : std::runtime_error {
    explicit NoUnitPivot(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateAbscissa : std::runtime_error {
    explicit DuplicateAbscissa(const std::string& what) : std::runtime_error(what) {}
};

struct WindowTooSmall : std::runtime_error {
    explicit WindowTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct NotBetheRoots : std::runtime_error {
    explicit NotBetheRoots(const std::string& what) : std::runtime_error(what) {}
};

struct PoleAtCandidate : std::runtime_error {
    explicit PoleAtCandidate(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZeroVariable : std::runtime_error {
    explicit DivisionByZeroVariable(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateMiwaVariables : std::runtime_error {
    explicit DegenerateMiwaVariables(const std::string& what) : std::runtime_error(what) {}
};

// Stable machine-readable codes for the CLI error channel.
const char* error_code_of(const std::exception& e);

} // namespace pdwpf
