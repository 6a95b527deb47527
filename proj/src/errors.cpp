#include "pdwpf/errors.hpp"

namespace pdwpf {

const char* error_code_of(const std::exception& e) {
    if (dynamic_cast<const SingularWeight*>(&e)) return "singular-weight";
    if (dynamic_cast<const DegenerateRapidities*>(&e)) return "degenerate-rapidities";
    if (dynamic_cast<const NoUnitPivot*>(&e)) return "no-unit-pivot";
    if (dynamic_cast<const DuplicateAbscissa*>(&e)) return "duplicate-abscissa";
    if (dynamic_cast<const WindowTooSmall*>(&e)) return "window-too-small";
    if (dynamic_cast<const NotBetheRoots*>(&e)) return "not-bethe-roots";
    if (dynamic_cast<const PoleAtCandidate*>(&e)) return "pole-at-candidate";
    if (dynamic_cast<const NoConvergence*>(&e)) return "no-convergence";
    if (dynamic_cast<const DivisionByZeroVariable*>(&e)) return "division-by-zero-variable";
    if (dynamic_cast<const DegenerateMiwaVariables*>(&e)) return "degenerate-miwa-variables";
    if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid-argument";
    if (dynamic_cast<const std::domain_error*>(&e)) return "domain-error";
    return "internal-error";
}

} // namespace pdwpf
