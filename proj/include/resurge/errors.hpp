#pragma once

#include <stdexcept>
#include <string>

namespace resurge {

// Every failure mode the library reports deliberately. Callers that want to
// distinguish e.g. a resonant recurrence from a degenerate Pade table switch
// on the kind instead of parsing messages.
enum class ErrorKind {
    Domain,                  // precondition on values violated
    Normalization,           // series not normalized as required (a0 != 1, ...)
    Resonance,               // recurrence pivot vanished at some index
    UnsupportedLevel,        // Borel transform asked for a level other than one
    UnsupportedRamification, // operation needs an integer slope; ramify first
    MultipleRoot,            // determining polynomial has a repeated root
    ShapeUnsupported,        // Newton polygon shape outside the supported class
    NoFormalSolution,        // polygon has no horizontal slope
    DegeneratePade,          // singular Pade linear system
    RayHitsPole,             // Laplace ray passes too close to a pole
    NonConvergent,           // Laplace integral diverges in this half plane
    InsufficientData,        // not enough coefficients/samples
    DivergentDomain,         // integral diverges for this parameter
    Parse,                   // bad operator/coefficient text
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Normalization: return "normalization";
        case ErrorKind::Resonance: return "resonance";
        case ErrorKind::UnsupportedLevel: return "unsupported-level";
        case ErrorKind::UnsupportedRamification: return "unsupported-ramification";
        case ErrorKind::MultipleRoot: return "multiple-root-unsupported";
        case ErrorKind::ShapeUnsupported: return "shape-unsupported";
        case ErrorKind::NoFormalSolution: return "no-formal-solution";
        case ErrorKind::DegeneratePade: return "degenerate-pade-table";
        case ErrorKind::RayHitsPole: return "ray-hits-pole";
        case ErrorKind::NonConvergent: return "nonconvergent";
        case ErrorKind::InsufficientData: return "insufficient-data";
        case ErrorKind::DivergentDomain: return "divergent-domain";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg, long index = -1)
        : std::runtime_error(msg), kind_(kind), index_(index) {}

    ErrorKind kind() const { return kind_; }
    // Offending index where meaningful (resonance order, parse position).
    long index() const { return index_; }

  private:
    ErrorKind kind_;
    long index_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg, long index = -1) {
    throw Error(kind, msg, index);
}

} // namespace resurge
