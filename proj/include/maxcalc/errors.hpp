#ifndef MAXCALC_ERRORS_HPP
#define MAXCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxcalc {

// Base class for every failure the engine can signal. A CLI run maps any
// EngineError to exit code 2.
struct EngineError : std::runtime_error {
    explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

// real total exceeds complex total: a generator or rule is unsound; the run
// must abort rather than continue with corrupt data.
struct SmithThomViolation : EngineError {
    using EngineError::EngineError;
};

// A Yes/No fact was asserted against an existing opposite value. The message
// carries both provenances.
struct FactContradiction : EngineError {
    using EngineError::EngineError;
};

// Curve with more real circles than the genus bound allows.
struct HarnackViolation : EngineError {
    using EngineError::EngineError;
};

struct NotCoprime : EngineError {
    using EngineError::EngineError;
};

// A rule's fact precondition is unmet; names the missing fact.
struct RuleNotApplicable : EngineError {
    using EngineError::EngineError;
};

struct CertificateCycle : EngineError {
    using EngineError::EngineError;
};

struct DimensionMismatch : EngineError {
    using EngineError::EngineError;
};

// Bad parameter values (ranges, unknown names, invalid flag types).
struct DomainError : EngineError {
    using EngineError::EngineError;
};

// Consistency checks that must never fire (e.g. a non-exact division in a
// closed-form quotient).
struct InternalError : EngineError {
    using EngineError::EngineError;
};

// Script syntax or semantic errors, with position.
struct ParseError : EngineError {
    ParseError(int line, int col, const std::string& msg)
        : EngineError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

} // namespace maxcalc

#endif
