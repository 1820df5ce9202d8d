#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aligator {

// Coarse error classes; each maps onto one process exit code of the CLI.
enum class ErrorKind {
    Syntax,          // malformed loop text or polynomial text
    Unsupported,     // valid input outside the supported loop class
    Timeout,
    NonTermination,  // fixed-point iteration cap exceeded
    Structural,      // API misuse: universe mismatch, bad arguments
};

struct Diagnostic {
    std::string code;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), diagnostics_{{std::move(code), message}} {}

    Error(ErrorKind kind, std::vector<Diagnostic> diagnostics)
        : std::runtime_error(diagnostics.empty() ? std::string("error") : diagnostics.front().message),
          kind_(kind),
          diagnostics_(std::move(diagnostics)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return diagnostics_.front().code; }
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    ErrorKind kind_;
    std::vector<Diagnostic> diagnostics_;
};

namespace diag {
inline constexpr const char* kSyntax = "SyntaxError";
inline constexpr const char* kNestedWhile = "NestedWhile";
inline constexpr const char* kFunctionCall = "FunctionCall";
inline constexpr const char* kArrayAccess = "ArrayAccess";
inline constexpr const char* kReservedIdentifier = "ReservedIdentifier";
inline constexpr const char* kDivisionByVariable = "DivisionByVariable";
inline constexpr const char* kDivisionByZero = "DivisionByZero";
inline constexpr const char* kCounterInMultiPath = "CounterInMultiPath";
inline constexpr const char* kUnsupportedUpdate = "UnsupportedUpdate";
inline constexpr const char* kIrrationalRoots = "IrrationalRoots";
inline constexpr const char* kNonTelescoping = "NonTelescoping";
inline constexpr const char* kTimeout = "Timeout";
inline constexpr const char* kNonTermination = "NonTermination";
inline constexpr const char* kUniverseMismatch = "UniverseMismatch";
inline constexpr const char* kInvalidArgument = "InvalidArgument";
inline constexpr const char* kVerificationFailed = "VerificationFailed";
inline constexpr const char* kInternal = "InternalError";
}  // namespace diag

}  // namespace aligator
