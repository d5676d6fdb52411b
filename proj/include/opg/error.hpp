#pragma once

#include <stdexcept>
#include <string>

namespace opg {

// Error categories map one-to-one onto CLI exit codes, so library code
// signals *why* an operation cannot run, not just that it failed.
enum class ErrorKind {
    usage,           // malformed input or bad arguments
    violation,       // input violates a structural precondition (bad drawing, bad graph)
    scale_exceeded,  // input is larger than the documented guard for an exact routine
    internal,        // an invariant the implementation relies on was broken; always a bug
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_usage(const std::string& msg) { throw Error(ErrorKind::usage, msg); }
[[noreturn]] inline void throw_violation(const std::string& msg) { throw Error(ErrorKind::violation, msg); }
[[noreturn]] inline void throw_scale(const std::string& msg) { throw Error(ErrorKind::scale_exceeded, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw Error(ErrorKind::internal, msg); }

// Internal invariant check that stays on in release builds.  These guard
// claims the algorithms depend on; a failure is a bug, never bad user input.
inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) throw_internal(msg);
}

}  // namespace opg
