#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace crystal {

/* Invalid input or an unsatisfiable precondition. code() is a stable
   machine-readable name ("Disconnected", "NotACycle", ...) used by the CLI
   and by tests; what() prepends it to the human-readable detail. */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Broken internal invariant. The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& detail) : std::logic_error(detail) {}
};

[[noreturn]] inline void fail(const char* code, const std::string& detail) {
    throw Error(code, detail);
}

inline void require(bool ok, const char* code, const std::string& detail) {
    if (!ok) fail(code, detail);
}

inline void check_internal(bool ok, const char* detail) {
    if (!ok) throw InternalError(detail);
}

} // namespace crystal
