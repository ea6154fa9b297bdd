#pragma once

#include <stdexcept>
#include <string>

namespace lmpe {

/// Broad failure category. The CLI maps each kind to a distinct exit status.
enum class ErrorKind {
    invalid_argument,  // violated precondition or inconsistent parameters
    data_format,       // malformed codeword / spec / mapping input
    decode_failure,    // more errors than the code guarantees
    search_failure,    // a combinatorial search came back empty
    limit_exceeded,    // an enumeration guard tripped
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(ErrorKind::invalid_argument, what);
}

}  // namespace lmpe
