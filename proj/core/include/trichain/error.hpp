#pragma once

#include <stdexcept>
#include <string>

namespace trichain {

enum class ErrorCode {
    NotCubic,         // some vertex degree != 3
    NotSimple,        // self-loop or repeated edge
    OddN,             // vertex count odd or < 4
    BadN,             // vertex count outside an operation's supported range
    MalformedGraph6,  // undecodable graph6 bytes
    InvalidMove,      // move precondition violated
    AllZero,          // psi called with an empty tally
    NotStochastic,    // transition matrix row sum off by more than tolerance
    BadConfig,        // chain/CLI configuration rejected
    Io,               // file read/write failure
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a structured error code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace trichain
