#pragma once

#include <stdexcept>
#include <string>

namespace finitetc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleDetected : Error {
    using Error::Error;
};
struct DuplicateLabel : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct SizeLimitExceeded : Error {
    using Error::Error;
};
struct EndpointMismatch : Error {
    using Error::Error;
};
struct DomainMismatch : Error {
    using Error::Error;
};
struct ParityViolation : Error {
    using Error::Error;
};
struct InvalidWitness : Error {
    using Error::Error;
};
struct Infeasible : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no = 0)
        : Error(msg + (line_no > 0 ? " (line " + std::to_string(line_no) + ")" : "")),
          line(line_no) {}
};

}  // namespace finitetc
