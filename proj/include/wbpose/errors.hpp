#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wbpose {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed file content (bad JSON, etc). Message carries the parser's locus.
struct ParseError : Error {
    using Error::Error;
};

/// Well-formed content with the wrong shape or illegal values.
struct SchemaError : Error {
    using Error::Error;
};

/// A taxonomy that fails its structural invariants. Every violation is kept.
struct ValidationError : Error {
    explicit ValidationError(std::vector<std::string> violations_)
        : Error(join(violations_)), violations(std::move(violations_)) {}

    std::vector<std::string> violations;

private:
    static std::string join(const std::vector<std::string>& vs) {
        std::string msg = "taxonomy validation failed:";
        for (const auto& v : vs) {
            msg += "\n  - " + v;
        }
        return msg;
    }
};

struct UnknownPose : Error {
    using Error::Error;
};

struct UnknownId : Error {
    using Error::Error;
};

struct NoPath : Error {
    using Error::Error;
};

struct TooShort : Error {
    using Error::Error;
};

struct InvalidCutoff : Error {
    using Error::Error;
};

struct UnknownSegment : Error {
    using Error::Error;
};

struct CountMismatch : Error {
    using Error::Error;
};

struct EmptyReport : Error {
    using Error::Error;
};

}  // namespace wbpose
