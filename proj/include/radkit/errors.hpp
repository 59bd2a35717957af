#pragma once

#include <stdexcept>
#include <string>

namespace radkit {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Label was empty after trimming.
struct EmptyLabel : Error {
    using Error::Error;
};

// Input document is not valid JSON.
struct SyntaxError : Error {
    using Error::Error;
};

// Document parsed but violates the expected schema. `path` names the
// violating location, e.g. "Diseases_Change_Summary.Negatives".
struct SchemaError : Error {
    std::string path;
    SchemaError(std::string path_, const std::string& what_)
        : Error(path_.empty() ? what_ : path_ + ": " + what_), path(std::move(path_)) {}
};

// Text could not be parsed as the expected rendered format.
struct ParseFailure : Error {
    std::string text;
    explicit ParseFailure(const std::string& what_, std::string text_ = "")
        : Error(what_), text(std::move(text_)) {}
};

// A template placeholder has no value in the record.
struct MissingField : Error {
    std::string field;
    explicit MissingField(std::string field_)
        : Error("missing field: " + field_), field(std::move(field_)) {}
};

// A source id is not present in the split manifest.
struct UnknownSplit : Error {
    std::string id;
    explicit UnknownSplit(std::string id_)
        : Error("id not in split manifest: " + id_), id(std::move(id_)) {}
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

// External metric adapter could not be reached or spawned.
struct AdapterUnavailable : Error {
    using Error::Error;
};

// External metric adapter replied with something other than the protocol.
struct AdapterProtocolError : Error {
    using Error::Error;
};

struct UnknownStratum : Error {
    using Error::Error;
};

// More than half of the evaluation requests failed.
struct TooManyFailures : Error {
    using Error::Error;
};

// Bad configuration file or command-line setup.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace radkit
