#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geomove {

enum class ErrorKind {
    MalformedRecord,
    MissingField,
    BadTimestamp,
    FileError,
    MalformedRow,
    EmptyGold,
    LengthMismatch,
    EmptyMatrix,
    OutOfRange,
    UnknownCountry,
    EmptyInput,
    BadK,
    BadRange,
    DuplicateId,
    BadQuery,
    IndexNotReady,
    BadConfig,
};

std::string_view to_string(ErrorKind kind);

// Every module reports contract violations through this one type; `kind()`
// carries the category named in the module contracts.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix, for re-wrapping with context.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace geomove
