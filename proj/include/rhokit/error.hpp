#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rhokit {

enum class ErrorCode {
    parse,
    domain,
    cap_exceeded,
    numeric,
    discrepancy,
    io,
    usage,
};

std::string_view to_string(ErrorCode code);

// Base of every error the library throws. The code is stable and is what the
// CLI prints on standard error.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(ErrorCode::parse, message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error(ErrorCode::domain, message) {}
};

class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& message) : Error(ErrorCode::cap_exceeded, message) {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& message) : Error(ErrorCode::numeric, message) {}
};

class DiscrepancyError : public Error {
public:
    explicit DiscrepancyError(const std::string& message) : Error(ErrorCode::discrepancy, message) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error(ErrorCode::io, message) {}
};

}  // namespace rhokit
