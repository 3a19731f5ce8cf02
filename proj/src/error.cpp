#include "rhokit/error.hpp"

namespace rhokit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::domain: return "domain_error";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::numeric: return "numeric_error";
    case ErrorCode::discrepancy: return "discrepancy";
    case ErrorCode::io: return "io_error";
    case ErrorCode::usage: return "usage_error";
    }
    return "unknown_error";
}

}  // namespace rhokit
