#include "rhokit/limits.hpp"

#include <cstdlib>
#include <string>

namespace rhokit {

EngineLimits EngineLimits::defaults() {
    EngineLimits limits;
    if (const char* value = std::getenv("RHOKIT_ENUM_CAP")) {
        try {
            double cap = std::stod(value);
            if (cap > 0) limits.enumeration_cap = cap;
        } catch (const std::exception&) {
            // malformed override: keep the default
        }
    }
    return limits;
}

}  // namespace rhokit
