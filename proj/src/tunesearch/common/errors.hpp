#pragma once

#include <stdexcept>
#include <string>

namespace tunesearch {

// Root of all library errors so callers can catch one type at the CLI edge.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tunesearch
