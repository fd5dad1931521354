#pragma once

#include <stdexcept>
#include <string>

namespace fsw {

// Domain error thrown by every module; the CLI maps it to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fsw
