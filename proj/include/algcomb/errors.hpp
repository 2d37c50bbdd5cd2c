#pragma once

#include <stdexcept>
#include <string>

namespace algcomb {

/// A configurable size/work budget was exceeded. Never a silent truncation.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace algcomb
