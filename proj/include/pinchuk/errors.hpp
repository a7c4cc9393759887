#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pinchuk {

/// Error thrown for malformed textual input (polynomials, rationals).
/// Carries the byte offset of the first offending character so callers can
/// point at the problem.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace pinchuk
