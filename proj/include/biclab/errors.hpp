#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biclab {

/// Malformed graph6 input. `offset` is the byte position inside the line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A request above the size regime an exact algorithm supports.
class CapabilityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Input outside an operation's domain (disconnected host, intersecting pair, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace biclab
