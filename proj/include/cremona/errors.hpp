#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

/// Malformed input text (map expressions, matrix literals, sequences).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), position_(npos) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Well-formed input that violates an operation's precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal iteration or search budget was exhausted.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The sail search box did not contain two full periods of the sail.
class SailBoundTooSmall : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};

} // namespace cremona
