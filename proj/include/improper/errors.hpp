#pragma once

#include <stdexcept>
#include <string>

namespace improper {

/// Malformed graph6 input. Carries the byte index that triggered the failure.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t byte_index)
        : std::runtime_error(what + " (byte index " + std::to_string(byte_index) + ")"),
          byte_index_(byte_index) {}

    std::size_t byte_index() const { return byte_index_; }

private:
    std::size_t byte_index_;
};

/// The graph admits no interval representation.
class not_interval_error : public std::runtime_error {
public:
    explicit not_interval_error(const std::string& what = "not an interval graph")
        : std::runtime_error(what) {}
};

/// Input exceeds a hard search bound (vertex count, clique count, census size).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace improper
