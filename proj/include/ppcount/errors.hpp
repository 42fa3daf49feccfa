#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppcount {

/// Malformed group-spec or index-list text. `position()` is the 0-based
/// offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A numeric parameter outside its admissible range (factor rank, generator index).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Exhaustive work would exceed the configured group-order cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t size, std::uint64_t cap, const std::string& what)
      : std::runtime_error(what + " of size " + std::to_string(size) +
                           " exceeds the cap of " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

/// An element whose shape does not fit the group descriptor it is used with.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation not available for one of the factors (e.g. matrices for I2(d)).
class UnsupportedFactor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A count that must be an exact integer was not. Always an implementation bug.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ppcount
