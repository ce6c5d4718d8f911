#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzv {

/// Input outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Index or order outside the stored range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed argument-string text; carries the offending character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Bad command-line or registry usage (unknown id, bad flag value).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mzv
