// SPDX-License-Identifier: Apache-2.0

#ifndef EQUISOLID_ERROR_HPP_
#define EQUISOLID_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace equisolid {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A closure did not terminate within the configured element cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("not closed within cap " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// Syntax error with a 0-based character offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace equisolid

#endif  // EQUISOLID_ERROR_HPP_
