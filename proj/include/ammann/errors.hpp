#pragma once

#include <stdexcept>
#include <string>

namespace ammann {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter is outside its documented range (n < 1, a > F_{n-1}, ...).
class InvalidRangeError : public Error {
public:
  explicit InvalidRangeError(const std::string& msg) : Error(msg) {}
};

/// Removal mask deletes every child: the limit set would be empty.
class EmptyFractalError : public Error {
public:
  explicit EmptyFractalError(const std::string& msg) : Error(msg) {}
};

/// Projected work exceeds a configured cap (tile count guard).
class ResourceLimitError : public Error {
public:
  explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

} // namespace ammann
