#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meancx {

/// A group element or state does not match the encoding its group or system expects.
class EncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown group, system, family, or test-function name.
class UnknownNameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation is not defined for this group kind (e.g. exact enumeration on the real-line flow).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The sample cannot resolve the requested scale. Carries the minimum sample size.
class SampleSizeError : public std::invalid_argument {
 public:
  SampleSizeError(const std::string& what, std::size_t required)
      : std::invalid_argument(what), required_(required) {}
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

}  // namespace meancx
