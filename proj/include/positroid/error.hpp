#pragma once

#include <stdexcept>
#include <string>

namespace positroid {

enum class ErrorKind {
  kInput,             // malformed text, out-of-range element, bad ground size
  kIncomparableSize,  // Gale comparison of subsets with different sizes
  kEmptySet,          // extremum of an empty subset
  kInvalidPermutation,
  kInvalidNecklace,
  kPrecondition,      // e.g. phi at a loop, trace of a degenerate minor
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace positroid
