#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordbound {

/// An element or generating set does not belong to the group it is used with.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is not available for this group family (e.g. enumerating Z).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A search exhausted its memory budget or a size cap.
///
/// `partial_radius` is the last radius that was fully explored before the
/// budget ran out.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string const& what, std::size_t partial_radius)
      : std::runtime_error(what), partial_radius_(partial_radius) {}

  std::size_t partial_radius() const noexcept {
    return partial_radius_;
  }

 private:
  std::size_t partial_radius_;
};

}  // namespace wordbound
