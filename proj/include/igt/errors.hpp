#pragma once

#include <stdexcept>
#include <string>

namespace igt {

/// Malformed or out-of-domain input: unknown ids, bad document structure.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input that is well-formed but violates a type invariant (self-loop,
/// non-antichain family, quota out of range, failed construction check).
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An exact computation would exceed a configured enumeration cap.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace igt
