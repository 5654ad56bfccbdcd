#pragma once

#include <stdexcept>
#include <string>

namespace relfree {

/// Input that fails to parse or violates a documented format contract.
class MalformedInputError : public std::runtime_error {
public:
  explicit MalformedInputError(const std::string& what) : std::runtime_error(what) {}
};

/// Closure of the given generators exceeded the element cap, so the group
/// is treated as not finite.
class NonFiniteGroupError : public std::runtime_error {
public:
  explicit NonFiniteGroupError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource limit (degree bound, element cap) was exceeded.
class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace relfree
