#pragma once

#include <stdexcept>
#include <string>

namespace lrb {

// Malformed input: files, labels, command lines.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration bound was exceeded (n, t, ... above the supported range).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant failed: relation not a partial order, quotient not a
// lattice, duplicate hyperplanes, non-LRB composition where one was required.
struct StructureError : std::runtime_error {
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// An argument was outside an operation's domain (x not <= y, unknown label).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lrb
