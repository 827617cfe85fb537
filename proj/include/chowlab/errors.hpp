#pragma once

#include <stdexcept>
#include <string>

namespace chowlab {

// Structural misuse: mismatched alphabets/truncations, malformed partitions,
// bad serialized input. CLI maps this to exit code 2.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematical degeneracy: a leading coefficient vanishes, a pairing selection
// cannot reach full rank, etc. CLI maps this to exit code 1.
class DegeneracyError : public std::runtime_error {
public:
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// Decode detected that the oracle is not the evaluation of any standard cycle.
class NotStandardError : public std::runtime_error {
public:
    explicit NotStandardError(const std::string& what) : std::runtime_error(what) {}
};

// Violation of an invariant the underlying theory guarantees (e.g. a
// Chern-number matrix losing rank). Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace chowlab
