#pragma once

#include <stdexcept>

namespace npslab {

// A computed value contradicts a structural identity of the algorithm
// (failed exact division, inconsistent exchange counts, step budget hit).
// Surfacing this loudly is the point: it signals a bug upstream.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The request exceeds a configured resource budget (too many fillings to
// enumerate, counts that do not fit the fixed-width accumulators).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace npslab
