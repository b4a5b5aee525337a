#pragma once

#include <stdexcept>
#include <string>

namespace ppg2 {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge endpoint outside 0..n-1.
struct OutOfRangeError : Error {
    using Error::Error;
};

// Edge (v, v) rejected on construction.
struct SelfLoopError : Error {
    using Error::Error;
};

// Bad byte or truncated bit vector in graph6 input.
struct MalformedGraph6Error : Error {
    using Error::Error;
};

// Bad edge-list text input.
struct MalformedInputError : Error {
    using Error::Error;
};

// Operation requires a triangle-free graph.
struct NotTriangleFreeError : Error {
    using Error::Error;
};

// Input exceeds a configured search bound.
struct SizeBoundError : Error {
    using Error::Error;
};

// Family parameter outside its documented range.
struct ParamError : Error {
    using Error::Error;
};

// Operation requires a connected graph.
struct DisconnectedError : Error {
    using Error::Error;
};

// Labeling search would exceed its budget.
struct SearchBudgetError : Error {
    using Error::Error;
};

// The three named vertices do not form a 2-path.
struct NotA2PathError : Error {
    using Error::Error;
};

// A connected triangle-free diameter-2 graph matched no catalog family and
// contained no obstruction minor.  The verification harness reports this as
// an anomaly; it never fires on real inputs.
struct CharacterizationError : Error {
    using Error::Error;
};

}  // namespace ppg2
