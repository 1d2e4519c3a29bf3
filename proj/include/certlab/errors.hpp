#pragma once

#include <stdexcept>
#include <string>

namespace certlab {

// Base class for all domain errors raised by the library. Usage errors
// (bad arguments, size mismatches) throw std::invalid_argument instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A deck whose counts do not admit any graph (e.g. Kelly sums that do not
// divide evenly).
struct MalformedDeckError : Error {
    using Error::Error;
};

// A single card is inconsistent with the claimed global data (negative
// profile count in the downward recursion, etc.).
struct InconsistentCardError : Error {
    using Error::Error;
};

// Aggregate deck-level inconsistency (negative type requirement).
struct InconsistentDeckError : Error {
    using Error::Error;
};

// A cycle-trade whose support is not closed under the matching permutation.
struct InvalidTradeError : Error {
    using Error::Error;
};

// Instance generation could not satisfy its postconditions within the
// retry budget.
struct GenerationError : Error {
    using Error::Error;
};

// Reconstruction gave up. `ambiguous` distinguishes "every feasible card
// exceeded the ambiguity cap" from "all candidates exhausted".
struct ReconstructionError : Error {
    bool ambiguous;
    explicit ReconstructionError(const std::string& msg, bool ambiguous_ = false)
        : Error(msg), ambiguous(ambiguous_) {}
};

}  // namespace certlab
