#pragma once

#include <stdexcept>
#include <string>

namespace toricinv {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input shapes do not line up (non-square matrix for det, wrong vector length, ...).
struct DimensionMismatch : Error {
    using Error::Error;
};

// Cone validation failed; message lists every violated invariant.
struct InvalidCone : Error {
    using Error::Error;
};

// An enumeration certificate could not be established at the configured cap.
struct CapTooSmall : Error {
    using Error::Error;
};

// An enumeration would exceed the configured point/residue budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// The Q-Gorenstein index search ran past its cap.
struct IndexNotFound : Error {
    using Error::Error;
};

// Vertex enumeration detected an unbounded region.
struct UnboundedPolytope : Error {
    using Error::Error;
};

// Two supposedly equal internal computation routes disagreed.
struct InternalMismatch : Error {
    using Error::Error;
};

}  // namespace toricinv
