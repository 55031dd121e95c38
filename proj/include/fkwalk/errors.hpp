#pragma once

#include <stdexcept>
#include <string>

namespace fkwalk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Nearest boundary point is not unique (e.g. the center of a disk).
struct AmbiguousProjection : Error {
    using Error::Error;
};

/// Rejection sampler exhausted its draw budget without an accepted point.
struct RejectionBudgetExceeded : Error {
    using Error::Error;
};

/// A time argument fell outside its admissible interval.
struct InvalidTime : Error {
    using Error::Error;
};

/// Threshold below the a.s. lower bound of the bridge maximum.
struct InvalidThreshold : Error {
    using Error::Error;
};

/// Operation called in a state its precondition excludes.
struct InvalidState : Error {
    using Error::Error;
};

/// Barrier parameters violate 0 < a < x.
struct InvalidBarrier : Error {
    using Error::Error;
};

/// Both step endpoints sit exactly on the boundary, so the interpolation
/// weight lambda is undefined.
struct DegenerateLambda : Error {
    using Error::Error;
};

/// Walk or root-find started from a point outside the domain.
struct StartOutsideDomain : Error {
    using Error::Error;
};

/// Bias computation requested for a problem without an exact solution.
struct MissingExactSolution : Error {
    using Error::Error;
};

/// A walker exceeded the per-walker step cap.
struct StepCapExceeded : Error {
    using Error::Error;
};

} // namespace fkwalk
