#pragma once

#include <stdexcept>
#include <string>

namespace lmc {

/// Base class for recoverable failures signalled by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A codeword is not in the image of the encoder (message recovery failed).
struct NotInImage : Error {
    using Error::Error;
};

/// A symbol required by a repair group is itself erased.
struct MissingData : Error {
    using Error::Error;
};

/// An interpolation or solve step received degenerate input.
struct SingularSystem : Error {
    using Error::Error;
};

/// More erasures than the repair guarantee covers.
struct TooManyErasures : Error {
    using Error::Error;
};

/// No repair group free of other erasures (unreachable when the erasure
/// budget precondition holds).
struct NoCleanGroup : Error {
    using Error::Error;
};

/// Cross-checked repair groups disagree on the recovered symbol.
struct NotACodeword : Error {
    using Error::Error;
};

}  // namespace lmc
