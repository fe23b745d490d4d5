#ifndef ZSF_ERRORS_HPP
#define ZSF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zsf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge endpoints out of range, or a self-loop.
struct InvalidEdgeError : Error { using Error::Error; };

// n(n-1)/2 is odd, so no zero-sum labeling exists.
struct ParityError : Error { using Error::Error; };

// A pattern or construction needs a divisibility condition that n fails.
struct DivisibilityError : Error { using Error::Error; };

// Malformed pattern specification string.
struct SpecError : Error { using Error::Error; };

// Enumeration would exceed the configured guard.
struct TooLargeError : Error { using Error::Error; };

// Vertex map is not a valid embedding of the pattern.
struct InvalidEmbeddingError : Error { using Error::Error; };

// An edge exchange did not produce a valid path factor.
struct NotAFactorError : Error { using Error::Error; };

// Randomized search exhausted its restart budget; indicates a bug for
// zero-sum inputs, surfaced instead of looping forever.
struct SearchExhaustedError : Error { using Error::Error; };

// Operation called outside its stated precondition.
struct PreconditionError : Error { using Error::Error; };

// File or stream contents do not match the expected format.
struct ParseError : Error { using Error::Error; };

} // namespace zsf

#endif
