// Exception types shared across the toolkit. Every condition named in an
// operation contract gets its own type so callers (and tests) can match on it.
#pragma once

#include <stdexcept>
#include <string>

namespace zplusi {

// Base class: catching zplusi::Error catches everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };

// exact arithmetic
struct BothZero : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct PoleAtPoint : Error { using Error::Error; };
// Irreducibility certification ran out of budget (huge coefficients); the
// caller may retry with an explicit assertion flag.
struct CannotCertify : Error { using Error::Error; };

// places / rings
struct NotInRing : Error { using Error::Error; };
struct UnsupportedRing : Error { using Error::Error; };

// curve
struct NotCubic : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct HasCM : Error { using Error::Error; };
struct ReducibleF : Error { using Error::Error; };
struct NotOnCurve : Error { using Error::Error; };
struct NotAMultiple : Error { using Error::Error; };
struct InfinityInput : Error { using Error::Error; };

// denef
struct ZeroN : Error { using Error::Error; };
struct TorsionEncountered : Error { using Error::Error; };
struct RatioMismatch : Error { using Error::Error; };
struct NotCoprimeInput : Error { using Error::Error; };

// dioph
struct ArityMismatch : Error { using Error::Error; };
struct NotCollapsible : Error { using Error::Error; };
struct EmptyGenerators : Error { using Error::Error; };
struct BadAlgebra : Error { using Error::Error; };
struct NotInZPlusI : Error { using Error::Error; };
struct PoleAtPrime : Error { using Error::Error; };

}  // namespace zplusi
