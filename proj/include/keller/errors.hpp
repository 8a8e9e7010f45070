#pragma once

// Exception hierarchy shared by all keller components. Every failure mode
// raised by the library derives from keller::Error.

#include <stdexcept>
#include <string>

namespace keller {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- poly-core --------------------------------------------------------------
struct RingMismatch : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct ExponentOverflow : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct BadModulus : Error { using Error::Error; };

// -- ring element arithmetic -------------------------------------------------
struct ZeroDenominator : Error { using Error::Error; };
// Element has no multiplicative inverse in the ring (e.g. a zero divisor
// mod a composite modulus, or a non-invertible lambda).
struct NonInvertible : Error { using Error::Error; };

// -- jacobian-verify ----------------------------------------------------------
struct NotSquare : Error { using Error::Error; };
// Map is not in the normalized form lambda_i*x_i + f_i with deg(f_i) >= 2.
struct MalformedNormalization : Error { using Error::Error; };

// -- families -----------------------------------------------------------------
struct DegenerateGenerator : Error { using Error::Error; };
struct ConditionViolated : Error { using Error::Error; };
struct TriangularityViolated : Error { using Error::Error; };

// -- formal-inverse -------------------------------------------------------------
struct NonInvertibleLinearPart : Error { using Error::Error; };
struct NonzeroConstantPart : Error { using Error::Error; };

// -- crypto ----------------------------------------------------------------------
struct BadDimension : Error { using Error::Error; };
struct BlockLengthMismatch : Error { using Error::Error; };
struct MalformedCiphertext : Error { using Error::Error; };

// -- text front end ----------------------------------------------------------------
struct SyntaxError : Error {
    SyntaxError(const std::string& what, int line, int column)
        : Error(what + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct UnknownVariable : SyntaxError {
    using SyntaxError::SyntaxError;
};

}  // namespace keller
