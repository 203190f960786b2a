#pragma once

// Domain error hierarchy. Every failure mode of the library throws a named
// subclass of arrexp::Error so callers (and tests) can match on the exact
// condition instead of parsing message strings.

#include <stdexcept>
#include <string>

namespace arrexp {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ARREXP_ERROR(Name)                                               \
    struct Name : Error {                                                \
        Name() : Error(#Name) {}                                         \
        explicit Name(const std::string& m) : Error(#Name ": " + m) {}   \
    }

// core model
ARREXP_ERROR(ZeroForm);
ARREXP_ERROR(DuplicateLine);
ARREXP_ERROR(NonPositiveMult);
ARREXP_ERROR(SingularTransform);
ARREXP_ERROR(TooFewLines);
ARREXP_ERROR(LineNotInArrangement);
ARREXP_ERROR(MultiplicityUnderflow);

// tuples and Wronskians
ARREXP_ERROR(BadRange);
ARREXP_ERROR(NotDescending);

// exact matrices
ARREXP_ERROR(NotSquare);
ARREXP_ERROR(ShapeMismatch);
ARREXP_ERROR(IndexOutOfRange);
ARREXP_ERROR(NotSquareSelection);

// coefficient matrices of derivations
ARREXP_ERROR(NotNormalized);
ARREXP_ERROR(OddSize);
ARREXP_ERROR(Unbalanced);

// exponent formulas
ARREXP_ERROR(NotUnbalanced);
ARREXP_ERROR(NotSmall);

// theorem predicates and symbolic determinants
ARREXP_ERROR(NotApplicable);
ARREXP_ERROR(IdenticallyZero);
ARREXP_ERROR(ZeroPolynomial);
ARREXP_ERROR(DegenerateTemplate);

// p-adic valuations
ARREXP_ERROR(ZeroInput);
ARREXP_ERROR(NotPrime);

// configuration and I/O
ARREXP_ERROR(InvalidConfig);
ARREXP_ERROR(IoError);

#undef ARREXP_ERROR

}  // namespace arrexp
