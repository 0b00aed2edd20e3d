#pragma once

#include <stdexcept>
#include <string>

namespace talex {

// Base class for every error the library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing elements of Q(zeta_m) and Q(zeta_m') without embedding first.
struct ModulusMismatch : Error {
    using Error::Error;
};

// Multiplicative inverse of zero.
struct ZeroInverse : Error {
    using Error::Error;
};

// Unit-normalization (or degree queries) of the zero polynomial.  A vanishing
// invariant is meaningful and must surface instead of being normalized away.
struct ZeroPolynomial : Error {
    using Error::Error;
};

// Exact polynomial division left a nonzero remainder.
struct NotDivisible : Error {
    using Error::Error;
};

// A value expected to be a rational integer is not.
struct NonRationalValue : Error {
    using Error::Error;
};

// The presentation does not abelianize to Z.
struct H1NotZ : Error {
    using Error::Error;
};

// Metabelian enumeration asked for an even modulus; knot determinants are odd.
struct EvenModulus : Error {
    using Error::Error;
};

// det Phi_rho(g_l - 1) = 0 for the chosen distinguished generator.
struct DenominatorZero : Error {
    using Error::Error;
};

// Wada's invariant needs relator count = generator count - 1.
struct NonDeficiencyOne : Error {
    using Error::Error;
};

// A representation was expected in the diagonal metabelian normal form.
struct NotNormalForm : Error {
    using Error::Error;
};

// Matrix inversion of a singular matrix over the coefficient field.
struct SingularMatrix : Error {
    using Error::Error;
};

// Input file syntax error with 1-based position info.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& message)
        : Error("line " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
};

}  // namespace talex
