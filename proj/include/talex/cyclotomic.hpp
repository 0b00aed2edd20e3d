#pragma once

#include <gmpxx.h>

#include <vector>

#include "talex/errors.hpp"

namespace talex {

using Rational = mpq_class;

long euler_phi(long m);

// Coefficients of the m-th cyclotomic polynomial Phi_m, ascending degree,
// monic, length euler_phi(m)+1.  Computed once by exact division
// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d and cached.
const std::vector<Rational>& cyclotomic_polynomial(long m);

// An element of the cyclotomic field Q(zeta_m), stored as exact rational
// coordinates in the power basis {1, zeta_m, ..., zeta_m^(phi(m)-1)}.
// Coordinates are always fully reduced mod Phi_m; equality is coordinate-wise.
// Values are immutable after construction.
class Cyclo {
public:
    Cyclo() : modulus_(1), coords_(1, Rational(0)) {}

    static Cyclo zero(long m);
    static Cyclo one(long m);
    static Cyclo rational(const Rational& q, long m = 1);
    static Cyclo integer(long v, long m = 1);
    static Cyclo zeta(long m, long k = 1);  // zeta_m^k
    static Cyclo sqrt_minus_one(long m);    // zeta_m^(m/4); requires 4 | m

    long modulus() const { return modulus_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    // True iff all coordinates beyond the constant one vanish.
    bool is_rational() const;
    Rational rational_value() const;  // throws NonRationalValue

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& rhs) const;
    Cyclo operator-(const Cyclo& rhs) const;
    Cyclo operator*(const Cyclo& rhs) const;

    Cyclo inverse() const;    // throws ZeroInverse on zero
    Cyclo conjugate() const;  // zeta_m -> zeta_m^(-1)
    Cyclo pow(long e) const;  // negative e via inverse

    // Canonical embedding Q(zeta_m) -> Q(zeta_m2), zeta_m -> zeta_m2^(m2/m).
    // Requires modulus() | m2 (throws ModulusMismatch otherwise).
    Cyclo embedded(long m2) const;

    bool operator==(const Cyclo& rhs) const = default;

    // Sign of the first nonzero coordinate; 0 for the zero element.
    int leading_coordinate_sign() const;

private:
    Cyclo(long m, std::vector<Rational> coords) : modulus_(m), coords_(std::move(coords)) {}

    long modulus_;
    std::vector<Rational> coords_;  // length euler_phi(modulus_)
};

}  // namespace talex
