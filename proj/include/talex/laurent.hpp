#pragma once

#include <map>

#include "talex/cyclotomic.hpp"

namespace talex {

// A Laurent polynomial in t over Q(zeta_m).  The term map never stores zero
// coefficients; the zero polynomial has an empty map.  All coefficients share
// one cyclotomic modulus.  Values are immutable after construction.
class Laurent {
public:
    explicit Laurent(long modulus = 1) : modulus_(modulus) {}

    static Laurent zero(long m) { return Laurent(m); }
    static Laurent one(long m);
    static Laurent constant(const Cyclo& c);
    static Laurent monomial(const Cyclo& c, long e);
    static Laurent variable(long m, long e = 1);  // t^e

    long modulus() const { return modulus_; }
    const std::map<long, Cyclo>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long min_degree() const;  // throws ZeroPolynomial
    long max_degree() const;  // throws ZeroPolynomial
    Cyclo coeff(long e) const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& rhs) const;
    Laurent operator-(const Laurent& rhs) const;
    Laurent operator*(const Laurent& rhs) const;

    Laurent shifted(long k) const;  // multiply by t^k
    Laurent scaled(const Cyclo& c) const;

    // t -> c*t for nonzero scalar c; each degree-d coefficient picks up c^d.
    Laurent substitute(const Cyclo& c) const;
    // t -> t^(-1).
    Laurent reciprocal() const;
    Cyclo evaluate(const Cyclo& c) const;

    // Exact quotient in Q(zeta_m)[t^(+-1)]; throws NotDivisible when the
    // remainder is nonzero (the caller falls back to a rational function).
    Laurent divide_exact(const Laurent& q) const;

    // Canonical representative of the {+-t^k} orbit: minimum degree shifted
    // to 0, then the whole polynomial negated if the first nonzero rational
    // coordinate of the top coefficient is negative.  Idempotent.
    // Throws ZeroPolynomial on zero input.
    Laurent normalize_units() const;

    // All exponents even.  Unit ambiguity is settled by normalize_units
    // first when parity of a representative matters.
    bool even_degrees_only() const;

    Laurent embedded(long m2) const;

    bool operator==(const Laurent& rhs) const = default;

private:
    void add_term(long e, const Cyclo& c);

    long modulus_;
    std::map<long, Cyclo> terms_;
};

bool eq_up_to_units(const Laurent& p, const Laurent& q);

}  // namespace talex
