#pragma once

#include <optional>

#include "talex/laurent.hpp"

namespace talex {

// Quotient of two Laurent polynomials with nonzero denominator.  Stored with
// the denominator unit-normalized; the numerator absorbs the unit so the
// value of the quotient is unchanged.
class RationalFunction {
public:
    RationalFunction(Laurent numerator, Laurent denominator);

    const Laurent& numerator() const { return num_; }
    const Laurent& denominator() const { return den_; }

    // Exact quotient when the division succeeds (unit-normalized unless zero).
    std::optional<Laurent> try_reduce() const;

private:
    Laurent num_, den_;
};

// Equality of quotients up to +-t^k: cross-multiplied comparison.
bool eq_up_to_units(const RationalFunction& a, const RationalFunction& b);

}  // namespace talex
