#include "talex/rational_function.hpp"

#include <utility>

namespace talex {

RationalFunction::RationalFunction(Laurent numerator, Laurent denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DenominatorZero("rational function with zero denominator");
    // Normalize so the denominator is the canonical orbit representative;
    // the same unit is divided out of the numerator.
    const long shift = den_.min_degree();
    Laurent canon = den_.normalize_units();
    const bool negated = !(canon == den_.shifted(-shift));
    num_ = num_.shifted(-shift);
    if (negated) num_ = -num_;
    den_ = std::move(canon);
}

std::optional<Laurent> RationalFunction::try_reduce() const {
    try {
        Laurent q = num_.divide_exact(den_);
        return q.is_zero() ? q : q.normalize_units();
    } catch (const NotDivisible&) {
        return std::nullopt;
    }
}

bool eq_up_to_units(const RationalFunction& a, const RationalFunction& b) {
    return eq_up_to_units(a.numerator() * b.denominator(), b.numerator() * a.denominator());
}

}  // namespace talex
