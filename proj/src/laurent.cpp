#include "talex/laurent.hpp"

#include <utility>
#include <vector>

namespace talex {

Laurent Laurent::one(long m) {
    return constant(Cyclo::one(m));
}

Laurent Laurent::constant(const Cyclo& c) {
    return monomial(c, 0);
}

Laurent Laurent::monomial(const Cyclo& c, long e) {
    Laurent p(c.modulus());
    p.add_term(e, c);
    return p;
}

Laurent Laurent::variable(long m, long e) {
    return monomial(Cyclo::one(m), e);
}

long Laurent::min_degree() const {
    if (terms_.empty()) throw ZeroPolynomial("degree of zero polynomial");
    return terms_.begin()->first;
}

long Laurent::max_degree() const {
    if (terms_.empty()) throw ZeroPolynomial("degree of zero polynomial");
    return terms_.rbegin()->first;
}

Cyclo Laurent::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclo::zero(modulus_) : it->second;
}

void Laurent::add_term(long e, const Cyclo& c) {
    if (c.modulus() != modulus_) throw ModulusMismatch("coefficient modulus mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    Cyclo s = it->second + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

Laurent Laurent::operator-() const {
    Laurent r(modulus_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Laurent Laurent::operator+(const Laurent& rhs) const {
    if (modulus_ != rhs.modulus_) throw ModulusMismatch("polynomial modulus mismatch in +");
    Laurent r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& rhs) const {
    if (modulus_ != rhs.modulus_) throw ModulusMismatch("polynomial modulus mismatch in -");
    Laurent r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, -c);
    return r;
}

Laurent Laurent::operator*(const Laurent& rhs) const {
    if (modulus_ != rhs.modulus_) throw ModulusMismatch("polynomial modulus mismatch in *");
    Laurent r(modulus_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Laurent Laurent::shifted(long k) const {
    Laurent r(modulus_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

Laurent Laurent::scaled(const Cyclo& c) const {
    Laurent r(modulus_);
    for (const auto& [e, a] : terms_) r.add_term(e, a * c);
    return r;
}

Laurent Laurent::substitute(const Cyclo& c) const {
    if (c.is_zero()) throw Error("substitute: scale factor must be nonzero");
    Laurent r(modulus_);
    for (const auto& [e, a] : terms_) r.add_term(e, a * c.pow(e));
    return r;
}

Laurent Laurent::reciprocal() const {
    Laurent r(modulus_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

Cyclo Laurent::evaluate(const Cyclo& c) const {
    Cyclo acc = Cyclo::zero(modulus_);
    for (const auto& [e, a] : terms_) acc = acc + a * c.pow(e);
    return acc;
}

Laurent Laurent::divide_exact(const Laurent& q) const {
    if (q.modulus_ != modulus_) throw ModulusMismatch("polynomial modulus mismatch in /");
    if (q.is_zero()) throw Error("division by the zero polynomial");
    if (is_zero()) return zero(modulus_);

    // t is a unit, so shift both operands to ordinary polynomials with a
    // nonzero constant term and divide there.
    const long sp = min_degree(), sq = q.min_degree();
    const size_t dp = static_cast<size_t>(max_degree() - sp);
    const size_t dq = static_cast<size_t>(q.max_degree() - sq);
    if (dp < dq) throw NotDivisible("quotient would not be a Laurent polynomial");

    std::vector<Cyclo> rem(dp + 1, Cyclo::zero(modulus_));
    for (const auto& [e, c] : terms_) rem[static_cast<size_t>(e - sp)] = c;
    std::vector<Cyclo> div(dq + 1, Cyclo::zero(modulus_));
    for (const auto& [e, c] : q.terms_) div[static_cast<size_t>(e - sq)] = c;

    const Cyclo lead_inv = div[dq].inverse();
    std::vector<Cyclo> quot(dp - dq + 1, Cyclo::zero(modulus_));
    for (size_t k = dp + 1; k-- > dq;) {
        if (rem[k].is_zero()) continue;
        Cyclo f = rem[k] * lead_inv;
        quot[k - dq] = f;
        for (size_t i = 0; i <= dq; ++i) rem[k - dq + i] = rem[k - dq + i] - f * div[i];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw NotDivisible("nonzero remainder in exact division");

    Laurent r(modulus_);
    for (size_t i = 0; i < quot.size(); ++i)
        if (!quot[i].is_zero()) r.terms_.emplace(static_cast<long>(i) + sp - sq, quot[i]);
    return r;
}

Laurent Laurent::normalize_units() const {
    if (is_zero()) throw ZeroPolynomial("cannot unit-normalize the zero polynomial");
    Laurent p = shifted(-min_degree());
    if (p.terms_.rbegin()->second.leading_coordinate_sign() < 0) p = -p;
    return p;
}

bool Laurent::even_degrees_only() const {
    for (const auto& [e, c] : terms_)
        if (e % 2 != 0) return false;
    return true;
}

Laurent Laurent::embedded(long m2) const {
    Laurent r(m2);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.embedded(m2));
    return r;
}

bool eq_up_to_units(const Laurent& p, const Laurent& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return p.normalize_units() == q.normalize_units();
}

}  // namespace talex
