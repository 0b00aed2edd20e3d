#pragma once

#include <map>

#include "talex/word.hpp"

namespace talex {

// An integer formal sum of free-group words: an element of the group ring
// Z[F].  No zero coefficients are stored.
class GroupRingElement {
public:
    GroupRingElement() = default;

    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return of_word(Word()); }
    static GroupRingElement of_word(const Word& w, long coeff = 1);

    const std::map<Word, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement operator-() const;
    GroupRingElement operator+(const GroupRingElement& rhs) const;
    GroupRingElement operator-(const GroupRingElement& rhs) const;
    GroupRingElement operator*(const GroupRingElement& rhs) const;

    bool operator==(const GroupRingElement& rhs) const = default;

private:
    void add_term(const Word& w, long c);

    std::map<Word, long> terms_;
};

// Fox free differential calculus: the derivative of w with respect to
// generator g, characterized by d(uv) = du + u.dv, dg/dg = 1,
// dg^-1/dg = -g^-1, dh^(+-1)/dg = 0 for h != g.
GroupRingElement fox_derivative(const Word& w, int g);

}  // namespace talex
