#include "talex/group_ring.hpp"

namespace talex {

GroupRingElement GroupRingElement::of_word(const Word& w, long coeff) {
    GroupRingElement e;
    e.add_term(w, coeff);
    return e;
}

void GroupRingElement::add_term(const Word& w, long c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : rhs.terms_) r.add_term(w, c);
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : rhs.terms_) r.add_term(w, -c);
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
    GroupRingElement r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : rhs.terms_) r.add_term(w1 * w2, c1 * c2);
    return r;
}

GroupRingElement fox_derivative(const Word& w, int g) {
    GroupRingElement d;
    Word prefix;
    for (const auto& [h, sign] : w.letters()) {
        if (sign > 0) {
            if (h == g) d = d + GroupRingElement::of_word(prefix);
            prefix = prefix * Word::generator(h);
        } else {
            prefix = prefix * Word::generator(h, -1);
            if (h == g) d = d - GroupRingElement::of_word(prefix);
        }
    }
    return d;
}

}  // namespace talex
