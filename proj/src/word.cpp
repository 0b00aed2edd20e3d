#include "talex/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace talex {

void Word::push(int g, int sign) {
    if (!letters_.empty() && letters_.back().first == g && letters_.back().second == -sign)
        letters_.pop_back();
    else
        letters_.emplace_back(g, sign);
}

Word Word::generator(int g, int exp) {
    if (g < 0) throw std::invalid_argument("negative generator index");
    Word w;
    const int sign = exp < 0 ? -1 : 1;
    for (int i = 0; i != exp; i += sign) w.letters_.emplace_back(g, sign);
    return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (const auto& [g, s] : letters) {
        if (g < 0 || (s != 1 && s != -1)) throw std::invalid_argument("bad letter");
        w.push(g, s);
    }
    return w;
}

Word Word::operator*(const Word& rhs) const {
    Word w = *this;
    for (const auto& [g, s] : rhs.letters_) w.push(g, s);
    return w;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.emplace_back(it->first, -it->second);
    return w;
}

Word Word::pow(int e) const {
    Word base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    Word acc;
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

long Word::exponent_sum(int g) const {
    long s = 0;
    for (const auto& [h, sign] : letters_)
        if (h == g) s += sign;
    return s;
}

int Word::max_generator() const {
    int m = -1;
    for (const auto& [g, s] : letters_) m = std::max(m, g);
    return m;
}

}  // namespace talex
