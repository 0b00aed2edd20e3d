#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace talex {

// A freely reduced word in a free group.  Letters are (generator index,
// exponent) pairs with exponent +1 or -1; no adjacent inverse pair survives
// any constructor or product.
class Word {
public:
    using Letter = std::pair<int, int>;  // (generator, +1/-1)

    Word() = default;

    static Word generator(int g, int exp = 1);  // g^exp, |exp| letters
    static Word from_letters(const std::vector<Letter>& letters);

    bool is_identity() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    Word operator*(const Word& rhs) const;
    Word inverse() const;
    Word pow(int e) const;

    // Net exponent of generator g; additive under concatenation.
    long exponent_sum(int g) const;
    // Largest generator index appearing, or -1 for the identity.
    int max_generator() const;

    bool operator==(const Word& rhs) const = default;
    auto operator<=>(const Word& rhs) const = default;

private:
    void push(int g, int sign);

    std::vector<Letter> letters_;
};

}  // namespace talex
