#pragma once

#include <string>
#include <utility>
#include <vector>

#include "talex/word.hpp"

namespace talex {

// A finite group presentation <g_1, ..., g_k | r_1, ..., r_n>.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    size_t generator_count() const { return generators.size(); }
    bool deficiency_one() const { return relators.size() + 1 == generators.size(); }
    int generator_index(const std::string& name) const;  // -1 when absent
    void validate() const;                               // letter indices in range
};

// A Lin presentation <x_1, ..., x_2g, mu | mu a_i^+ mu^-1 = a_i^->.
// Pair words use generator indices 0 .. 2g-1 for x_1 .. x_2g only; mu gets
// index 2g in the derived presentation.
struct LinPresentation {
    int genus = 0;
    std::vector<std::pair<Word, Word>> pairs;  // (a_i^+, a_i^-), 2g of them

    int mu_index() const { return 2 * genus; }
    std::vector<std::string> generator_names() const;
    void validate() const;
};

// Relator i is the freely reduced word mu a_i^+ mu^-1 (a_i^-)^-1; the result
// has deficiency one with mu as the last generator.
Presentation lin_to_presentation(const LinPresentation& lin);

// Image of each generator in H_1 = Z.  Normalized so the first generator
// with nonzero image maps to a positive integer.
using Abelianization = std::vector<long>;

// Computes the induced map onto H_1 via Smith normal form of the relator
// exponent matrix; throws H1NotZ when the abelianization is not infinite
// cyclic.
Abelianization abelianization(const Presentation& p);

}  // namespace talex
