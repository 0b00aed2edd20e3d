#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talex/errors.hpp"
#include "talex/presentation.hpp"

namespace talex {

// A parsed input file: either a Lin presentation or a generic finite
// presentation, with an optional explicit metabelian exponent vector.
struct KnotInput {
    enum class Kind { Lin, Generic };

    std::string name;
    Kind kind = Kind::Lin;
    std::optional<LinPresentation> lin;
    std::optional<Presentation> generic;
    std::optional<std::vector<long>> rep_exponents;
    std::vector<std::string> warnings;

    Presentation presentation() const;
};

// Line-oriented format:
//   knot <name>
//   lin genus=<g>
//   pair: <word> | <word>        (2g lines, words over x1 .. x2g)
//   rep: k1,k2,...               (optional)
// or
//   knot <name>
//   presentation
//   gens: a b ...
//   rel: <word>
// Words are whitespace-separated tokens `name`, `name^-1` or `name^k` with
// integer k != 0.  `#` starts a comment.  Throws ParseError with 1-based
// line/column on malformed input.
KnotInput parse_input(const std::string& text);

// Canonical text for an input; parse_input(emit_input(k)) reproduces k.
std::string emit_input(const KnotInput& input);

std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names);

}  // namespace talex
