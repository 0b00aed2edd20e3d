#include "talex/knot_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace talex {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

int find_generator(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

Word parse_word_tokens(const std::vector<Token>& tokens, const std::vector<std::string>& names,
                       int line, bool lin_pair_context) {
    Word w;
    for (const Token& tok : tokens) {
        std::string name = tok.text;
        long exp = 1;
        if (auto caret = tok.text.find('^'); caret != std::string::npos) {
            name = tok.text.substr(0, caret);
            const std::string exp_text = tok.text.substr(caret + 1);
            try {
                size_t used = 0;
                exp = std::stol(exp_text, &used);
                if (used != exp_text.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(line, tok.column, "bad exponent '" + exp_text + "'");
            }
            if (exp == 0) throw ParseError(line, tok.column, "zero exponent is not allowed");
        }
        if (!valid_identifier(name)) throw ParseError(line, tok.column, "bad generator token '" + tok.text + "'");
        if (lin_pair_context && name == "mu")
            throw ParseError(line, tok.column, "mu may not appear inside a Lin pair word");
        const int g = find_generator(names, name);
        if (g < 0) throw ParseError(line, tok.column, "unknown generator '" + name + "'");
        w = w * Word::generator(g, static_cast<int>(exp));
    }
    return w;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<long> parse_rep_exponents(const std::string& rest, int line, int column) {
    // Accepts "1,2" and "k=1,2".
    std::string body = rest;
    if (body.rfind("k=", 0) == 0) body = body.substr(2);
    std::vector<long> exps;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            exps.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(line, column, "bad exponent list entry '" + item + "'");
        }
    }
    if (exps.empty()) throw ParseError(line, column, "empty exponent list");
    return exps;
}

}  // namespace

Presentation KnotInput::presentation() const {
    if (kind == Kind::Lin) {
        if (!lin) throw Error("Lin input without a Lin presentation");
        return lin_to_presentation(*lin);
    }
    if (!generic) throw Error("generic input without a presentation");
    return *generic;
}

KnotInput parse_input(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) lines.push_back(strip_comment(line));
    }

    KnotInput input;
    enum class State { ExpectKnot, ExpectBody, LinPairs, GenericGens, GenericRels } state =
        State::ExpectKnot;
    std::vector<std::string> lin_names;  // x1..x2g and mu
    int last_line = static_cast<int>(lines.size());

    for (size_t li = 0; li < lines.size(); ++li) {
        const int line_no = static_cast<int>(li) + 1;
        const std::string& line = lines[li];
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens[0];

        switch (state) {
            case State::ExpectKnot: {
                if (head.text != "knot")
                    throw ParseError(line_no, head.column, "expected 'knot <name>'");
                if (tokens.size() != 2)
                    throw ParseError(line_no, head.column, "expected exactly one knot name");
                if (!valid_identifier(tokens[1].text))
                    throw ParseError(line_no, tokens[1].column, "bad knot name");
                input.name = tokens[1].text;
                state = State::ExpectBody;
                break;
            }
            case State::ExpectBody: {
                if (head.text == "presentation") {
                    if (tokens.size() != 1)
                        throw ParseError(line_no, tokens[1].column, "unexpected tokens after 'presentation'");
                    input.kind = KnotInput::Kind::Generic;
                    input.generic = Presentation{};
                    state = State::GenericGens;
                } else if (head.text == "lin") {
                    if (tokens.size() != 2 || tokens[1].text.rfind("genus=", 0) != 0)
                        throw ParseError(line_no, head.column, "expected 'lin genus=<g>'");
                    int genus = 0;
                    try {
                        size_t used = 0;
                        genus = std::stoi(tokens[1].text.substr(6), &used);
                        if (used != tokens[1].text.size() - 6) throw std::invalid_argument("");
                    } catch (const std::exception&) {
                        throw ParseError(line_no, tokens[1].column, "bad genus");
                    }
                    if (genus < 1) throw ParseError(line_no, tokens[1].column, "genus must be positive");
                    input.kind = KnotInput::Kind::Lin;
                    input.lin = LinPresentation{genus, {}};
                    for (int i = 1; i <= 2 * genus; ++i) lin_names.push_back("x" + std::to_string(i));
                    lin_names.push_back("mu");
                    state = State::LinPairs;
                } else {
                    throw ParseError(line_no, head.column, "expected 'lin genus=<g>' or 'presentation'");
                }
                break;
            }
            case State::LinPairs: {
                if (head.text == "rep:") {
                    if (input.lin->pairs.size() != static_cast<size_t>(2 * input.lin->genus))
                        throw ParseError(line_no, head.column, "rep line before all pairs are given");
                    if (tokens.size() != 2)
                        throw ParseError(line_no, head.column, "expected 'rep: k1,k2,...'");
                    std::vector<long> exps = parse_rep_exponents(tokens[1].text, line_no, tokens[1].column);
                    if (exps.size() != static_cast<size_t>(2 * input.lin->genus))
                        throw ParseError(line_no, tokens[1].column,
                                         "exponent list length must be 2*genus = " +
                                             std::to_string(2 * input.lin->genus));
                    input.rep_exponents = std::move(exps);
                    break;
                }
                if (head.text != "pair:")
                    throw ParseError(line_no, head.column, "expected 'pair: <word> | <word>'");
                if (input.lin->pairs.size() >= static_cast<size_t>(2 * input.lin->genus))
                    throw ParseError(line_no, head.column,
                                     "too many pairs: a genus-" + std::to_string(input.lin->genus) +
                                         " Lin presentation has exactly " +
                                         std::to_string(2 * input.lin->genus) + " pairs");
                std::vector<Token> left, right;
                bool seen_bar = false;
                for (size_t ti = 1; ti < tokens.size(); ++ti) {
                    if (tokens[ti].text == "|") {
                        if (seen_bar) throw ParseError(line_no, tokens[ti].column, "more than one '|'");
                        seen_bar = true;
                    } else {
                        (seen_bar ? right : left).push_back(tokens[ti]);
                    }
                }
                if (!seen_bar) throw ParseError(line_no, head.column, "pair line needs '|' between the two words");
                Word plus = parse_word_tokens(left, lin_names, line_no, true);
                Word minus = parse_word_tokens(right, lin_names, line_no, true);
                if (plus.is_identity() || minus.is_identity())
                    input.warnings.push_back("pair " + std::to_string(input.lin->pairs.size() + 1) +
                                             " has an empty word; its relator is degenerate");
                input.lin->pairs.emplace_back(std::move(plus), std::move(minus));
                break;
            }
            case State::GenericGens: {
                if (head.text != "gens:")
                    throw ParseError(line_no, head.column, "expected 'gens: <name> ...'");
                if (tokens.size() < 2) throw ParseError(line_no, head.column, "empty generator list");
                for (size_t ti = 1; ti < tokens.size(); ++ti) {
                    if (!valid_identifier(tokens[ti].text))
                        throw ParseError(line_no, tokens[ti].column, "bad generator name");
                    if (find_generator(input.generic->generators, tokens[ti].text) >= 0)
                        throw ParseError(line_no, tokens[ti].column, "duplicate generator name");
                    input.generic->generators.push_back(tokens[ti].text);
                }
                state = State::GenericRels;
                break;
            }
            case State::GenericRels: {
                if (head.text != "rel:")
                    throw ParseError(line_no, head.column, "expected 'rel: <word>'");
                std::vector<Token> rest(tokens.begin() + 1, tokens.end());
                Word r = parse_word_tokens(rest, input.generic->generators, line_no, false);
                if (r.is_identity())
                    input.warnings.push_back("relator " + std::to_string(input.generic->relators.size() + 1) +
                                             " is trivial");
                input.generic->relators.push_back(std::move(r));
                break;
            }
        }
    }

    switch (state) {
        case State::ExpectKnot:
            throw ParseError(last_line, 1, "empty input: expected 'knot <name>'");
        case State::ExpectBody:
            throw ParseError(last_line, 1, "missing body: expected 'lin genus=<g>' or 'presentation'");
        case State::LinPairs:
            if (input.lin->pairs.size() != static_cast<size_t>(2 * input.lin->genus))
                throw ParseError(last_line, 1,
                                 "expected " + std::to_string(2 * input.lin->genus) + " pair lines, got " +
                                     std::to_string(input.lin->pairs.size()));
            break;
        case State::GenericGens:
            throw ParseError(last_line, 1, "missing 'gens:' line");
        case State::GenericRels:
            break;
    }
    return input;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names) {
    std::string out;
    const auto& letters = w.letters();
    size_t i = 0;
    while (i < letters.size()) {
        size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        const long run = static_cast<long>(j - i) * letters[i].second;
        if (!out.empty()) out += " ";
        out += generator_names.at(static_cast<size_t>(letters[i].first));
        if (run != 1) out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

std::string emit_input(const KnotInput& input) {
    std::string out = "knot " + input.name + "\n";
    if (input.kind == KnotInput::Kind::Lin) {
        const LinPresentation& lin = *input.lin;
        std::vector<std::string> names;
        for (int i = 1; i <= 2 * lin.genus; ++i) names.push_back("x" + std::to_string(i));
        names.push_back("mu");
        out += "lin genus=" + std::to_string(lin.genus) + "\n";
        for (const auto& [plus, minus] : lin.pairs)
            out += "pair: " + word_to_string(plus, names) + " | " + word_to_string(minus, names) + "\n";
        if (input.rep_exponents) {
            out += "rep: ";
            for (size_t i = 0; i < input.rep_exponents->size(); ++i) {
                if (i) out += ",";
                out += std::to_string((*input.rep_exponents)[i]);
            }
            out += "\n";
        }
    } else {
        const Presentation& p = *input.generic;
        out += "presentation\ngens:";
        for (const auto& g : p.generators) out += " " + g;
        out += "\n";
        for (const Word& r : p.relators) out += "rel: " + word_to_string(r, p.generators) + "\n";
    }
    return out;
}

}  // namespace talex
