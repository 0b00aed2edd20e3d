#include "talex/presentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "talex/errors.hpp"
#include "talex/snf.hpp"

namespace talex {

int Presentation::generator_index(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

void Presentation::validate() const {
    for (const Word& r : relators)
        if (r.max_generator() >= static_cast<int>(generators.size()))
            throw Error("relator uses a generator outside the presentation");
}

std::vector<std::string> LinPresentation::generator_names() const {
    std::vector<std::string> names;
    for (int i = 1; i <= 2 * genus; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("mu");
    return names;
}

void LinPresentation::validate() const {
    if (genus < 1) throw Error("Lin presentation needs positive genus");
    if (pairs.size() != static_cast<size_t>(2 * genus))
        throw Error("Lin presentation needs exactly 2g pairs");
    for (const auto& [plus, minus] : pairs) {
        if (plus.max_generator() >= 2 * genus || minus.max_generator() >= 2 * genus)
            throw Error("Lin pair words may only use x_1 .. x_2g");
    }
}

Presentation lin_to_presentation(const LinPresentation& lin) {
    lin.validate();
    Presentation p;
    p.generators = lin.generator_names();
    const Word mu = Word::generator(lin.mu_index());
    for (const auto& [plus, minus] : lin.pairs)
        p.relators.push_back(mu * plus * mu.inverse() * minus.inverse());
    return p;
}

Abelianization abelianization(const Presentation& p) {
    const size_t k = p.generator_count();
    const size_t r = p.relators.size();
    p.validate();
    if (k == 0) throw H1NotZ("presentation has no generators");

    // Columns of A are the relator exponent vectors; H_1 = coker(A).
    IntMatrix A(k, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < k; ++j) A.at(j, i) = p.relators[i].exponent_sum(static_cast<int>(j));

    SmithForm f = smith_normal_form(A);

    // coker(A) = (+) Z/d_i (+) Z^(k - min(k,r)); infinite cyclic needs exactly
    // one free coordinate and trivial torsion.
    const size_t diag = std::min(k, r);
    std::vector<size_t> free_rows;
    for (size_t i = 0; i < diag; ++i) {
        if (f.D.at(i, i) == 0)
            free_rows.push_back(i);
        else if (f.D.at(i, i) != 1)
            throw H1NotZ("presentation has torsion in H_1");
    }
    for (size_t i = diag; i < k; ++i) free_rows.push_back(i);
    if (free_rows.size() != 1) throw H1NotZ("H_1 has rank != 1");

    Abelianization alpha(k, 0);
    for (size_t j = 0; j < k; ++j) alpha[j] = static_cast<long>(f.U.at(free_rows[0], j).get_si());

    for (size_t j = 0; j < k; ++j) {
        if (alpha[j] == 0) continue;
        if (alpha[j] < 0)
            for (auto& a : alpha) a = -a;
        break;
    }
    return alpha;
}

}  // namespace talex
