#include "talex/twisted_alexander.hpp"

#include <stdexcept>

#include "talex/errors.hpp"

namespace talex {

namespace {

long alpha_of_word(const Word& w, const Abelianization& alpha) {
    long s = 0;
    for (const auto& [g, sign] : w.letters()) {
        if (g >= static_cast<int>(alpha.size()))
            throw std::invalid_argument("word uses a generator outside the abelianization");
        s += sign * alpha[static_cast<size_t>(g)];
    }
    return s;
}

}  // namespace

PolyMatrix apply_phi(const GroupRingElement& e, const Abelianization& alpha,
                     const Representation& rho) {
    const size_t d = static_cast<size_t>(rho.dimension);
    const long m = rho.modulus;
    PolyMatrix out(d, d, m);
    for (const auto& [w, coeff] : e.terms()) {
        const long exp = alpha_of_word(w, alpha);
        const CycloMatrix img = evaluate_word(rho, w);
        const Cyclo c = Cyclo::integer(coeff, m);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                Cyclo v = img.at(i, j) * c;
                if (!v.is_zero()) out.add_to(i, j, Laurent::monomial(v, exp));
            }
    }
    return out;
}

TwistedAlexResult wada_invariant(const Presentation& p, const Abelianization& alpha,
                                 const Representation& rho, std::optional<size_t> pivot) {
    if (!p.deficiency_one())
        throw NonDeficiencyOne("Wada's invariant needs relator count = generator count - 1");
    const size_t k = p.generator_count();
    if (alpha.size() != k) throw std::invalid_argument("abelianization size mismatch");
    if (rho.images.size() != k) throw std::invalid_argument("representation size mismatch");

    size_t l = 0;
    if (pivot) {
        l = *pivot;
        if (l >= k) throw std::invalid_argument("pivot generator index out of range");
    } else {
        bool found = false;
        for (size_t j = k; j-- > 0;) {
            if (alpha[j] != 0) {
                l = j;
                found = true;
                break;
            }
        }
        if (!found) throw DenominatorZero("no generator with nonzero abelianization image");
    }

    const GroupRingElement pivot_minus_one =
        GroupRingElement::of_word(Word::generator(static_cast<int>(l))) - GroupRingElement::one();
    const Laurent den = apply_phi(pivot_minus_one, alpha, rho).determinant();
    if (den.is_zero())
        throw DenominatorZero("det Phi(g_l - 1) = 0 for pivot " + p.generators[l]);

    const size_t d = static_cast<size_t>(rho.dimension);
    PolyMatrix big(d * (k - 1), d * (k - 1), rho.modulus);
    for (size_t i = 0; i + 1 < k; ++i) {
        size_t col_block = 0;
        for (size_t j = 0; j < k; ++j) {
            if (j == l) continue;
            const PolyMatrix block =
                apply_phi(fox_derivative(p.relators[i], static_cast<int>(j)), alpha, rho);
            for (size_t a = 0; a < d; ++a)
                for (size_t b = 0; b < d; ++b) big.set(i * d + a, col_block * d + b, block.at(a, b));
            ++col_block;
        }
    }

    TwistedAlexResult res;
    res.numerator = big.determinant();
    res.denominator = den;
    res.pivot = l;
    try {
        Laurent q = res.numerator.divide_exact(den);
        res.reduced = q.is_zero() ? q : q.normalize_units();
    } catch (const NotDivisible&) {
        res.rational = RationalFunction(res.numerator, den);
    }
    return res;
}

bool same_invariant(const TwistedAlexResult& a, const TwistedAlexResult& b) {
    return eq_up_to_units(a.numerator * b.denominator, b.numerator * a.denominator);
}

Laurent alexander_polynomial(const Presentation& p, const Abelianization& alpha, long modulus) {
    Representation trivial;
    trivial.dimension = 1;
    trivial.modulus = modulus;
    trivial.label = "trivial";
    for (size_t i = 0; i < p.generator_count(); ++i)
        trivial.images.push_back(CycloMatrix::identity(1, modulus));

    const TwistedAlexResult res = wada_invariant(p, alpha, trivial);
    const Laurent t_minus_1 =
        Laurent::variable(modulus) - Laurent::one(modulus);
    const Laurent delta = (res.numerator * t_minus_1).divide_exact(res.denominator);
    return delta.is_zero() ? delta : delta.normalize_units();
}

mpz_class knot_determinant(const Laurent& alex) {
    const Cyclo v = alex.evaluate(Cyclo::integer(-1, alex.modulus()));
    const Rational q = v.rational_value();  // throws NonRationalValue
    if (q.get_den() != 1) throw NonRationalValue("Delta(-1) is not an integer");
    mpz_class num = q.get_num();
    return abs(num);
}

FactorizationReport verify_factorization(const LinPresentation& lin, const MetabelianClass& cls,
                                         long working_modulus, std::optional<size_t> pivot) {
    const Presentation p = lin_to_presentation(lin);
    const Abelianization alpha = abelianization(p);
    const long m = working_modulus == 0 ? default_working_modulus(cls.n) : working_modulus;

    FactorizationReport rep;
    rep.cls = cls;
    rep.assoc_cls = associated_class(cls);
    rep.working_modulus = m;

    const Representation rho = metabelian_representation(cls, m);
    const Representation rho_hat = metabelian_representation(rep.assoc_cls, m);
    rep.alexander = alexander_polynomial(p, alpha, m);
    rep.rho_hat = wada_invariant(p, alpha, rho_hat, pivot);
    rep.adjoint_twisted = wada_invariant(p, alpha, adjoint(rho), pivot);

    const Laurent t = Laurent::variable(m);
    const Laurent one = Laurent::one(m);
    const Cyclo minus_one = Cyclo::integer(-1, m);

    if (!rep.rho_hat.is_polynomial()) {
        rep.diagnostic += "Delta^{rho_hat} is not a Laurent polynomial; ";
    } else if (rep.rho_hat.reduced->is_zero()) {
        rep.diagnostic += "Delta^{rho_hat} vanishes; ";
    } else {
        rep.rho_hat_even = rep.rho_hat.reduced->even_degrees_only();

        // P = Delta^{rho_hat}(i t) / (t^2 - 1)
        const Laurent substituted = rep.rho_hat.reduced->substitute(Cyclo::sqrt_minus_one(m));
        try {
            const Laurent p0 = substituted.divide_exact(t * t - one);
            if (p0.is_zero()) {
                rep.diagnostic += "extra factor P vanishes; ";
            } else {
                rep.extra_factor = p0.normalize_units();
                rep.p_even_symmetric = eq_up_to_units(p0, p0.substitute(minus_one));
                // (t-1) Delta_K(-t) P against the adjoint invariant, compared
                // as quotients so a rational left side still gets a verdict.
                const Laurent rhs =
                    (t - one) * rep.alexander.substitute(minus_one) * p0;
                rep.theorem_holds =
                    eq_up_to_units(rep.adjoint_twisted.numerator,
                                   rhs * rep.adjoint_twisted.denominator);
            }
        } catch (const NotDivisible&) {
            rep.diagnostic += "Delta^{rho_hat}(i t) is not divisible by t^2 - 1; ";
        }
    }

    // Q(t) from the proof: Delta^{Ad rho} = Delta_K(-t)/(-t-1) * Q(t).
    const Laurent alex_neg = rep.alexander.substitute(minus_one);
    try {
        const Laurent q_num = rep.adjoint_twisted.numerator * (-t - one);
        const Laurent q_den = rep.adjoint_twisted.denominator * alex_neg;
        const Laurent q = q_num.divide_exact(q_den);
        rep.q_vanishes_at_one = q.evaluate(Cyclo::one(m)).is_zero();
    } catch (const NotDivisible&) {
        rep.diagnostic += "Q = Delta^{Ad rho}(-t-1)/Delta_K(-t) is not a Laurent polynomial; ";
    }
    return rep;
}

}  // namespace talex
