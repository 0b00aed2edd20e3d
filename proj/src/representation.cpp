#include "talex/representation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "talex/errors.hpp"
#include "talex/snf.hpp"

namespace talex {

CycloMatrix evaluate_word(const Representation& rho, const Word& w) {
    const size_t d = static_cast<size_t>(rho.dimension);
    CycloMatrix acc = CycloMatrix::identity(d, rho.modulus);
    std::vector<std::optional<CycloMatrix>> inverses(rho.images.size());
    for (const auto& [g, sign] : w.letters()) {
        if (g >= static_cast<int>(rho.images.size()))
            throw std::invalid_argument("word uses a generator without an image");
        if (sign > 0) {
            acc = acc * rho.images[static_cast<size_t>(g)];
        } else {
            auto& inv = inverses[static_cast<size_t>(g)];
            if (!inv) inv = rho.images[static_cast<size_t>(g)].inverse();
            acc = acc * *inv;
        }
    }
    return acc;
}

bool check_relations(const Presentation& p, const Representation& rho) {
    if (p.generator_count() != rho.images.size())
        throw std::invalid_argument("generator count does not match representation");
    for (const Word& r : p.relators)
        if (!evaluate_word(rho, r).is_identity()) return false;
    return true;
}

std::string MetabelianClass::label() const {
    std::string s = "k=(";
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exponents[i]);
    }
    s += ") mod " + std::to_string(n);
    return s;
}

MetabelianClass canonical_class(std::vector<long> k, long n) {
    if (n < 1) throw std::invalid_argument("class modulus must be positive");
    for (auto& v : k) {
        v %= n;
        if (v < 0) v += n;
    }
    std::vector<long> neg(k.size());
    for (size_t i = 0; i < k.size(); ++i) neg[i] = k[i] == 0 ? 0 : n - k[i];
    return MetabelianClass{std::min(k, neg), n};
}

long default_working_modulus(long n) {
    return std::lcm(4L, n);
}

Representation metabelian_representation(const MetabelianClass& cls, long working_modulus) {
    const long n = cls.n;
    const long m = working_modulus == 0 ? default_working_modulus(n) : working_modulus;
    if (m % 4 != 0 || m % n != 0)
        throw Error("working modulus " + std::to_string(m) + " lacks required roots of unity (needs lcm(4," +
                    std::to_string(n) + ") | m)");
    Representation rho;
    rho.dimension = 2;
    rho.modulus = m;
    rho.label = cls.label();
    const long stride = m / n;
    for (long k : cls.exponents) {
        CycloMatrix x(2, 2, m);
        x.set(0, 0, Cyclo::zeta(m, k * stride));
        x.set(1, 1, Cyclo::zeta(m, -k * stride));
        rho.images.push_back(x);
    }
    CycloMatrix mu(2, 2, m);
    mu.set(0, 1, Cyclo::one(m));
    mu.set(1, 0, -Cyclo::one(m));
    rho.images.push_back(mu);
    return rho;
}

MetabelianEnumeration enumerate_metabelian(const LinPresentation& lin, long n, long working_modulus) {
    lin.validate();
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    if (n % 2 == 0) throw EvenModulus("knot determinants are odd; got even modulus " + std::to_string(n));

    const size_t g2 = static_cast<size_t>(2 * lin.genus);
    IntMatrix E(g2, g2);
    for (size_t i = 0; i < g2; ++i)
        for (size_t j = 0; j < g2; ++j)
            E.at(i, j) = lin.pairs[i].first.exponent_sum(static_cast<int>(j)) +
                         lin.pairs[i].second.exponent_sum(static_cast<int>(j));

    // E k = 0 (mod n)  <=>  D y = 0 (mod n) with y = V^-1 k, so y_i runs over
    // the gcd(d_i, n) multiples of n/gcd(d_i, n), and k = V y.
    SmithForm f = smith_normal_form(E);
    const mpz_class nz(n);
    std::vector<long> choice_count(g2), step(g2);
    mpz_class total(1);
    for (size_t i = 0; i < g2; ++i) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), f.D.at(i, i).get_mpz_t(), nz.get_mpz_t());
        choice_count[i] = static_cast<long>(g.get_si());
        step[i] = n / choice_count[i];
        total *= g;
    }
    if (total > 1L << 20) throw Error("metabelian solution set too large to enumerate");

    IntMatrix Vmod(g2, g2);
    for (size_t i = 0; i < g2; ++i)
        for (size_t j = 0; j < g2; ++j) {
            mpz_class v = f.V.at(i, j) % n;
            if (v < 0) v += n;
            Vmod.at(i, j) = v;
        }

    std::set<std::vector<long>> canonicals;
    std::vector<long> counter(g2, 0);
    bool done = g2 == 0;
    long count = 0;
    while (!done) {
        ++count;
        std::vector<long> k(g2, 0);
        for (size_t j = 0; j < g2; ++j) {
            long acc = 0;
            for (size_t i = 0; i < g2; ++i)
                acc = (acc + Vmod.at(j, i).get_si() * ((counter[i] * step[i]) % n)) % n;
            k[j] = acc;
        }
        if (std::any_of(k.begin(), k.end(), [](long v) { return v != 0; }))
            canonicals.insert(canonical_class(std::move(k), n).exponents);

        size_t pos = 0;
        while (pos < g2 && ++counter[pos] == choice_count[pos]) counter[pos++] = 0;
        done = pos == g2;
    }
    if (g2 == 0) count = 1;

    MetabelianEnumeration result;
    result.n = n;
    result.solution_count = count;
    for (const auto& k : canonicals) {
        MetabelianClass cls{k, n};
        Representation rho = metabelian_representation(cls, working_modulus);
        result.classes.emplace_back(std::move(cls), std::move(rho));
    }
    return result;
}

Representation adjoint(const Representation& rho) {
    if (rho.dimension != 2) throw std::invalid_argument("adjoint needs a 2-dimensional representation");
    const long m = rho.modulus;

    CycloMatrix basis_E(2, 2, m), basis_H(2, 2, m), basis_F(2, 2, m);
    basis_E.set(0, 1, Cyclo::one(m));
    basis_H.set(0, 0, Cyclo::one(m));
    basis_H.set(1, 1, -Cyclo::one(m));
    basis_F.set(1, 0, Cyclo::one(m));
    const CycloMatrix basis[3] = {basis_E, basis_H, basis_F};

    Representation ad;
    ad.dimension = 3;
    ad.modulus = m;
    ad.label = rho.label.empty() ? "adjoint" : "Ad(" + rho.label + ")";
    for (const CycloMatrix& a : rho.images) {
        if (!(a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0)).is_one())
            throw std::invalid_argument("adjoint needs determinant-1 images");
        CycloMatrix inv = a.inverse();
        CycloMatrix img(3, 3, m);
        for (size_t col = 0; col < 3; ++col) {
            // Coordinates of a trace-free matrix in the {E, H, F} basis are
            // (entry01, entry00, entry10).
            CycloMatrix v = a * basis[col] * inv;
            img.set(0, col, v.at(0, 1));
            img.set(1, col, v.at(0, 0));
            img.set(2, col, v.at(1, 0));
        }
        ad.images.push_back(img);
    }
    return ad;
}

namespace {

bool is_metabelian_normal_form(const Representation& rho) {
    if (rho.dimension != 2 || rho.images.empty()) return false;
    const long m = rho.modulus;
    CycloMatrix mu(2, 2, m);
    mu.set(0, 1, Cyclo::one(m));
    mu.set(1, 0, -Cyclo::one(m));
    if (!(rho.images.back() == mu)) return false;
    for (size_t i = 0; i + 1 < rho.images.size(); ++i) {
        const CycloMatrix& x = rho.images[i];
        if (!x.at(0, 1).is_zero() || !x.at(1, 0).is_zero()) return false;
        if (!(x.at(0, 0) * x.at(1, 1)).is_one()) return false;
    }
    return true;
}

}  // namespace

std::pair<Representation, Representation> psi_decomposition(const Representation& rho) {
    if (!is_metabelian_normal_form(rho))
        throw NotNormalForm("psi decomposition needs the diagonal metabelian normal form");
    const long m = rho.modulus;

    Representation psi1;
    psi1.dimension = 1;
    psi1.modulus = m;
    psi1.label = "psi1(" + rho.label + ")";
    Representation psi2;
    psi2.dimension = 2;
    psi2.modulus = m;
    psi2.label = "psi2(" + rho.label + ")";

    CycloMatrix one1(1, 1, m), minus1(1, 1, m);
    one1.set(0, 0, Cyclo::one(m));
    minus1.set(0, 0, -Cyclo::one(m));
    for (size_t i = 0; i + 1 < rho.images.size(); ++i) {
        psi1.images.push_back(one1);
        const Cyclo& z = rho.images[i].at(0, 0);
        const Cyclo& zi = rho.images[i].at(1, 1);
        CycloMatrix x(2, 2, m);
        x.set(0, 0, z * z);
        x.set(1, 1, zi * zi);
        psi2.images.push_back(x);
    }
    psi1.images.push_back(minus1);
    CycloMatrix mu(2, 2, m);
    mu.set(0, 1, -Cyclo::one(m));
    mu.set(1, 0, -Cyclo::one(m));
    psi2.images.push_back(mu);
    return {psi1, psi2};
}

MetabelianClass associated_class(const MetabelianClass& cls) {
    std::vector<long> doubled = cls.exponents;
    for (auto& v : doubled) v = (2 * v) % cls.n;
    return canonical_class(std::move(doubled), cls.n);
}

Representation associated_rep(const MetabelianClass& cls, long working_modulus) {
    return metabelian_representation(associated_class(cls), working_modulus);
}

Representation twist_by_character(const Representation& rho, const Abelianization& alpha,
                                  const Cyclo& c) {
    if (alpha.size() != rho.images.size())
        throw std::invalid_argument("abelianization does not match representation");
    if (c.modulus() != rho.modulus) throw ModulusMismatch("character value modulus mismatch");
    Representation r = rho;
    r.label = "twist(" + rho.label + ")";
    for (size_t j = 0; j < r.images.size(); ++j)
        r.images[j] = rho.images[j].scaled(c.pow(alpha[j]));
    return r;
}

}  // namespace talex
