#include <doctest.h>

#include "talex/builtins.hpp"
#include "talex/representation.hpp"
#include "test_util.hpp"

using namespace talex;
using talex::testing::Rng;

namespace {

LinPresentation lin_of(const std::string& name) { return *builtin(name).lin; }

MetabelianEnumeration enumerate_builtin(const std::string& name, long n) {
    return enumerate_metabelian(lin_of(name), n);
}

}  // namespace

TEST_CASE("check_relations on the trefoil normal form") {
    const Presentation p = builtin("trefoil").presentation();
    const Representation rho = metabelian_representation(MetabelianClass{{1, 2}, 3});
    CHECK(check_relations(p, rho));

    // Wrong exponents (z1 = z2 = zeta_3) violate 2 k1 = k2 mod 3.
    const Representation bad = metabelian_representation(MetabelianClass{{1, 1}, 3});
    CHECK_FALSE(check_relations(p, bad));

    Representation trivial;
    trivial.dimension = 2;
    trivial.modulus = 12;
    trivial.images.assign(3, CycloMatrix::identity(2, 12));
    CHECK(check_relations(p, trivial));
}

TEST_CASE("evaluate_word on metabelian images") {
    const Representation rho = metabelian_representation(MetabelianClass{{1, 2}, 3});
    const long m = rho.modulus;

    CHECK(evaluate_word(rho, Word()).is_identity());

    // mu image is trace free.
    CHECK(evaluate_word(rho, Word::generator(2)).trace().is_zero());

    // x1 x2^-1 -> diag(zeta_3^-1, zeta_3) given z1 = zeta_3, z2 = zeta_3^2.
    const Word w = Word::generator(0) * Word::generator(1, -1);
    const CycloMatrix img = evaluate_word(rho, w);
    CHECK(img.at(0, 0) == Cyclo::zeta(3, -1).embedded(m));
    CHECK(img.at(1, 1) == Cyclo::zeta(3).embedded(m));
    CHECK(img.at(0, 1).is_zero());
}

TEST_CASE("trefoil has exactly one metabelian class") {
    const MetabelianEnumeration e = enumerate_builtin("trefoil", 3);
    CHECK(e.solution_count == 3);
    REQUIRE(e.classes.size() == 1);
    CHECK(e.classes[0].first.exponents == std::vector<long>{1, 2});
    const Presentation p = builtin("trefoil").presentation();
    CHECK(check_relations(p, e.classes[0].second));
}

TEST_CASE("figure eight has two metabelian classes") {
    const MetabelianEnumeration e = enumerate_builtin("figure8", 5);
    CHECK(e.solution_count == 5);
    REQUIRE(e.classes.size() == 2);
    CHECK(e.classes[0].first.exponents == std::vector<long>{1, 2});
    CHECK(e.classes[1].first.exponents == std::vector<long>{2, 4});
}

TEST_CASE("5_1 classes follow the power pattern") {
    const MetabelianEnumeration e = enumerate_builtin("5_1", 5);
    CHECK(e.solution_count == 5);
    REQUIRE(e.classes.size() == 2);
    CHECK(e.classes[0].first.exponents == std::vector<long>{1, 2, 3, 4});
    CHECK(e.classes[1].first.exponents == std::vector<long>{2, 4, 1, 3});
    // x_i -> diag((zeta_5^k)^i, (zeta_5^-k)^i)
    const Representation& rho1 = e.classes[0].second;
    const long m = rho1.modulus;
    for (int i = 0; i < 4; ++i)
        CHECK(rho1.images[static_cast<size_t>(i)].at(0, 0) == Cyclo::zeta(5, i + 1).embedded(m));
}

TEST_CASE("5_2 has three classes") {
    const MetabelianEnumeration e = enumerate_builtin("5_2", 7);
    CHECK(e.solution_count == 7);
    REQUIRE(e.classes.size() == 3);
    CHECK(e.classes[0].first.exponents == std::vector<long>{1, 2});
    CHECK(e.classes[1].first.exponents == std::vector<long>{2, 4});
    CHECK(e.classes[2].first.exponents == std::vector<long>{3, 6});
    const Presentation p = builtin("5_2").presentation();
    for (const auto& [cls, rho] : e.classes) CHECK(check_relations(p, rho));
}

TEST_CASE("modulus one yields no irreducible classes") {
    const MetabelianEnumeration e = enumerate_builtin("trefoil", 1);
    CHECK(e.solution_count == 1);
    CHECK(e.classes.empty());
}

TEST_CASE("even modulus is rejected") {
    CHECK_THROWS_AS(enumerate_builtin("trefoil", 4), EvenModulus);
}

TEST_CASE("class count matches (n-1)/2 on the shipped knots") {
    CHECK(enumerate_builtin("trefoil", 3).classes.size() == 1);
    CHECK(enumerate_builtin("figure8", 5).classes.size() == 2);
    CHECK(enumerate_builtin("5_1", 5).classes.size() == 2);
    CHECK(enumerate_builtin("5_2", 7).classes.size() == 3);
}

TEST_CASE("adjoint of diagonal and mu images matches the displayed matrices") {
    const Representation rho = metabelian_representation(MetabelianClass{{1, 2}, 3});
    const long m = rho.modulus;
    const Representation ad = adjoint(rho);

    // diag(z, z^-1) -> diag(z^2, 1, z^-2)
    const Cyclo z = Cyclo::zeta(3).embedded(m);
    const CycloMatrix& adx = ad.images[0];
    CHECK(adx.at(0, 0) == z * z);
    CHECK(adx.at(1, 1) == Cyclo::one(m));
    CHECK(adx.at(2, 2) == (z * z).inverse());
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            if (i != j) CHECK(adx.at(i, j).is_zero());

    // [[0,1],[-1,0]] -> [[0,0,-1],[0,-1,0],[-1,0,0]]
    const CycloMatrix& admu = ad.images[2];
    const Cyclo minus1 = Cyclo::integer(-1, m);
    CHECK(admu.at(0, 2) == minus1);
    CHECK(admu.at(1, 1) == minus1);
    CHECK(admu.at(2, 0) == minus1);
    CHECK(admu.at(0, 0).is_zero());
    CHECK(admu.at(0, 1).is_zero());
    CHECK(admu.at(1, 0).is_zero());
    CHECK(admu.at(1, 2).is_zero());
    CHECK(admu.at(2, 1).is_zero());
    CHECK(admu.at(2, 2).is_zero());
}

TEST_CASE("adjoint of the identity is the identity") {
    Representation rho;
    rho.dimension = 2;
    rho.modulus = 4;
    rho.images.assign(1, CycloMatrix::identity(2, 4));
    CHECK(adjoint(rho).images[0].is_identity());
}

TEST_CASE("adjoint is functorial on words") {
    Rng rng(404);
    const Presentation p = builtin("figure8").presentation();
    const Representation rho = metabelian_representation(MetabelianClass{{1, 2}, 5});
    const Representation ad = adjoint(rho);
    for (int trial = 0; trial < 30; ++trial) {
        const Word w = talex::testing::random_word(rng, 3, 8);
        Representation word_image;
        word_image.dimension = 2;
        word_image.modulus = rho.modulus;
        word_image.images.push_back(evaluate_word(rho, w));
        CHECK(adjoint(word_image).images[0] == evaluate_word(ad, w));
    }
}

TEST_CASE("trace identity tr(Ad) = tr^2 - 1") {
    Rng rng(405);
    for (const auto& name : builtin_names()) {
        const KnotInput k = builtin(name);
        const MetabelianEnumeration e =
            enumerate_metabelian(*k.lin, name == "5_2" ? 7 : (name == "trefoil" ? 3 : 5));
        const auto& [cls, rho] = e.classes.front();
        const Representation ad = adjoint(rho);
        for (int trial = 0; trial < 25; ++trial) {
            const Word w = talex::testing::random_word(rng, 2 * k.lin->genus + 1, 8);
            const Cyclo tr = evaluate_word(rho, w).trace();
            CHECK(evaluate_word(ad, w).trace() == tr * tr - Cyclo::one(rho.modulus));
        }
    }
}

TEST_CASE("psi decomposition reproduces the displayed blocks") {
    const Representation rho = metabelian_representation(MetabelianClass{{1, 2}, 3});
    const long m = rho.modulus;
    const auto [psi1, psi2] = psi_decomposition(rho);

    CHECK(psi1.dimension == 1);
    for (size_t g = 0; g + 1 < psi1.images.size(); ++g)
        CHECK(psi1.images[g].at(0, 0) == Cyclo::one(m));
    CHECK(psi1.images.back().at(0, 0) == Cyclo::integer(-1, m));

    CHECK(psi2.dimension == 2);
    const Cyclo z1 = Cyclo::zeta(3).embedded(m);
    CHECK(psi2.images[0].at(0, 0) == z1 * z1);
    CHECK(psi2.images[0].at(1, 1) == (z1 * z1).inverse());
    const CycloMatrix& mu2 = psi2.images.back();
    CHECK(mu2.at(0, 1) == Cyclo::integer(-1, m));
    CHECK(mu2.at(1, 0) == Cyclo::integer(-1, m));
    CHECK(mu2.at(0, 0).is_zero());
    CHECK(mu2.at(1, 1).is_zero());
}

TEST_CASE("adjoint equals psi2 (+) psi1 after the (E,F,H) reordering") {
    const Representation rho = metabelian_representation(MetabelianClass{{1, 2}, 5});
    const Representation ad = adjoint(rho);
    const auto [psi1, psi2] = psi_decomposition(rho);
    // sigma maps new basis (E, F, H) to old indices (0, 2, 1).
    const size_t sigma[3] = {0, 2, 1};
    for (size_t g = 0; g < ad.images.size(); ++g) {
        CycloMatrix reordered(3, 3, ad.modulus);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) reordered.set(i, j, ad.images[g].at(sigma[i], sigma[j]));
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) CHECK(reordered.at(i, j) == psi2.images[g].at(i, j));
        CHECK(reordered.at(2, 2) == psi1.images[g].at(0, 0));
        CHECK(reordered.at(0, 2).is_zero());
        CHECK(reordered.at(1, 2).is_zero());
        CHECK(reordered.at(2, 0).is_zero());
        CHECK(reordered.at(2, 1).is_zero());
    }
}

TEST_CASE("psi decomposition rejects non-normal forms") {
    Representation rho;
    rho.dimension = 2;
    rho.modulus = 12;
    rho.images.assign(2, CycloMatrix::identity(2, 12));  // mu image is not [[0,1],[-1,0]]
    CHECK_THROWS_AS(psi_decomposition(rho), NotNormalForm);
}

TEST_CASE("associated classes double the exponents") {
    CHECK(associated_class(MetabelianClass{{1, 2}, 5}).exponents == std::vector<long>{2, 4});
    CHECK(associated_class(MetabelianClass{{1, 2}, 3}).exponents == std::vector<long>{1, 2});
    CHECK(associated_class(MetabelianClass{{3, 6}, 7}).exponents == std::vector<long>{1, 2});
    CHECK(associated_class(MetabelianClass{{2, 4}, 7}).exponents == std::vector<long>{3, 6});
}

TEST_CASE("associated classes cycle through the enumeration") {
    const MetabelianEnumeration e = enumerate_builtin("5_2", 7);
    MetabelianClass c = e.classes[0].first;
    std::vector<std::vector<long>> seen;
    for (int step = 0; step < 3; ++step) {
        c = associated_class(c);
        seen.push_back(c.exponents);
    }
    CHECK(seen[0] == e.classes[1].first.exponents);  // rho_1 -> rho_2
    CHECK(seen[1] == e.classes[2].first.exponents);  // rho_2 -> rho_3
    CHECK(seen[2] == e.classes[0].first.exponents);  // rho_3 -> rho_1
}

TEST_CASE("twist by character") {
    const Presentation p = builtin("trefoil").presentation();
    const Abelianization alpha = abelianization(p);
    const Representation rho = metabelian_representation(MetabelianClass{{1, 2}, 3});
    const long m = rho.modulus;

    const Representation same = twist_by_character(rho, alpha, Cyclo::one(m));
    for (size_t g = 0; g < rho.images.size(); ++g) CHECK(same.images[g] == rho.images[g]);

    const Representation flipped = twist_by_character(rho, alpha, Cyclo::integer(-1, m));
    CHECK(flipped.images[0] == rho.images[0]);
    CHECK(flipped.images[1] == rho.images[1]);
    CHECK(flipped.images[2] == rho.images[2].scaled(Cyclo::integer(-1, m)));
    CHECK(check_relations(p, flipped));

    // Twisting twice by c composes to twisting by c^2.
    const Cyclo i = Cyclo::sqrt_minus_one(m);
    const Representation twice = twist_by_character(twist_by_character(rho, alpha, i), alpha, i);
    const Representation sq = twist_by_character(rho, alpha, i * i);
    for (size_t g = 0; g < rho.images.size(); ++g) CHECK(twice.images[g] == sq.images[g]);
}

TEST_CASE("enumerated representations are irreducible in the diagonal sense") {
    for (const auto& name : builtin_names()) {
        const KnotInput k = builtin(name);
        const long n = name == "5_2" ? 7 : (name == "trefoil" ? 3 : 5);
        for (const auto& [cls, rho] : enumerate_metabelian(*k.lin, n).classes) {
            bool some_noncentral = false;
            for (size_t g = 0; g + 1 < rho.images.size(); ++g)
                if (!rho.images[g].at(0, 0).is_one()) some_noncentral = true;
            CHECK(some_noncentral);
        }
    }
}
