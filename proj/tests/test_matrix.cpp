#include <doctest.h>

#include "talex/matrix.hpp"
#include "test_util.hpp"

using namespace talex;
using talex::testing::Rng;

namespace {

// Independent oracle: cofactor expansion along the first row.
Laurent cofactor_det(const PolyMatrix& m) {
    const size_t n = m.rows();
    if (n == 0) return Laurent::one(m.modulus());
    if (n == 1) return m.at(0, 0);
    Laurent acc = Laurent::zero(m.modulus());
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, m.modulus());
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.set(r - 1, cc++, m.at(r, c));
            }
        }
        Laurent term = m.at(0, j) * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TEST_CASE("poly determinant basics") {
    CHECK(PolyMatrix::identity(3, 1).determinant() == Laurent::one(1));
    CHECK(PolyMatrix(0, 0, 1).determinant() == Laurent::one(1));

    // det(t R - I) for R = [[0,1],[-1,0]] is t^2 + 1.
    const long m = 4;
    PolyMatrix a(2, 2, m);
    a.set(0, 0, -Laurent::one(m));
    a.set(0, 1, Laurent::variable(m));
    a.set(1, 0, -Laurent::variable(m));
    a.set(1, 1, -Laurent::one(m));
    Laurent expected = Laurent::variable(m) * Laurent::variable(m) + Laurent::one(m);
    CHECK(a.determinant() == expected);
}

TEST_CASE("repeated row kills the determinant") {
    Rng rng(11);
    PolyMatrix a(3, 3, 5);
    for (size_t j = 0; j < 3; ++j) {
        Laurent v = talex::testing::random_laurent(rng, 5);
        a.set(0, j, v);
        a.set(2, j, v);
        a.set(1, j, talex::testing::random_laurent(rng, 5));
    }
    CHECK(a.determinant().is_zero());
}

TEST_CASE("determinant is alternating in rows") {
    Rng rng(13);
    PolyMatrix a(3, 3, 5);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) a.set(i, j, talex::testing::random_laurent(rng, 5, 2, 2));
    PolyMatrix b = a;
    for (size_t j = 0; j < 3; ++j) {
        Laurent tmp = b.at(0, j);
        b.set(0, j, b.at(1, j));
        b.set(1, j, tmp);
    }
    CHECK(a.determinant() == -b.determinant());
}

TEST_CASE("Bareiss agrees with the cofactor oracle on random matrices") {
    Rng rng(2024);
    int nontrivial = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<size_t> dim(1, 4);
        const size_t n = dim(rng);
        PolyMatrix a(n, n, 5);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a.set(i, j, talex::testing::random_laurent(rng, 5, 2, 2));
        Laurent d = a.determinant();
        CHECK(d == cofactor_det(a));
        if (!d.is_zero()) ++nontrivial;
    }
    CHECK(nontrivial > 100);  // the sample is not degenerate
}

TEST_CASE("block-triangular determinants multiply") {
    Rng rng(15);
    const long m = 5;
    PolyMatrix a(2, 2, m), d(2, 2, m);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            a.set(i, j, talex::testing::random_laurent(rng, m, 2, 2));
            d.set(i, j, talex::testing::random_laurent(rng, m, 2, 2));
        }
    PolyMatrix block(4, 4, m);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            block.set(i, j, a.at(i, j));
            block.set(i + 2, j + 2, d.at(i, j));
            block.set(i, j + 2, talex::testing::random_laurent(rng, m, 2, 2));
        }
    CHECK(block.determinant() == a.determinant() * d.determinant());
}

TEST_CASE("cyclo matrix inverse and determinant") {
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        CycloMatrix c = talex::testing::random_invertible_matrix(rng, 3, 12);
        CHECK((c * c.inverse()).is_identity());
        CHECK((c.inverse() * c).is_identity());
    }
    CycloMatrix singular(2, 2, 1);
    singular.set(0, 0, Cyclo::one(1));
    singular.set(1, 0, Cyclo::one(1));
    CHECK(singular.determinant().is_zero());
    CHECK_THROWS_AS(singular.inverse(), SingularMatrix);
}

TEST_CASE("cyclo determinant is multiplicative") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        CycloMatrix a = talex::testing::random_invertible_matrix(rng, 2, 12);
        CycloMatrix b = talex::testing::random_invertible_matrix(rng, 2, 12);
        CHECK((a * b).determinant() == a.determinant() * b.determinant());
    }
}

TEST_CASE("non-square determinant is rejected") {
    CHECK_THROWS_AS(PolyMatrix(2, 3, 1).determinant(), std::invalid_argument);
    CHECK_THROWS_AS(CycloMatrix(2, 3, 1).determinant(), std::invalid_argument);
}
