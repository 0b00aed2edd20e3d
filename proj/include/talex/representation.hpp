#pragma once

#include <string>
#include <utility>
#include <vector>

#include "talex/matrix.hpp"
#include "talex/presentation.hpp"

namespace talex {

// A map from presentation generators to square matrices over Q(zeta_m),
// stored in the presentation's generator order.
struct Representation {
    int dimension = 0;
    long modulus = 1;
    std::vector<CycloMatrix> images;
    std::string label;
};

// Product of generator images along the word; the empty word gives the
// identity.  Also realizes the trace functions I_gamma = tr rho(gamma).
CycloMatrix evaluate_word(const Representation& rho, const Word& w);

// True iff every relator maps to the identity matrix.
bool check_relations(const Presentation& p, const Representation& rho);

// A conjugacy class of irreducible metabelian SL(2,C) representations,
// encoded by the exponent vector k with z_i = zeta_n^{k_i}.  The canonical
// representative is the lexicographically smaller of {k, -k mod n}.
struct MetabelianClass {
    std::vector<long> exponents;
    long n = 1;

    std::string label() const;
    bool operator==(const MetabelianClass& rhs) const = default;
};

MetabelianClass canonical_class(std::vector<long> k, long n);

// lcm(4, n): the smallest cyclotomic field holding both zeta_n and sqrt(-1).
long default_working_modulus(long n);

// x_i -> diag(zeta_n^{k_i}, zeta_n^{-k_i}), mu -> [[0,1],[-1,0]] over
// Q(zeta_m).  working_modulus = 0 picks lcm(4, n); a modulus lacking the
// required roots of unity is rejected.
Representation metabelian_representation(const MetabelianClass& cls, long working_modulus = 0);

struct MetabelianEnumeration {
    long n = 1;
    // Size of the full solution set of the exponent system mod n (including
    // the zero vector, before quotienting by negation).
    long solution_count = 0;
    std::vector<std::pair<MetabelianClass, Representation>> classes;
};

// Solves sum_j (e_j(a_i^+) + e_j(a_i^-)) k_j = 0 (mod n) by Smith normal
// form, discards k = 0, folds k with -k, and returns one canonical class per
// orbit in lexicographic order.  Throws EvenModulus for even n.
MetabelianEnumeration enumerate_metabelian(const LinPresentation& lin, long n,
                                           long working_modulus = 0);

// Conjugation action on sl_2 in the basis {E, H, F}; input images must have
// determinant 1.
Representation adjoint(const Representation& rho);

// Splits Ad(rho) of a normal-form metabelian representation into the
// 1-dimensional psi_1 (x_i -> 1, mu -> -1) and the 2-dimensional psi_2
// (x_i -> diag(z_i^2, z_i^-2), mu -> [[0,-1],[-1,0]]).  The last generator
// is taken to be mu.  Throws NotNormalForm otherwise.
std::pair<Representation, Representation> psi_decomposition(const Representation& rho);

// Exponent doubling: the class of the associated representation rho^hat.
MetabelianClass associated_class(const MetabelianClass& cls);
Representation associated_rep(const MetabelianClass& cls, long working_modulus = 0);

// g -> c^{alpha(g)} rho(g) for a root of unity c in the working field.
Representation twist_by_character(const Representation& rho, const Abelianization& alpha,
                                  const Cyclo& c);

}  // namespace talex
