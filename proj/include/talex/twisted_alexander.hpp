#pragma once

#include <optional>
#include <string>

#include "talex/group_ring.hpp"
#include "talex/presentation.hpp"
#include "talex/rational_function.hpp"
#include "talex/representation.hpp"

namespace talex {

// The Z-linear extension of alpha (x) rho: each word w of a group ring
// element contributes coeff * t^{alpha(w)} * rho(w).
PolyMatrix apply_phi(const GroupRingElement& e, const Abelianization& alpha,
                     const Representation& rho);

struct TwistedAlexResult {
    Laurent numerator;    // det of the Fox Jacobian minor (columns != pivot)
    Laurent denominator;  // det Phi_rho(g_l - 1)
    // Exact quotient, unit-normalized unless zero.
    std::optional<Laurent> reduced;
    // Set instead of `reduced` when the invariant is a genuine rational function.
    std::optional<RationalFunction> rational;
    size_t pivot = 0;

    bool is_polynomial() const { return reduced.has_value(); }
    RationalFunction as_rational() const { return {numerator, denominator}; }
};

// Wada's twisted Alexander invariant.  The default distinguished generator is
// the last one with nonzero abelianization image.
TwistedAlexResult wada_invariant(const Presentation& p, const Abelianization& alpha,
                                 const Representation& rho,
                                 std::optional<size_t> pivot = std::nullopt);

// Equality up to +-t^k of the underlying quotients (handles polynomial and
// rational results uniformly by cross-multiplying).
bool same_invariant(const TwistedAlexResult& a, const TwistedAlexResult& b);

// Classical Alexander polynomial: Wada's invariant of the trivial
// 1-dimensional representation times (t - 1), unit-normalized.
Laurent alexander_polynomial(const Presentation& p, const Abelianization& alpha,
                             long modulus = 1);

// |Delta(-1)|; throws NonRationalValue unless the evaluation is a rational
// integer.  Odd for knots; callers warn on even values rather than fail.
mpz_class knot_determinant(const Laurent& alex);

struct FactorizationReport {
    MetabelianClass cls;
    MetabelianClass assoc_cls;
    long working_modulus = 4;
    Laurent alexander;                   // over the working modulus, unit-normalized
    TwistedAlexResult rho_hat;           // invariant of the associated representation
    TwistedAlexResult adjoint_twisted;   // invariant of Ad(rho)
    std::optional<Laurent> extra_factor; // P = Delta^{rho^hat}(i t) / (t^2 - 1)
    bool theorem_holds = false;          // Delta^{Ad rho} = (t-1) Delta_K(-t) P up to units
    bool p_even_symmetric = false;       // P(t) = P(-t) up to units
    bool rho_hat_even = false;           // Delta^{rho^hat} has even-degree terms only
    bool q_vanishes_at_one = false;      // Q = Delta^{Ad rho}(-t-1)/Delta_K(-t), Q(1) = 0
    std::string diagnostic;

    bool all_checks() const {
        return theorem_holds && p_even_symmetric && rho_hat_even && q_vanishes_at_one;
    }
};

// Empirical check of the factorization of the adjoint twisted Alexander
// polynomial for a metabelian class.  A failed check is reported in the
// booleans (with a diagnostic), never thrown.
FactorizationReport verify_factorization(const LinPresentation& lin, const MetabelianClass& cls,
                                         long working_modulus = 0,
                                         std::optional<size_t> pivot = std::nullopt);

}  // namespace talex
