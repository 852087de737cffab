#pragma once

#include <string>

#include "rhls/errors.hpp"
#include "rhls/rational.hpp"

namespace rhls::indices {

// Full exponent tuple of the reversed inequality
//
//   int_{R^n_+} int_{dR^n_+} x_n^beta |x-y|^{alpha-n} f(y) g(x) dy dx
//       >= C ||f||_{L^p(dR^n_+)} ||g||_{L^{q'}(R^n_+)}
//
// with alpha > n, 0 <= beta < (alpha-n)/(n-1), p in ((n-1)/(alpha-1-(n-1)beta), 1),
// and the critical relation ((n-1)/n)(1/p) + 1/q' - (alpha+beta-1)/n = 1.
// theta = 1/(1-p) and k = 1-q are the dual exponents of the integral system.
//
// Instantiated for double and for exact rationals (Rat); with Rat inputs all
// relation residuals are exactly zero.
template <class S>
struct ExponentSetT {
    int n = 2;
    S alpha{};
    S beta{};
    S p{};
    S p_prime{};
    S q{};
    S q_prime{};
    S theta{};
    S k{};
};

using ExponentSet = ExponentSetT<double>;
using ExactExponentSet = ExponentSetT<Rat>;

// Derives the full tuple from (n, alpha, beta, p) or throws NotAdmissible
// naming the first violated condition, checked in the order
//   "alpha lower bound", "beta lower bound", "beta upper bound",
//   "p lower bound", "p upper bound", "beta q plus one".
template <class S>
ExponentSetT<S> derive_exponents(int n, S alpha, S beta, S p);

// The conformally invariant tuple: p = 2(n-1)/(n+alpha-2), q = 2n/(n-alpha-2beta),
// theta = (n+alpha-2)/(alpha-n), k = (n+alpha+2beta)/(alpha+2beta-n).
// Requires 0 <= beta < (alpha-n)/(2(n-1)); the result passes derive_exponents.
template <class S>
ExponentSetT<S> conformal_indices(int n, S alpha, S beta);

// Residual of (n-1)/(theta-1) + n/(k-1) - (alpha+beta-n); zero iff the
// necessary condition for positive solutions of the integral system holds.
template <class S>
S pohozaev_relation(S theta, S k, int n, S alpha, S beta);

// Residuals of the two equivalent statements of the critical relation,
// |(n-1)/(n p) + 1/q' - (alpha+beta-1)/n - 1| and
// |1/q - ((n-1)/n)(1/p - (alpha+beta-1)/(n-1))|.
struct RelationResiduals {
    double critical = 0;
    double critical_alt = 0;
    double conjugacy_q = 0;
    double conjugacy_p = 0;
    double theta_k = 0;
};
RelationResiduals relation_residuals(const ExponentSet& es);

ExponentSet to_double(const ExactExponentSet& es);

}  // namespace rhls::indices
