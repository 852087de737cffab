#include "rhls/indices.hpp"

#include <cmath>
#include <type_traits>

namespace rhls::indices {

namespace {

template <class S>
S one() {
    return S(1);
}

}  // namespace

template <class S>
ExponentSetT<S> derive_exponents(int n, S alpha, S beta, S p) {
    if (n < 2) throw NotAdmissible("dimension lower bound");
    const S sn(n), snm1(n - 1);

    if (!(alpha > sn)) throw NotAdmissible("alpha lower bound");
    if (!(beta >= S(0))) throw NotAdmissible("beta lower bound");
    if (!(beta < (alpha - sn) / snm1)) throw NotAdmissible("beta upper bound");
    // alpha - 1 - (n-1)beta > n - 1 > 0 here, so the lower bound is well defined.
    const S p_low = snm1 / (alpha - one<S>() - snm1 * beta);
    if (!(p > p_low)) throw NotAdmissible("p lower bound");
    if (!(p < one<S>())) throw NotAdmissible("p upper bound");

    ExponentSetT<S> es;
    es.n = n;
    es.alpha = alpha;
    es.beta = beta;
    es.p = p;
    es.p_prime = p / (p - one<S>());
    // critical relation: ((n-1)/n)(1/p) + 1/q' - (alpha+beta-1)/n = 1
    const S inv_qp = one<S>() + (alpha + beta - one<S>()) / sn - (snm1 / sn) / p;
    es.q_prime = one<S>() / inv_qp;
    es.q = es.q_prime / (es.q_prime - one<S>());
    es.theta = one<S>() / (one<S>() - p);
    es.k = one<S>() - es.q;
    if (!(beta * es.q + one<S>() > S(0))) throw NotAdmissible("beta q plus one");
    return es;
}

template <class S>
ExponentSetT<S> conformal_indices(int n, S alpha, S beta) {
    if (n < 2) throw NotAdmissible("dimension lower bound");
    const S sn(n), snm1(n - 1);
    if (!(alpha > sn)) throw NotAdmissible("alpha lower bound");
    if (!(beta >= S(0))) throw NotAdmissible("beta lower bound");
    if (!(beta < (alpha - sn) / (S(2) * snm1))) throw NotAdmissible("beta upper bound");

    const S p = S(2) * snm1 / (sn + alpha - S(2));
    ExponentSetT<S> es = derive_exponents<S>(n, alpha, beta, p);
    // cross-check the closed forms against the derived tuple
    const S q_cf = S(2) * sn / (sn - alpha - S(2) * beta);
    const S theta_cf = (sn + alpha - S(2)) / (alpha - sn);
    const S k_cf = (sn + alpha + S(2) * beta) / (alpha + S(2) * beta - sn);
    if constexpr (std::is_same_v<S, Rat>) {
        if (es.q != q_cf || es.theta != theta_cf || es.k != k_cf)
            throw Error("conformal closed forms disagree with derivation");
    } else {
        if (std::abs(es.q - q_cf) > 1e-10 * std::abs(q_cf) ||
            std::abs(es.theta - theta_cf) > 1e-10 * std::abs(theta_cf) ||
            std::abs(es.k - k_cf) > 1e-10 * std::abs(k_cf))
            throw Error("conformal closed forms disagree with derivation");
        es.q = q_cf;
        es.theta = theta_cf;
        es.k = k_cf;
        es.q_prime = q_cf / (q_cf - 1.0);
    }
    return es;
}

template <class S>
S pohozaev_relation(S theta, S k, int n, S alpha, S beta) {
    if (theta == one<S>() || k == one<S>())
        throw DegenerateExponent("pohozaev relation needs theta != 1 and k != 1");
    const S sn(n), snm1(n - 1);
    return snm1 / (theta - one<S>()) + sn / (k - one<S>()) - (alpha + beta - sn);
}

RelationResiduals relation_residuals(const ExponentSet& es) {
    const double n = es.n, nm1 = es.n - 1;
    RelationResiduals r;
    r.critical = std::abs((nm1 / n) / es.p + 1.0 / es.q_prime - (es.alpha + es.beta - 1.0) / n - 1.0);
    r.critical_alt = std::abs(1.0 / es.q - (nm1 / n) * (1.0 / es.p - (es.alpha + es.beta - 1.0) / nm1));
    r.conjugacy_q = std::abs(1.0 / es.q + 1.0 / es.q_prime - 1.0);
    r.conjugacy_p = std::abs(1.0 / es.p + 1.0 / es.p_prime - 1.0);
    r.theta_k = std::abs(1.0 / (es.k - 1.0) -
                         (nm1 / n) * ((es.alpha + es.beta - n) / nm1 - 1.0 / (es.theta - 1.0)));
    return r;
}

ExponentSet to_double(const ExactExponentSet& es) {
    ExponentSet d;
    d.n = es.n;
    d.alpha = es.alpha.value();
    d.beta = es.beta.value();
    d.p = es.p.value();
    d.p_prime = es.p_prime.value();
    d.q = es.q.value();
    d.q_prime = es.q_prime.value();
    d.theta = es.theta.value();
    d.k = es.k.value();
    return d;
}

template ExponentSetT<double> derive_exponents<double>(int, double, double, double);
template ExponentSetT<Rat> derive_exponents<Rat>(int, Rat, Rat, Rat);
template ExponentSetT<double> conformal_indices<double>(int, double, double);
template ExponentSetT<Rat> conformal_indices<Rat>(int, Rat, Rat);
template double pohozaev_relation<double>(double, double, int, double, double);
template Rat pohozaev_relation<Rat>(Rat, Rat, int, Rat, Rat);

}  // namespace rhls::indices
