#pragma once

#include <stdexcept>
#include <utility>

#include "dedekind/dedekind_sum.hpp"
#include "dedekind/numtheory.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// Parameters of the structured family n = q(m^2 + 1): a prime power q = p^e
/// and a unit residue r mod q, with r* its inverse. q*S(r, q) appears in every
/// forward/inverse evaluation, so it is computed once and cached here.
class FamilyParams {
public:
    /// Factors q by trial division (q < 2^31).
    FamilyParams(const Int& q, const Int& r) : FamilyParams(make(q, r)) {}

    /// Builds q = p^e without factoring, so q may be arbitrarily large.
    static FamilyParams from_prime_power(const Int& p, unsigned long e, const Int& r) {
        if (!is_prime(p)) throw std::invalid_argument("FamilyParams: p must be prime");
        if (e < 1) throw std::invalid_argument("FamilyParams: exponent must be >= 1");
        return FamilyParams(pow_int(p, e), p, e, r);
    }

    const Int& q() const { return q_; }
    const Int& base_prime() const { return p_; }
    unsigned long exponent() const { return e_; }
    const Int& r() const { return r_; }
    const Int& rstar() const { return rstar_; }
    const Int& q_times_s_rq() const { return q_s_rq_; }
    const Int& q_squared_minus_1() const { return qsq1_; }

private:
    FamilyParams(Int q, Int p, unsigned long e, const Int& r)
        : q_(std::move(q)), p_(std::move(p)), e_(e), r_(r) {
        if (q_ < 2) throw std::invalid_argument("FamilyParams: q must be > 1");
        if (r_ < 1 || r_ >= q_) throw std::invalid_argument("FamilyParams: r must satisfy 1 <= r <= q-1");
        if (gcd(r_, p_) != 1) throw std::invalid_argument("FamilyParams: r must be coprime to the base prime");
        rstar_ = mod_inverse(r_, q_);
        q_s_rq_ = n_times_s(DedekindPair(r_, q_));
        qsq1_ = q_ * q_ - 1;
    }

    static FamilyParams make(const Int& q, const Int& r) {
        auto pp = as_prime_power(q);
        if (!pp) throw std::invalid_argument("FamilyParams: q must be a prime power > 1");
        return FamilyParams(q, pp->p, pp->e, r);
    }

    Int q_;
    Int p_;
    unsigned long e_;
    Int r_;
    Int rstar_;
    Int q_s_rq_;
    Int qsq1_;
};

/// One certified member of the family: n = q(m^2 + 1), S(m, n) = l/q, with
/// l == r* (mod q) and l == q*S(r,q) (mod q^2 - 1). Built only by the two
/// factories below, which re-derive S(m, n) with the evaluator and fail
/// loudly on any mismatch.
struct FamilyValue {
    Int m;
    Int n;
    Int l;
    Rational s;  // = l/q
};

namespace detail {

inline FamilyValue certify_family_value(const FamilyParams& fp, Int m) {
    Int n = fp.q() * (m * m + 1);
    Rational s = dedekind_fast(DedekindPair(m, n));
    Rational ql = Rational(fp.q()) * s;
    if (!ql.is_integer()) throw std::logic_error("family: q*S(m,n) is not integral");
    Int l = ql.num();
    // Double-entry check against the expansion l = (q^2 - 1) m + q S(r, q).
    if (l != fp.q_squared_minus_1() * m + fp.q_times_s_rq())
        throw std::logic_error("family: evaluator disagrees with the closed form");
    if (mod_floor(l, fp.q()) != fp.rstar())
        throw std::logic_error("family: l is not r* mod q");
    if (mod_floor(l - fp.q_times_s_rq(), fp.q_squared_minus_1()) != 0)
        throw std::logic_error("family: l is not q*S(r,q) mod q^2-1");
    return FamilyValue{std::move(m), std::move(n), std::move(l), std::move(s)};
}

}  // namespace detail

/// m -> (m, n, l, S): the member at m == r (mod q), m >= 1.
inline FamilyValue family_from_m(const FamilyParams& fp, const Int& m) {
    if (m < 1) throw std::invalid_argument("family_from_m: m must be >= 1");
    if (mod_floor(m, fp.q()) != fp.r())
        throw std::invalid_argument("family_from_m: m must be congruent to r mod q");
    return detail::certify_family_value(fp, m);
}

/// l -> (m, n, l, S): m = (l - q*S(r,q)) / (q^2 - 1). Requires l >= 1 with
/// l == r* (mod q) and l == q*S(r,q) (mod q^2 - 1); such an l always yields
/// m >= 1 and m == r (mod q).
inline FamilyValue family_from_l(const FamilyParams& fp, const Int& l) {
    if (l < 1) throw std::invalid_argument("family_from_l: l must be >= 1");
    if (mod_floor(l, fp.q()) != fp.rstar())
        throw std::invalid_argument("family_from_l: l must be r* mod q");
    Int shifted = l - fp.q_times_s_rq();
    if (mod_floor(shifted, fp.q_squared_minus_1()) != 0)
        throw std::invalid_argument("family_from_l: l must be q*S(r,q) mod q^2-1");
    Int m;
    mpz_divexact(m.get_mpz_t(), shifted.get_mpz_t(), fp.q_squared_minus_1().get_mpz_t());
    if (m < 1) throw std::logic_error("family_from_l: derived m is not positive");
    if (mod_floor(m, fp.q()) != fp.r()) throw std::logic_error("family_from_l: derived m is not r mod q");
    FamilyValue value = detail::certify_family_value(fp, std::move(m));
    if (value.l != l) throw std::logic_error("family_from_l: round trip does not restore l");
    return value;
}

struct FamilyEval {
    Int n;
    Rational s;
};

/// S(m, q(m^2+1)) = ((q^2 - 1)/q) m + S(m, q) for any prime power q > 1 and
/// m >= 1 coprime to the base prime. Evaluates the right-hand side; it must
/// match the generic evaluator at (m, n), which the test suite checks.
inline FamilyEval evaluate_family(const Int& q, const Int& m) {
    auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("evaluate_family: q must be a prime power > 1");
    if (m < 1) throw std::invalid_argument("evaluate_family: m must be >= 1");
    if (gcd(m, pp->p) != 1)
        throw std::invalid_argument("evaluate_family: m must be coprime to the base prime");
    Int n = q * (m * m + 1);
    Rational s = Rational((q * q - 1) * m, q) + dedekind_fast(DedekindPair(m, q));
    return FamilyEval{std::move(n), std::move(s)};
}

/// The explicit case-split closed forms on n = q(m^2 + 1) for q in {2, 3, 5}:
///   q = 2: 3m/2
///   q = 3: (2/3)(4m + 1) or (2/3)(4m - 1)   as m == 1, 2 (mod 3)
///   q = 5: (12/5)(2m + 1), (12/5)(2m - 1), 24m/5   as m == 1, 4, {2,3} (mod 5)
inline Rational small_q_closed_form(const Int& q, const Int& m) {
    if (m < 1) throw std::invalid_argument("small_q_closed_form: m must be >= 1");
    if (gcd(m, q) != 1) throw std::invalid_argument("small_q_closed_form: m must be coprime to q");
    if (q == 2) return Rational(3 * m, 2);
    if (q == 3) {
        return mod_floor(m, 3) == 1 ? Rational(2 * (4 * m + 1), 3) : Rational(2 * (4 * m - 1), 3);
    }
    if (q == 5) {
        Int c = mod_floor(m, 5);
        if (c == 1) return Rational(12 * (2 * m + 1), 5);
        if (c == 4) return Rational(12 * (2 * m - 1), 5);
        return Rational(24 * m, 5);
    }
    throw std::invalid_argument("small_q_closed_form: q must be 2, 3 or 5");
}

}  // namespace dedekind
