#pragma once

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "dedekind/dedekind_sum.hpp"
#include "dedekind/families.hpp"
#include "dedekind/numtheory.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// A request: make v_p(S(m,n) - a) >= k for some coprime pair (m, n).
/// Any rational a is accepted; which construction applies (or whether the
/// target is obstructed) is derived from v_p(a) at dispatch time.
struct Target {
    Int p;
    Rational a;
    long k;

    Target(Int prime, Rational target, long precision)
        : p(std::move(prime)), a(std::move(target)), k(precision) {
        if (k < 1) throw std::invalid_argument("Target: precision k must be >= 1");
        if (!is_prime(p)) throw std::invalid_argument("Target: p must be prime");
    }
};

/// Which construction produced a witness. The labels are part of the wire
/// format and are kept stable.
enum class Route { large_p, p3, p2_v1, p2_v2, p2_v3, fractional };

inline const char* route_label(Route r) {
    switch (r) {
        case Route::large_p: return "T2-large-p";
        case Route::p3: return "T2-p3";
        case Route::p2_v1: return "T2-p2-v1";
        case Route::p2_v2: return "T2-p2-v2";
        case Route::p2_v3: return "T2-p2-v3";
        case Route::fractional: return "T3-fractional";
    }
    return "?";
}

/// A certified approximation: S(m, n) = s, v_p(s - a) = achieved >= k.
/// s is recomputed from (m, n) at construction, never trusted from a route.
struct Witness {
    Target target;
    Int m;
    Int n;
    Rational s;
    Valuation achieved;
    Route route;
};

/// The 2-adic / 3-adic unit obstruction: for p in {2, 3} no Dedekind sum
/// comes p-adically close to a, so no witness exists. A domain answer,
/// not a failure.
struct NotApproximable {
    Int p;
    Rational a;
};

using ApproxResult = std::variant<Witness, NotApproximable>;

namespace detail {

/// Least x >= 1 in the class; a zero residue is bumped by one period.
inline Int least_positive(const Congruence& c) {
    return c.residue == 0 ? c.modulus : c.residue;
}

/// Every route reduces "v_p(s - a) >= k" to a congruence on m or l by
/// factoring s as unit * (m - unit^-1 a); the unit's own valuation shifts
/// the required modulus exponent. The shifted exponents are computed
/// symbolically per route (k, k-1, k-2, k-3, k+e); this helper evaluates
/// a congruence with such an exponent, where exponent <= 0 means the
/// trivial class (anything mod 1).
inline void push_unit_congruence(std::vector<Congruence>& cs, const Rational& u, const Int& p,
                                 long exponent) {
    if (exponent < 1) return;
    cs.push_back(Congruence(rational_residue(u, p, static_cast<unsigned long>(exponent)),
                            pow_int(p, static_cast<unsigned long>(exponent))));
}

/// Final assembly: validate coprimality, recompute s from (m, n), compare
/// with the route's closed form, and check the achieved valuation. Any
/// mismatch means the congruence algebra above was mis-derived, so it is
/// a logic error rather than a domain condition.
inline Witness make_witness(const Target& t, Int m, Int n, const Rational& closed_form, Route route) {
    DedekindPair pair(m, n);  // throws if gcd(m, n) != 1
    Rational s = dedekind_fast(pair);
    if (s != closed_form) throw std::logic_error("approximator: closed form disagrees with evaluator");
    Valuation achieved = vp(s - t.a, t.p);
    if (achieved < Valuation(t.k)) throw std::logic_error("approximator: achieved valuation below k");
    return Witness{t, std::move(m), std::move(n), std::move(s), achieved, route};
}

}  // namespace detail

/// p >= 5, v_p(a) >= 0. The sums 3m/2 over odd m realize every class:
/// v_p(3m/2 - a) >= k  <=>  m == (2/3) a (mod p^k). Solve that jointly
/// with m odd and take the least positive m; n = 2(m^2 + 1).
inline Witness approx_large_p(const Target& t) {
    std::vector<Congruence> cs;
    detail::push_unit_congruence(cs, t.a * Rational(2, 3), t.p, t.k);
    cs.push_back(Congruence(Int(1), Int(2)));
    Int m = detail::least_positive(crt(cs));
    Int n = 2 * (m * m + 1);
    Rational s_form(3 * m, 2);
    return detail::make_witness(t, std::move(m), std::move(n), s_form, Route::large_p);
}

/// p = 3, v_3(a) >= 1. Same family 3m/2; the factor 3/2 already carries one
/// power of 3, so the congruence drops to m == (2/3) a (mod 3^(k-1)).
inline Witness approx_p3(const Target& t) {
    std::vector<Congruence> cs;
    detail::push_unit_congruence(cs, t.a * Rational(2, 3), t.p, t.k - 1);
    cs.push_back(Congruence(Int(1), Int(2)));
    Int m = detail::least_positive(crt(cs));
    Int n = 2 * (m * m + 1);
    Rational s_form(3 * m, 2);
    return detail::make_witness(t, std::move(m), std::move(n), s_form, Route::p3);
}

/// p = 2, v := v_2(a) >= 1, one sub-route per v.
///
///   v = 1:  s = 2l/3 on n = 3(m^2+1); l odd, l == (3/2) a (mod 2^(k-1)).
///           The branch on l mod 4 picks the m formula and the mod-3 class:
///           l == 1 (mod 4) pairs with l == 2 (mod 3) and m = (l-1)/4,
///           l == 3 (mod 4) pairs with l == 1 (mod 3) and m = (l+1)/4.
///           For k <= 2 the mod-4 class is not forced; the tie-break fixes
///           l == 1 (mod 4).
///   v = 2:  s = 12l/5 on n = 5(m^2+1); l == 3 (mod 5), m = (l-1)/2,
///           l == (5/12) a (mod 2^(k-2)).
///   v >= 3: s = 24m/5 on n = 5(m^2+1); m == 2 (mod 5) (m need not be odd),
///           m == (5/24) a (mod 2^(k-3)).
inline Witness approx_p2(const Target& t) {
    const Valuation v = vp(t.a, t.p);

    if (!v.is_infinite() && v.value() == 1) {
        std::vector<Congruence> cs;
        long branch = 1;
        if (t.k >= 3) {
            Int rho = rational_residue(t.a * Rational(3, 2), t.p, static_cast<unsigned long>(t.k - 1));
            branch = mod_floor(rho, 4).get_si();  // 1 or 3: rho is odd
            cs.push_back(Congruence(std::move(rho), pow_int(t.p, static_cast<unsigned long>(t.k - 1))));
        } else {
            cs.push_back(Congruence(Int(1), Int(4)));
        }
        cs.push_back(branch == 1 ? Congruence(Int(2), Int(3)) : Congruence(Int(1), Int(3)));
        Congruence cls = crt(cs);
        Int l = detail::least_positive(cls);
        Int m = branch == 1 ? Int((l - 1) / 4) : Int((l + 1) / 4);
        while (m < 1) {  // unreachable for these classes; keeps the route total
            l += cls.modulus;
            m = branch == 1 ? Int((l - 1) / 4) : Int((l + 1) / 4);
        }
        Int n = 3 * (m * m + 1);
        Rational s_form(2 * l, 3);
        return detail::make_witness(t, std::move(m), std::move(n), s_form, Route::p2_v1);
    }

    if (!v.is_infinite() && v.value() == 2) {
        std::vector<Congruence> cs;
        detail::push_unit_congruence(cs, t.a * Rational(5, 12), t.p, t.k - 2);
        cs.push_back(Congruence(Int(3), Int(5)));
        Congruence cls = crt(cs);
        Int l = detail::least_positive(cls);
        Int m = (l - 1) / 2;
        while (m < 1) {
            l += cls.modulus;
            m = (l - 1) / 2;
        }
        Int n = 5 * (m * m + 1);
        Rational s_form(12 * l, 5);
        return detail::make_witness(t, std::move(m), std::move(n), s_form, Route::p2_v2);
    }

    // v >= 3, including a = 0.
    std::vector<Congruence> cs;
    detail::push_unit_congruence(cs, t.a * Rational(5, 24), t.p, t.k - 3);
    cs.push_back(Congruence(Int(2), Int(5)));
    Int m = detail::least_positive(crt(cs));
    Int n = 5 * (m * m + 1);
    Rational s_form(24 * m, 5);
    return detail::make_witness(t, std::move(m), std::move(n), s_form, Route::p2_v3);
}

/// v_p(a) = -e < 0, any p. Write a = j/q with q = p^e and j a unit mod p
/// (the p-free part of the denominator is folded into j modulo p^(k+e)).
/// With r* = j mod q and r = (r*)^-1 mod q, the family values l/q with
///   l == j (mod p^(k+e))  and  l == q S(r, q) (mod q^2 - 1)
/// land within p^-k of a; the moduli are coprime since p does not divide
/// q^2 - 1. The pair itself comes out of the l -> (m, n) correspondence.
inline Witness approx_fractional(const Target& t) {
    const Valuation v = vp(t.a, t.p);
    const unsigned long e = static_cast<unsigned long>(-v.value());
    Int q = pow_int(t.p, e);

    Int d;  // p-free part of the denominator
    mpz_divexact(d.get_mpz_t(), t.a.den().get_mpz_t(), q.get_mpz_t());
    Int modulus = pow_int(t.p, static_cast<unsigned long>(t.k) + e);
    Int j = mod_floor(t.a.num(), modulus);
    if (d != 1) j = mod_floor(j * mod_inverse(mod_floor(d, modulus), modulus), modulus);

    Int rstar = mod_floor(j, q);
    Int r = mod_inverse(rstar, q);
    FamilyParams fp = FamilyParams::from_prime_power(t.p, e, r);

    std::vector<Congruence> cs;
    cs.push_back(Congruence(std::move(j), std::move(modulus)));
    cs.push_back(Congruence(fp.q_times_s_rq(), fp.q_squared_minus_1()));
    Int l = detail::least_positive(crt(cs));

    FamilyValue fv = family_from_l(fp, l);
    return detail::make_witness(t, fv.m, fv.n, fv.s, Route::fractional);
}

/// Dispatch on (p, v_p(a)): exactly one route applies, except that a p-adic
/// unit target at p in {2, 3} is obstructed and gets NotApproximable.
inline ApproxResult approximate(const Target& t) {
    const Valuation v = vp(t.a, t.p);
    if (!v.is_infinite() && v.value() < 0) return approx_fractional(t);
    if (t.p == 2 || t.p == 3) {
        if (!v.is_infinite() && v.value() == 0) return NotApproximable{t.p, t.a};
        return t.p == 2 ? approx_p2(t) : approx_p3(t);
    }
    return approx_large_p(t);
}

/// Independent re-check of a witness: coprimality, n >= 1, S(m, n) recomputed
/// from scratch, and the achieved valuation bound.
inline bool verify_witness(const Witness& w) {
    if (w.n < 1 || gcd(w.m, w.n) != 1) return false;
    Rational s = dedekind_fast(DedekindPair(w.m, w.n));
    if (s != w.s) return false;
    return vp(s - w.target.a, w.target.p) >= Valuation(w.target.k);
}

}  // namespace dedekind
