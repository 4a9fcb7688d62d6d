#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dedekind {

/// Arbitrary-precision integer. All integer arithmetic in this library is exact.
using Int = mpz_class;

/// a mod m in [0, m), m >= 1 (floor convention, sign of a irrelevant).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// base^exp for exp >= 0.
inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Deterministic primality by trial division. Inputs are capped at 2^31,
/// which covers every prime this library ever has to validate.
inline bool is_prime(const Int& p) {
    if (p < 2) return false;
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 31)
        throw std::invalid_argument("is_prime: input cap is p < 2^31");
    const unsigned long v = p.get_ui();
    if (v < 4) return true;
    if (v % 2 == 0 || v % 3 == 0) return false;
    for (unsigned long d = 5; d * d <= v; d += 6) {
        if (v % d == 0 || v % (d + 2) == 0) return false;
    }
    return true;
}

/// b in [0, m) with a*b == 1 (mod m). Requires m >= 2 and gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: no inverse, gcd(a, m) != 1");
    return inv;
}

/// A residue class: residue in [0, modulus), modulus >= 1.
struct Congruence {
    Int residue;
    Int modulus;

    Congruence(Int res, Int mod) : residue(std::move(res)), modulus(std::move(mod)) {
        if (modulus < 1) throw std::invalid_argument("Congruence: modulus must be >= 1");
        residue = mod_floor(residue, modulus);
    }

    bool contains(const Int& x) const { return mod_floor(x, modulus) == residue; }
    bool operator==(const Congruence&) const = default;
};

/// Chinese remainder combination. Moduli must be pairwise coprime; any shared
/// factor surfaces as an invalid_argument while folding. The empty list yields
/// the trivial class 0 mod 1.
inline Congruence crt(std::span<const Congruence> congruences) {
    Int residue = 0;
    Int modulus = 1;
    for (const Congruence& c : congruences) {
        Int g = gcd(modulus, c.modulus);
        if (g != 1) throw std::invalid_argument("crt: moduli are not pairwise coprime");
        if (c.modulus == 1) continue;
        // x = residue + modulus * t,  t == (c.residue - residue) / modulus  (mod c.modulus)
        Int t = mod_floor((c.residue - residue) * mod_inverse(modulus, c.modulus), c.modulus);
        residue += modulus * t;
        modulus *= c.modulus;
    }
    return Congruence(std::move(residue), std::move(modulus));
}

inline Congruence crt(const std::vector<Congruence>& congruences) {
    return crt(std::span<const Congruence>(congruences));
}

/// q = p^e with p prime, e >= 1.
struct PrimePower {
    Int p;
    unsigned long e;
};

/// Decompose q > 1 as a prime power, or nullopt. Trial division bound: q < 2^31.
inline std::optional<PrimePower> as_prime_power(const Int& q) {
    if (q < 2) return std::nullopt;
    if (mpz_sizeinbase(q.get_mpz_t(), 2) > 31)
        throw std::invalid_argument("as_prime_power: input cap is q < 2^31");
    unsigned long v = q.get_ui();
    unsigned long p = 0;
    if (v % 2 == 0) {
        p = 2;
    } else {
        for (unsigned long d = 3; d * d <= v; d += 2) {
            if (v % d == 0) {
                p = d;
                break;
            }
        }
        if (p == 0) p = v;  // q itself is prime
    }
    unsigned long e = 0;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1) return std::nullopt;
    return PrimePower{Int(p), e};
}

}  // namespace dedekind
