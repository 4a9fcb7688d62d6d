#pragma once

#include <stdexcept>

#include "dedekind/dedekind_sum.hpp"
#include "dedekind/numtheory.hpp"

namespace dedekind {

/// The five congruence cases for n*S(m,n). Exactly one of the first three
/// (split on n mod 4) and exactly one of the last two (split on n mod 3)
/// applies to any pair.
enum class CongruenceCase {
    odd_n,         // n odd:          nS == 0 (mod 2)
    n_2_mod_4,     // n == 2 (mod 4): nS == 0 (mod 4)
    n_0_mod_4,     // n == 0 (mod 4): nS == 2 (mod 4)
    n_coprime_3,   // 3 does not divide n: nS == 0 (mod 3)
    n_divisible_3  // 3 divides n:    nS != 0 (mod 3)
};

inline const char* congruence_case_label(CongruenceCase c) {
    switch (c) {
        case CongruenceCase::odd_n: return "L1a";
        case CongruenceCase::n_2_mod_4: return "L1b";
        case CongruenceCase::n_0_mod_4: return "L1c";
        case CongruenceCase::n_coprime_3: return "L1d";
        case CongruenceCase::n_divisible_3: return "L1e";
    }
    return "?";
}

/// One residue constraint on nS. must_equal distinguishes "nS must lie in
/// this class" from the negative constraint "nS must avoid this class"
/// (only the n_divisible_3 case is negative).
struct ResidueConstraint {
    CongruenceCase tag;
    long modulus;
    long residue;
    bool must_equal;

    bool satisfied_by(const Int& ns) const {
        bool in_class = mod_floor(ns, Int(modulus)) == residue;
        return must_equal ? in_class : !in_class;
    }
};

struct CongruencePrediction {
    ResidueConstraint two_adic;    // from the n mod 4 split
    ResidueConstraint three_adic;  // from the n mod 3 split
};

inline CongruencePrediction predict_congruences(const DedekindPair& pair) {
    const Int& n = pair.n();
    ResidueConstraint two{};
    if (mpz_odd_p(n.get_mpz_t())) {
        two = {CongruenceCase::odd_n, 2, 0, true};
    } else if (mod_floor(n, 4) == 2) {
        two = {CongruenceCase::n_2_mod_4, 4, 0, true};
    } else {
        two = {CongruenceCase::n_0_mod_4, 4, 2, true};
    }
    ResidueConstraint three{};
    if (mod_floor(n, 3) != 0) {
        three = {CongruenceCase::n_coprime_3, 3, 0, true};
    } else {
        three = {CongruenceCase::n_divisible_3, 3, 0, false};
    }
    return {two, three};
}

/// Observed vs. predicted residue class of n*S(m,n). The predictions are
/// theorems, so holds == false flags a bug, not a domain case.
struct CongruenceReport {
    DedekindPair pair;
    Int ns;
    CongruencePrediction predicted;
    bool holds;
};

inline CongruenceReport check_congruences(const DedekindPair& pair) {
    Int ns = n_times_s(pair);
    CongruencePrediction predicted = predict_congruences(pair);
    bool holds = predicted.two_adic.satisfied_by(ns) && predicted.three_adic.satisfied_by(ns);
    return {pair, std::move(ns), predicted, holds};
}

/// The identity q*S(r,q) == r + r* (mod q) for q = p^e > 1, r r* == 1 (mod q).
/// Must hold for every admissible r; returns the verdict for one instance.
inline bool qs_residue_identity(const Int& r, const Int& q) {
    if (!as_prime_power(q)) throw std::invalid_argument("qs_residue_identity: q must be a prime power > 1");
    if (gcd(r, q) != 1) throw std::invalid_argument("qs_residue_identity: r must be coprime to q");
    Int rr = mod_floor(r, q);
    Int qs = n_times_s(DedekindPair(rr, q));
    Int rstar = mod_inverse(rr, q);
    return mod_floor(qs - rr - rstar, q) == 0;
}

}  // namespace dedekind
