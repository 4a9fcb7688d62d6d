#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "dedekind/numtheory.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// A coprime pair (m, n), n >= 1, canonicalized to 0 <= m < n. Since
/// S(m + n, n) = S(m, n), the reduction loses nothing; both evaluators
/// therefore accept any coprime integer m through this single entry point.
class DedekindPair {
public:
    DedekindPair(Int m, Int n) {
        if (n < 1) throw std::invalid_argument("DedekindPair: n must be >= 1");
        if (gcd(m, n) != 1) throw std::invalid_argument("m and n must be coprime");
        m_ = mod_floor(m, n);
        n_ = std::move(n);
    }

    const Int& m() const { return m_; }
    const Int& n() const { return n_; }

    bool operator==(const DedekindPair&) const = default;

private:
    Int m_;
    Int n_;
};

/// Sawtooth ((t)): t - floor(t) - 1/2 off the integers, 0 on them.
/// Values lie in the open interval (-1/2, 1/2).
inline Rational sawtooth(const Rational& t) {
    if (t.is_integer()) return Rational(0);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.num().get_mpz_t(), t.den().get_mpz_t());
    return t - Rational(std::move(fl)) - Rational(1, 2);
}

/// Cap for the O(n) defining-sum evaluator below.
inline constexpr long kNaiveCap = 100000;

/// S(m, n) = 12 * sum_{k=1..n} ((k/n)) ((mk/n)), summed term by term.
/// This is the ground-truth oracle; n is capped to keep it tractable.
inline Rational dedekind_naive(const DedekindPair& pair) {
    if (pair.n() > kNaiveCap)
        throw std::invalid_argument("dedekind_naive: n exceeds the oracle cap");
    const Int& n = pair.n();
    const Int& m = pair.m();
    Rational sum(0);
    for (Int k = 1; k <= n; ++k)
        sum += sawtooth(Rational(k, n)) * sawtooth(Rational(m * k, n));
    return Rational(12) * sum;
}

/// S(m, n) in O(#Euclid steps) exact operations, via the reciprocity law
///
///   S(m, n) = -S(n, m) + n/m + m/n + 1/(nm) - 3
///
/// applied as the descent (m, n) -> (n mod m, m), with base cases
/// S(0, 1) = 0 and S(1, n) = n - 3 + 2/n. The unwind keeps every partial
/// value equal to an actual Dedekind sum, so denominators stay bounded by
/// the current n instead of accumulating.
inline Rational dedekind_fast(const DedekindPair& pair) {
    if (pair.m() == 0) return Rational(0);

    std::vector<std::pair<Int, Int>> chain;  // (m_i, n_i) with m_i >= 2
    Int m = pair.m();
    Int n = pair.n();
    while (m > 1) {
        chain.emplace_back(m, n);
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
        n = std::move(m);
        m = std::move(r);
    }

    // m == 1 here: S(1, n) = n - 3 + 2/n = (n^2 - 3n + 2)/n.
    Rational s(n * n - 3 * n + 2, n);

    // S(m_i, n_i) = [(m_i^2 + n_i^2 + 1 - 3 m_i n_i) - S_prev * m_i n_i] / (m_i n_i),
    // where den(S_prev) divides m_i because n * S(m, n) is an integer.
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const Int& mi = it->first;
        const Int& ni = it->second;
        Int mn = mi * ni;
        Int num = mi * mi + ni * ni + 1 - 3 * mn;
        Int scale;
        mpz_divexact(scale.get_mpz_t(), mn.get_mpz_t(), s.den().get_mpz_t());
        num -= s.num() * scale;
        s = Rational(std::move(num), std::move(mn));
    }
    return s;
}

/// n * S(m, n), always an integer; a non-integral product would mean the
/// evaluator itself is broken, so it is reported as a logic error.
inline Int n_times_s(const DedekindPair& pair) {
    Rational prod = Rational(pair.n()) * dedekind_fast(pair);
    if (!prod.is_integer()) throw std::logic_error("n_times_s: n*S(m,n) is not integral");
    return prod.num();
}

}  // namespace dedekind
