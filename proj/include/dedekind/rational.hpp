#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "dedekind/numtheory.hpp"

namespace dedekind {

/// A p-adic valuation: a finite integer, or +infinity (the valuation of 0).
/// Infinity is a distinguished state, never a sentinel integer.
class Valuation {
public:
    Valuation(long v) : value_(v) {}

    static Valuation infinity() { return Valuation(infinite_tag{}); }

    bool is_infinite() const { return infinite_; }

    long value() const {
        if (infinite_) throw std::logic_error("Valuation: +infinity has no finite value");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    /// v(x*y) arithmetic: infinity absorbs.
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    struct infinite_tag {};
    explicit Valuation(infinite_tag) : infinite_(true) {}

    bool infinite_ = false;
    long value_ = 0;
};

/// Reduced fraction of arbitrary-precision integers. Canonical form is kept
/// eagerly: den >= 1, gcd(|num|, den) = 1, zero is 0/1. Equality is field-wise.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }
    Rational(long num, long den) : num_(num), den_(den) { canonicalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return raw(-num_, den_); }

    friend Rational operator+(const Rational& x, const Rational& y) {
        Int g = gcd(x.den_, y.den_);
        if (g == 1) return raw(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
        Int xd = x.den_ / g;
        Int yd = y.den_ / g;
        Int num = x.num_ * yd + y.num_ * xd;
        Int g2 = gcd(num, g);
        if (g2 != 1) {
            num /= g2;
            g /= g2;
        }
        return raw(std::move(num), xd * yd * g);
    }

    friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

    friend Rational operator*(const Rational& x, const Rational& y) {
        Int g1 = gcd(x.num_, y.den_);
        Int g2 = gcd(y.num_, x.den_);
        return raw((x.num_ / g1) * (y.num_ / g2), (x.den_ / g2) * (y.den_ / g1));
    }

    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        Rational recip = y.num_ > 0 ? raw(y.den_, y.num_) : raw(-y.den_, -y.num_);
        return x * recip;
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        int c = cmp(x.num_ * y.den_, y.num_ * x.den_);
        return c <=> 0;
    }

    /// "num/den" in lowest terms, "num" alone when den = 1.
    std::string to_string() const {
        if (den_ == 1) return num_.get_str();
        return num_.get_str() + "/" + den_.get_str();
    }

    /// Parse "[-]num[/den]". Leading '+' or '-' on the numerator is accepted;
    /// the denominator, when present, must be a nonzero digit string.
    static Rational parse(const std::string& text) {
        auto bad = [&] { throw std::invalid_argument("Rational: cannot parse \"" + text + "\""); };
        std::string num_part = text;
        std::string den_part;
        if (auto slash = text.find('/'); slash != std::string::npos) {
            num_part = text.substr(0, slash);
            den_part = text.substr(slash + 1);
            if (den_part.empty()) bad();
        }
        auto digits_only = [](const std::string& s, size_t from) {
            if (from >= s.size()) return false;
            for (size_t i = from; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        size_t start = (!num_part.empty() && (num_part[0] == '-' || num_part[0] == '+')) ? 1 : 0;
        if (!digits_only(num_part, start)) bad();
        if (!den_part.empty() && !digits_only(den_part, 0)) bad();

        Int num(num_part, 10);
        Int den = den_part.empty() ? Int(1) : Int(den_part, 10);
        if (den == 0) throw std::invalid_argument("Rational: denominator must be nonzero");
        return Rational(std::move(num), std::move(den));
    }

private:
    // Canonical by construction; skips the reduction pass.
    static Rational raw(Int num, Int den) {
        Rational r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    void canonicalize() {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        if (g != 1) {
            mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }

    Int num_;
    Int den_;
};

/// v_p(x) = v_p(num) - v_p(den); +infinity iff x = 0. Requires p prime.
inline Valuation vp(const Rational& x, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("vp: p must be prime");
    if (x.is_zero()) return Valuation::infinity();
    Int reduced;
    if (mpz_divisible_p(x.num().get_mpz_t(), p.get_mpz_t())) {
        long c = mpz_remove(reduced.get_mpz_t(), x.num().get_mpz_t(), p.get_mpz_t());
        return Valuation(c);
    }
    if (mpz_divisible_p(x.den().get_mpz_t(), p.get_mpz_t())) {
        long c = mpz_remove(reduced.get_mpz_t(), x.den().get_mpz_t(), p.get_mpz_t());
        return Valuation(-c);
    }
    return Valuation(0);
}

/// The residue of a p-integral rational mod p^k, i.e. num * den^-1 mod p^k.
/// Requires v_p(x) >= 0 and k >= 1.
inline Int rational_residue(const Rational& x, const Int& p, unsigned long k) {
    if (!is_prime(p)) throw std::invalid_argument("rational_residue: p must be prime");
    if (k < 1) throw std::invalid_argument("rational_residue: k must be >= 1");
    if (mpz_divisible_p(x.den().get_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("rational_residue: value is not p-integral");
    Int modulus = pow_int(p, k);
    if (x.den() == 1) return mod_floor(x.num(), modulus);
    Int inv = mod_inverse(mod_floor(x.den(), modulus), modulus);
    return mod_floor(mod_floor(x.num(), modulus) * inv, modulus);
}

}  // namespace dedekind
