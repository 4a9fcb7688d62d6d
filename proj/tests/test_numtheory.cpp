#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <vector>

#include "dedekind/numtheory.hpp"

using namespace dedekind;

// Brute-force CRT oracle: enumerate 0 .. prod-1.
static std::optional<Int> crt_by_enumeration(const std::vector<Congruence>& cs) {
    Int prod = 1;
    for (const auto& c : cs) prod *= c.modulus;
    for (Int x = 0; x < prod; ++x) {
        bool ok = true;
        for (const auto& c : cs)
            if (!c.contains(x)) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return std::nullopt;
}

TEST_CASE("mod_floor maps into [0, m)") {
    CHECK(mod_floor(7, 3) == 1);
    CHECK(mod_floor(-1, 4) == 3);
    CHECK(mod_floor(-8, 4) == 0);
    CHECK(mod_floor(0, 5) == 0);
}

TEST_CASE("pow_int") {
    CHECK(pow_int(2, 0) == 1);
    CHECK(pow_int(3, 4) == 81);
    CHECK(pow_int(13, 8) == Int("815730721"));
}

TEST_CASE("is_prime by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(5));
    CHECK(is_prime(13));
    CHECK(is_prime(2147483647));  // 2^31 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK_THROWS_AS(is_prime(Int("2147483648")), std::invalid_argument);
}

TEST_CASE("mod_inverse examples") {
    CHECK(mod_inverse(3, 25) == 17);  // 3*17 = 51 == 1 mod 25
    CHECK(mod_inverse(1, 2) == 1);
    CHECK(mod_inverse(2, 5) == 3);  // 2*3 = 6 == 1 mod 5
    CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
    CHECK_THROWS_AS(mod_inverse(5, 1), std::invalid_argument);
}

TEST_CASE("mod_inverse is a two-sided inverse on random coprime pairs") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long> dist(2, 1 << 20);
    int done = 0;
    while (done < 500) {
        Int m = dist(rng);
        Int a = dist(rng);
        if (gcd(a, m) != 1) continue;
        Int b = mod_inverse(a, m);
        REQUIRE(b >= 0);
        REQUIRE(b < m);
        REQUIRE(mod_floor(a * b, m) == 1);
        ++done;
    }
}

TEST_CASE("crt examples") {
    {
        std::vector<Congruence> cs{Congruence(1, 4), Congruence(2, 3)};
        Congruence out = crt(cs);
        CHECK(out.residue == 5);
        CHECK(out.modulus == 12);
    }
    {
        std::vector<Congruence> cs{Congruence(3, 4), Congruence(1, 3)};
        Congruence out = crt(cs);
        CHECK(out.residue == 7);
        CHECK(out.modulus == 12);
    }
    {
        // Solved independently by enumeration over 0..599, then frozen.
        std::vector<Congruence> cs{Congruence(1, 25), Congruence(12, 24)};
        auto oracle = crt_by_enumeration(cs);
        REQUIRE(oracle.has_value());
        CHECK(*oracle == 276);
        Congruence out = crt(cs);
        CHECK(out.residue == 276);
        CHECK(out.modulus == 600);
    }
}

TEST_CASE("crt rejects non-coprime moduli") {
    std::vector<Congruence> cs{Congruence(1, 4), Congruence(3, 6)};
    CHECK_THROWS_AS(crt(cs), std::invalid_argument);
}

TEST_CASE("crt output reduces to every input class") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long> mdist(2, 200);
    std::uniform_int_distribution<long> rdist(0, 1 << 30);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<Congruence> cs;
        Int prod = 1;
        while (cs.size() < 3) {
            Int m = mdist(rng);
            if (gcd(m, prod) != 1) continue;
            prod *= m;
            cs.emplace_back(Int(rdist(rng)), m);
        }
        Congruence out = crt(cs);
        REQUIRE(out.modulus == prod);
        REQUIRE(out.residue >= 0);
        REQUIRE(out.residue < prod);
        for (const auto& c : cs) REQUIRE(mod_floor(out.residue, c.modulus) == c.residue);
    }
}

TEST_CASE("crt of the empty list is the trivial class") {
    Congruence out = crt(std::vector<Congruence>{});
    CHECK(out.residue == 0);
    CHECK(out.modulus == 1);
}

TEST_CASE("as_prime_power") {
    auto q4 = as_prime_power(4);
    REQUIRE(q4.has_value());
    CHECK(q4->p == 2);
    CHECK(q4->e == 2);

    auto q81 = as_prime_power(81);
    REQUIRE(q81.has_value());
    CHECK(q81->p == 3);
    CHECK(q81->e == 4);

    auto q13 = as_prime_power(13);
    REQUIRE(q13.has_value());
    CHECK(q13->p == 13);
    CHECK(q13->e == 1);

    CHECK_FALSE(as_prime_power(1).has_value());
    CHECK_FALSE(as_prime_power(6).has_value());
    CHECK_FALSE(as_prime_power(12).has_value());
    CHECK_FALSE(as_prime_power(100).has_value());
}
