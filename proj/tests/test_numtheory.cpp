#include <doctest.h>

#include <numeric>

#include "lcseq/numtheory.hpp"

using namespace lcseq;

namespace {

/// Brute-force order: enumerate powers until 1 reappears.
std::uint64_t order_by_enumeration(std::uint64_t a, std::uint64_t n) {
    std::uint64_t x = a % n;
    std::uint64_t t = 1;
    while (x != 1) {
        x = x * a % n;
        ++t;
    }
    return t;
}

/// Brute-force totient: count residues coprime to n.
std::uint64_t phi_by_counting(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (std::gcd(i, n) == 1) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(9));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2147483647));  // 2^31 - 1
}

TEST_CASE("euler phi of prime powers") {
    CHECK(euler_phi_prime_power(3, 2) == 6);
    CHECK(euler_phi_prime_power(7, 1) == 6);
    CHECK(euler_phi_prime_power(5, 2) == 20);
    CHECK_THROWS_AS(euler_phi_prime_power(4, 2), UsageError);
    CHECK_THROWS_AS(euler_phi_prime_power(3, 0), UsageError);
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order(2, 9) == 6);
    CHECK(multiplicative_order(1, 17) == 1);
    CHECK(multiplicative_order(3, 25) == 20);
    CHECK_THROWS_AS(multiplicative_order(6, 9), UsageError);
}

TEST_CASE("multiplicative order matches enumeration") {
    for (std::uint64_t n = 2; n <= 60; ++n) {
        for (std::uint64_t a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            CHECK(multiplicative_order(a, n) == order_by_enumeration(a, n));
        }
    }
}

TEST_CASE("order divides the totient") {
    for (std::uint64_t n = 2; n <= 50; ++n) {
        const std::uint64_t phi = phi_by_counting(n);
        for (std::uint64_t a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            CHECK(phi % multiplicative_order(a, n) == 0);
        }
    }
}

TEST_CASE("primitive root modulo p^2") {
    CHECK(is_primitive_root_mod_p2(2, 3));
    CHECK(is_primitive_root_mod_p2(3, 5));
    CHECK_FALSE(is_primitive_root_mod_p2(2, 7));  // order of 2 mod 49 is 21
    CHECK_THROWS_AS(is_primitive_root_mod_p2(3, 3), UsageError);
}

TEST_CASE("primitive root modulo p^2 lifts to all prime powers") {
    struct Pair {
        std::uint64_t q, p;
    };
    for (Pair qp : {Pair{2, 3}, Pair{2, 5}, Pair{3, 5}, Pair{2, 11}, Pair{5, 3}}) {
        REQUIRE(is_primitive_root_mod_p2(qp.q, qp.p));
        std::uint64_t pk = 1;
        for (std::uint32_t k = 1; k <= 4; ++k) {
            pk *= qp.p;
            CHECK(multiplicative_order(qp.q, pk) == euler_phi_prime_power(qp.p, k));
        }
    }
}

TEST_CASE("factor_period certifies valid shapes") {
    PeriodShape s = factor_period(12, 2);
    CHECK(s.q == 2);
    CHECK(s.n == 2);
    CHECK(s.p == 3);
    CHECK(s.m == 1);
    CHECK(s.N == 12);

    s = factor_period(8, 2);
    CHECK(s.n == 3);
    CHECK(s.m == 0);
    CHECK(s.p == 1);

    // 20 = 2^2 * 5 and 2 is a primitive root mod 25, so this one is valid.
    s = factor_period(20, 2);
    CHECK(s.p == 5);
    CHECK(s.m == 1);

    s = factor_period(1, 5);
    CHECK(s.n == 0);
    CHECK(s.m == 0);
}

TEST_CASE("factor_period rejects bad shapes") {
    // 28 = 2^2 * 7 but 2 is not a primitive root mod 49.
    CHECK_THROWS_AS(factor_period(28, 2), PreconditionError);
    CHECK_THROWS_WITH_AS(factor_period(28, 2), "2 is not a primitive root modulo 49",
                         PreconditionError);
    // 15 = 3 * 5: two distinct cofactor primes for q = 2.
    CHECK_THROWS_AS(factor_period(30, 2), ShapeError);
    // Even cofactor: the primitive-root condition cannot lift past p^2.
    CHECK_THROWS_AS(factor_period(4, 3), PreconditionError);
    CHECK_THROWS_AS(factor_period(0, 2), UsageError);
    CHECK_THROWS_AS(factor_period(6, 4), UsageError);
}

TEST_CASE("factor_period reconstructs N exactly") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (std::uint64_t N = 1; N <= 2000; ++N) {
            PeriodShape s;
            try {
                s = factor_period(N, q);
            } catch (const Error&) {
                continue;
            }
            std::uint64_t reconstructed = 1;
            for (std::uint32_t i = 0; i < s.n; ++i) reconstructed *= s.q;
            for (std::uint32_t i = 0; i < s.m; ++i) reconstructed *= s.p;
            CHECK(reconstructed == N);
            if (s.m >= 1) {
                CHECK(s.p != s.q);
                CHECK(s.p % 2 == 1);
                CHECK(is_primitive_root_mod_p2(s.q, s.p));
            }
        }
    }
}
