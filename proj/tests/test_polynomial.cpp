#include <doctest.h>

#include <random>

#include "lcseq/polynomial.hpp"

using namespace lcseq;

namespace {

Polynomial random_poly(const PrimeField& f, std::size_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> deg_dist(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> coeff_dist(0, f.modulus() - 1);
    std::vector<std::uint32_t> coeffs(deg_dist(rng) + 1);
    for (auto& c : coeffs) c = coeff_dist(rng);
    return {f, std::move(coeffs)};
}

/// Power by plain repeated multiplication; the independent reference for
/// the dilation-based implementation.
Polynomial naive_pow(const Polynomial& base, std::uint64_t e) {
    Polynomial out = Polynomial::one(base.field());
    for (std::uint64_t i = 0; i < e; ++i) out = out * base;
    return out;
}

} // namespace

TEST_CASE("degree of zero is a distinguished marker") {
    PrimeField f2(2);
    Polynomial zero(f2);
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());
    CHECK(Polynomial::one(f2).degree() == 0u);
}

TEST_CASE("addition") {
    PrimeField f2(2), f3(3);
    auto a = Polynomial::from_coefficients(f2, {1, 1});
    CHECK((a + a).is_zero());
    CHECK((a + Polynomial(f2)) == a);
    auto b = Polynomial::from_coefficients(f3, {1, 1});
    auto c = Polynomial::from_coefficients(f3, {0, 1, 1});
    CHECK((b + c) == Polynomial::from_coefficients(f3, {1, 2, 1}));
    CHECK_THROWS_AS(a + b, UsageError);
}

TEST_CASE("multiplication") {
    PrimeField f2(2);
    auto one_plus_x = Polynomial::from_coefficients(f2, {1, 1});
    CHECK(one_plus_x * one_plus_x == Polynomial::from_coefficients(f2, {1, 0, 1}));
    CHECK(one_plus_x * Polynomial::one(f2) == one_plus_x);
    auto phi3 = Polynomial::from_coefficients(f2, {1, 1, 1});
    CHECK(one_plus_x * phi3 == Polynomial::from_coefficients(f2, {1, 0, 0, 1}));
}

TEST_CASE("division with remainder") {
    PrimeField f2(2);
    auto num = Polynomial::from_coefficients(f2, {1, 0, 0, 0, 0, 0, 1});  // x^6 + 1
    auto den = Polynomial::from_coefficients(f2, {1, 1, 1});
    auto [quo, rem] = poly_divmod(num, den);
    CHECK(quo == Polynomial::from_coefficients(f2, {1, 1, 0, 1, 1}));  // x^4+x^3+x+1
    CHECK(rem.is_zero());
    CHECK(quo * den == num);  // round-trip

    auto [q1, r1] = poly_divmod(num, Polynomial::one(f2));
    CHECK(q1 == num);
    CHECK(r1.is_zero());

    auto x = Polynomial::from_coefficients(f2, {0, 1});
    auto [q2, r2] = poly_divmod(x, Polynomial::from_coefficients(f2, {1, 0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2 == x);

    CHECK_THROWS_AS(poly_divmod(num, Polynomial(f2)), DivideByZeroError);
}

TEST_CASE("division round-trip on random inputs") {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 3u, 7u}) {
        PrimeField f(q);
        for (int i = 0; i < 300; ++i) {
            Polynomial a = random_poly(f, 24, rng);
            Polynomial b = random_poly(f, 12, rng);
            if (b.is_zero()) continue;
            auto [quo, rem] = poly_divmod(a, b);
            CHECK(quo * b + rem == a);
            if (!rem.is_zero()) CHECK(rem.degree() < b.degree());
        }
    }
}

TEST_CASE("gcd") {
    PrimeField f2(2);
    auto a = Polynomial::from_coefficients(f2, {1, 1, 0, 1});              // 1+x+x^3
    auto m = Polynomial::from_coefficients(f2, {1, 0, 0, 0, 0, 0, 1});     // x^6+1
    CHECK(poly_gcd(a, m) == Polynomial::one(f2));

    CHECK(poly_gcd(a, Polynomial(f2)) == a.monic());

    auto phi3 = Polynomial::from_coefficients(f2, {1, 1, 1});
    auto prod = phi3 * Polynomial::from_coefficients(f2, {1, 1});
    CHECK(poly_gcd(prod, phi3) == phi3);

    CHECK_THROWS_AS(poly_gcd(Polynomial(f2), Polynomial(f2)), UsageError);
}

TEST_CASE("gcd divides both operands and is monic") {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        PrimeField f(q);
        for (int i = 0; i < 200; ++i) {
            Polynomial a = random_poly(f, 16, rng);
            Polynomial b = random_poly(f, 16, rng);
            if (a.is_zero() && b.is_zero()) continue;
            Polynomial g = poly_gcd(a, b);
            CHECK(g.is_monic());
            if (!a.is_zero()) CHECK(poly_divmod(a, g).second.is_zero());
            if (!b.is_zero()) CHECK(poly_divmod(b, g).second.is_zero());
        }
    }
}

TEST_CASE("cyclotomic polynomials of prime-power order") {
    PrimeField f2(2), f3(3);
    CHECK(cyclotomic_prime_power(3, 1, f2) == Polynomial::from_coefficients(f2, {1, 1, 1}));
    CHECK(cyclotomic_prime_power(3, 2, f2) ==
          Polynomial::from_coefficients(f2, {1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_prime_power(5, 1, f3) ==
          Polynomial::from_coefficients(f3, {1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(cyclotomic_prime_power(4, 1, f3), UsageError);
    CHECK_THROWS_AS(cyclotomic_prime_power(3, 1, f3), UsageError);
}

TEST_CASE("cyclotomic structure: p unit coefficients at multiples of p^(k-1)") {
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        for (std::uint32_t k : {1u, 2u, 3u}) {
            PrimeField f(p == 3 ? 2 : 3);
            Polynomial phi = cyclotomic_prime_power(p, k, f);
            std::uint64_t step = 1;
            for (std::uint32_t i = 0; i + 1 < k; ++i) step *= p;
            CHECK(phi.degree() == (p - 1) * step);
            std::size_t nonzero = 0;
            for (std::size_t i = 0; i < phi.coeffs().size(); ++i) {
                if (phi.coeff(i) == 0) continue;
                ++nonzero;
                CHECK(phi.coeff(i) == 1);
                CHECK(i % step == 0);
            }
            CHECK(nonzero == p);
        }
    }
}

TEST_CASE("frobenius powers of cyclotomics by exponent dilation") {
    PrimeField f2(2);
    CHECK(phi_frobenius_power(3, 1, 2, f2) ==
          Polynomial::from_coefficients(f2, {1, 0, 1, 0, 1}));
    CHECK(phi_frobenius_power(3, 1, 1, f2) == cyclotomic_prime_power(3, 1, f2));
    auto phi3 = cyclotomic_prime_power(3, 1, f2);
    CHECK(phi_frobenius_power(3, 1, 2, f2) == phi3 * phi3);
    CHECK_THROWS_AS(phi_frobenius_power(3, 1, 6, f2), UsageError);
}

TEST_CASE("frobenius power equals repeated multiplication") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        PrimeField f(q);
        for (std::uint64_t p : {3ull, 5ull, 7ull}) {
            if (p == q) continue;
            for (std::uint32_t k : {1u, 2u}) {
                Polynomial phi = cyclotomic_prime_power(p, k, f);
                std::uint64_t e = 1;
                for (std::uint32_t j = 1; j <= 3; ++j) {
                    e *= q;
                    CHECK(phi_frobenius_power(p, k, e, f) == naive_pow(phi, e));
                }
            }
        }
    }
}

TEST_CASE("characteristic-q binomial collapse: (1-x)^q = 1-x^q") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        PrimeField f(q);
        auto one_minus_x = Polynomial::from_coefficients(f, {1, -1});
        std::vector<std::int64_t> expect(q + 1, 0);
        expect[0] = 1;
        expect[q] = -1;
        CHECK(naive_pow(one_minus_x, q) ==
              Polynomial::from_coefficients(f, std::span<const std::int64_t>(expect)));
    }
}

TEST_CASE("poly_pow matches repeated multiplication") {
    std::mt19937_64 rng(23);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        PrimeField f(q);
        for (int i = 0; i < 40; ++i) {
            Polynomial base = random_poly(f, 5, rng);
            for (std::uint64_t e : {0ull, 1ull, 2ull, 3ull, 7ull, 12ull}) {
                CHECK(poly_pow(base, e) == naive_pow(base, e));
            }
        }
    }
}

TEST_CASE("factored products expand to the product of their factors") {
    PrimeField f2(2);

    FactoredPolynomial empty(f2);
    CHECK(empty.expand() == Polynomial::one(f2));
    CHECK(empty.degree() == 0);

    FactoredPolynomial lin(f2);
    lin.multiply_by(PolyFactor::linear(), 1);
    CHECK(lin.expand() == Polynomial::from_coefficients(f2, {1, 1}));

    FactoredPolynomial phi_sq(f2);
    phi_sq.multiply_by(PolyFactor::cyclotomic(3, 1), 2);
    CHECK(phi_sq.expand() == Polynomial::from_coefficients(f2, {1, 0, 1, 0, 1}));
    CHECK(phi_sq.degree() == 4);
}

TEST_CASE("factored product merges labels and keeps exponents positive") {
    PrimeField f3(3);
    FactoredPolynomial f(f3);
    f.multiply_by(PolyFactor::cyclotomic(5, 1), 2);
    f.multiply_by(PolyFactor::one_minus_x_pow(3), 1);
    f.multiply_by(PolyFactor::cyclotomic(5, 1), 1);
    f.multiply_by(PolyFactor::linear(), 0);  // no-op
    REQUIRE(f.factors().size() == 2);
    for (const auto& [factor, exponent] : f.factors()) CHECK(exponent >= 1);

    // 1-x^1 canonicalizes to the linear label.
    CHECK(PolyFactor::one_minus_x_pow(1) == PolyFactor::linear());

    // expand() equals the naive product of expanded factors.
    Polynomial expect = Polynomial::one(f3);
    for (const auto& [factor, exponent] : f.factors()) {
        for (std::uint64_t i = 0; i < exponent; ++i) expect = expect * factor.expand(f3);
    }
    CHECK(f.expand() == expect);
    CHECK(f.expand_monic().is_monic());
}

TEST_CASE("polynomial rendering") {
    PrimeField f3(3);
    CHECK(Polynomial(f3).to_string() == "0");
    CHECK(Polynomial::one(f3).to_string() == "1");
    CHECK(Polynomial::from_coefficients(f3, {2, 1}).to_string() == "2 + x");
    CHECK(Polynomial::from_coefficients(f3, {1, 2, 1}).to_string() == "1 + 2*x + x^2");
    CHECK(Polynomial::from_coefficients(f3, {0, 0, 1}).to_string() == "x^2");
}
