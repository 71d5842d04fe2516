#include "lcseq/numtheory.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace lcseq {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t acc = 1 % n;
    a %= n;
    while (e > 0) {
        if (e & 1) acc = mulmod(acc, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return acc;
}

/// Prime factors of n (each once), by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (std::uint64_t d : prime_factors(n)) phi -= phi / d;
    return phi;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint64_t euler_phi_prime_power(std::uint64_t p, std::uint32_t n) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (n == 0) throw UsageError("prime-power exponent must be positive");
    std::uint64_t pn1 = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) pn1 *= p;
    return pn1 * p - pn1;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n < 2) throw UsageError("order modulus must be at least 2");
    a %= n;
    if (std::gcd(a, n) != 1) {
        throw UsageError("order of " + std::to_string(a) + " mod " + std::to_string(n) +
                         " undefined: operands not coprime");
    }
    std::uint64_t order = euler_phi(n);
    for (std::uint64_t r : prime_factors(order)) {
        while (order % r == 0 && powmod(a, order / r, n) == 1) order /= r;
    }
    return order;
}

bool is_primitive_root_mod_p2(std::uint64_t q, std::uint64_t p) {
    if (!is_prime(q)) throw UsageError(std::to_string(q) + " is not prime");
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (p == q) throw UsageError("p and q must be distinct primes");
    std::uint64_t p2 = p * p;
    return multiplicative_order(q % p2, p2) == p2 - p;
}

PeriodShape factor_period(std::uint64_t N, std::uint32_t q) {
    if (N == 0) throw UsageError("period must be positive");
    if (!is_prime(q)) throw UsageError(std::to_string(q) + " is not prime");

    PeriodShape shape;
    shape.q = q;
    shape.N = N;

    std::uint64_t rest = N;
    while (rest % q == 0) {
        rest /= q;
        ++shape.n;
    }
    if (rest == 1) return shape;  // pure q-power, p unset (= 1)

    // The cofactor must be a power of a single prime.
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = rest;  // rest itself is prime
    std::uint64_t r = rest;
    while (r % p == 0) {
        r /= p;
        ++shape.m;
    }
    if (r != 1) {
        throw ShapeError("period " + std::to_string(N) + " is not of the form " +
                         std::to_string(q) + "^n * p^m: cofactor " + std::to_string(rest) +
                         " has more than one prime factor");
    }
    if (p == 2) {
        // No primitive roots modulo 8, so the condition below cannot lift past
        // p^2; reject even cofactors outright.
        throw PreconditionError("cofactor prime 2 is unsupported: the primitive-root condition "
                                "requires an odd prime");
    }
    if (p > 0xffffffffull) {
        throw ShapeError("cofactor prime " + std::to_string(p) + " is too large");
    }
    shape.p = static_cast<std::uint32_t>(p);
    if (!is_primitive_root_mod_p2(q, p)) {
        throw PreconditionError(std::to_string(q) + " is not a primitive root modulo " +
                                std::to_string(p * p));
    }
    return shape;
}

} // namespace lcseq
