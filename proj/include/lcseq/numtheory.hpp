#pragma once

#include <cstdint>

#include "lcseq/error.hpp"

namespace lcseq {

/// Certified factorization of a period length N = q^n * p^m.
///
/// Produced only by factor_period, which is the single gatekeeper: a shape
/// with m >= 1 guarantees that p is an odd prime distinct from q and that q
/// is a primitive root modulo p^2 (and hence modulo every p^k).
struct PeriodShape {
    std::uint32_t q = 2;  ///< base prime (field characteristic)
    std::uint32_t p = 1;  ///< cofactor prime; 1 when m == 0
    std::uint32_t n = 0;  ///< exponent of q in N
    std::uint32_t m = 0;  ///< exponent of p in N
    std::uint64_t N = 1;  ///< q^n * p^m

    friend bool operator==(const PeriodShape&, const PeriodShape&) noexcept = default;
};

/// Deterministic trial-division primality test. is_prime(1) is false.
bool is_prime(std::uint64_t n) noexcept;

/// phi(p^n) = p^n - p^(n-1) for p prime, n >= 1.
std::uint64_t euler_phi_prime_power(std::uint64_t p, std::uint32_t n);

/// Smallest t >= 1 with a^t = 1 (mod n). Requires gcd(a, n) = 1 and n >= 2.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// True iff the order of q modulo p^2 equals phi(p^2) = p^2 - p.
bool is_primitive_root_mod_p2(std::uint64_t q, std::uint64_t p);

/// Factor N as q^n * p^m and certify the preconditions of the fast
/// algorithms: the cofactor of the q-part must be a power of a single odd
/// prime p != q, and q must be a primitive root modulo p^2.
///
/// Throws ShapeError when the cofactor is not a prime power, and
/// PreconditionError when the primitive-root condition fails (the message
/// names q and p^2) or the cofactor prime is 2.
PeriodShape factor_period(std::uint64_t N, std::uint32_t q);

} // namespace lcseq
