#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcseq/field.hpp"

namespace lcseq {

/// Dense univariate polynomial over GF(q), coefficients stored ascending.
///
/// Invariant: the highest stored coefficient is nonzero; the zero polynomial
/// stores no coefficients and its degree() is empty (a distinguished marker,
/// never a number that collides with degree 0).
class Polynomial {
public:
    /// The zero polynomial.
    explicit Polynomial(PrimeField field) : field_(field) {}

    /// From canonical residues, ascending degree; trailing zeros are trimmed.
    /// Throws UsageError if a coefficient is not canonical in [0, q).
    Polynomial(PrimeField field, std::vector<std::uint32_t> coeffs);

    /// From arbitrary integers, reduced mod q.
    static Polynomial from_coefficients(PrimeField field, std::span<const std::int64_t> coeffs);
    static Polynomial from_coefficients(PrimeField field, std::initializer_list<std::int64_t> coeffs);

    static Polynomial one(PrimeField field) { return {field, {1}}; }
    static Polynomial constant(PrimeField field, std::int64_t c);
    /// x^e - 1 (monic form of the canonical period modulus).
    static Polynomial x_pow_minus_one(PrimeField field, std::uint64_t e);

    PrimeField field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i; zero beyond the stored degree.
    std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    /// Throws UsageError on the zero polynomial.
    std::uint32_t leading_coeff() const;
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Scalar-normalized copy with leading coefficient 1.
    Polynomial monic() const;

    /// Substitute x -> x^stride (spreads coefficients; stride >= 1).
    Polynomial dilate(std::uint64_t stride) const;

    /// Ascending human-readable form, e.g. "1 + 2*x + x^2"; "0" for zero.
    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) noexcept = default;

private:
    PrimeField field_;
    std::vector<std::uint32_t> coeffs_;

    void trim() noexcept;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Quotient and remainder with deg(rem) < deg(b). Throws DivideByZeroError
/// for b == 0.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor. Throws UsageError when both inputs are zero.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// base^e over GF(q). Uses the characteristic-q identity f(x)^q = f(x^q) to
/// split the exponent into base-q digits, so large exponents cost a handful
/// of small multiplications instead of e of them.
Polynomial poly_pow(const Polynomial& base, std::uint64_t e);

/// Cyclotomic polynomial of prime-power order:
/// Phi_{p^k}(x) = 1 + x^{p^(k-1)} + x^{2 p^(k-1)} + ... + x^{(p-1) p^(k-1)}.
/// Requires p prime, k >= 1, p != q.
Polynomial cyclotomic_prime_power(std::uint64_t p, std::uint32_t k, PrimeField field);

/// Phi_{p^k}(x)^e for e a power of q, computed by exponent dilation:
/// over GF(q), Phi_{p^k}(x)^{q^j} = Phi_{p^k}(x^{q^j}).
Polynomial phi_frobenius_power(std::uint64_t p, std::uint32_t k, std::uint64_t e, PrimeField field);

/// One multiplicand of a factored polynomial. The vocabulary covers every
/// factor the analysis algorithms produce: 1 - x, 1 - x^M, and prime-power
/// cyclotomics. one_minus_x_pow(1) canonicalizes to linear() so labels stay
/// pairwise distinct inside a product.
class PolyFactor {
public:
    enum class Kind { Linear, OneMinusXPow, CyclotomicPrimePower };

    static PolyFactor linear() { return PolyFactor(Kind::Linear, 1, 0); }
    static PolyFactor one_minus_x_pow(std::uint64_t m);
    static PolyFactor cyclotomic(std::uint64_t p, std::uint32_t k);

    Kind kind() const noexcept { return kind_; }
    /// M for OneMinusXPow (1 for Linear); p for CyclotomicPrimePower.
    std::uint64_t param() const noexcept { return a_; }
    std::uint32_t prime_exponent() const noexcept { return k_; }

    std::uint64_t degree() const noexcept;
    Polynomial expand(PrimeField field) const;
    std::string label() const;

    friend bool operator==(const PolyFactor&, const PolyFactor&) noexcept = default;
    friend auto operator<=>(const PolyFactor&, const PolyFactor&) noexcept = default;

private:
    PolyFactor(Kind kind, std::uint64_t a, std::uint32_t k) : kind_(kind), a_(a), k_(k) {}

    Kind kind_;
    std::uint64_t a_;
    std::uint32_t k_;
};

/// Product of labeled factors with positive exponents; the working
/// representation inside the fast algorithms, expanded only on demand.
class FactoredPolynomial {
public:
    explicit FactoredPolynomial(PrimeField field) : field_(field) {}

    PrimeField field() const noexcept { return field_; }
    bool is_one() const noexcept { return factors_.empty(); }
    const std::vector<std::pair<PolyFactor, std::uint64_t>>& factors() const noexcept {
        return factors_;
    }

    /// Merge factor^exponent into the product (exponent 0 is a no-op).
    void multiply_by(const PolyFactor& factor, std::uint64_t exponent);
    void multiply_by(const FactoredPolynomial& other);

    /// Sum of exponent-weighted factor degrees.
    std::uint64_t degree() const noexcept;

    /// Literal product of the expanded factors (not normalized monic).
    Polynomial expand() const;
    Polynomial expand_monic() const;

    std::string to_string() const;

private:
    PrimeField field_;
    std::vector<std::pair<PolyFactor, std::uint64_t>> factors_;  // sorted by factor key
};

} // namespace lcseq
