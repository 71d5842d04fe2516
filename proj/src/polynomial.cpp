#include "lcseq/polynomial.hpp"

#include <algorithm>

#include "lcseq/numtheory.hpp"

namespace lcseq {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field()) {
        throw UsageError("mixed-field polynomials: GF(" + std::to_string(a.field().modulus()) +
                         ") vs GF(" + std::to_string(b.field().modulus()) + ")");
    }
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

} // namespace

Polynomial::Polynomial(PrimeField field, std::vector<std::uint32_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (std::uint32_t c : coeffs_) {
        if (c >= field_.modulus()) {
            throw UsageError("coefficient " + std::to_string(c) + " is not canonical in GF(" +
                             std::to_string(field_.modulus()) + ")");
        }
    }
    trim();
}

Polynomial Polynomial::from_coefficients(PrimeField field, std::span<const std::int64_t> coeffs) {
    std::vector<std::uint32_t> canon(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) canon[i] = field.reduce(coeffs[i]);
    return {field, std::move(canon)};
}

Polynomial Polynomial::from_coefficients(PrimeField field,
                                         std::initializer_list<std::int64_t> coeffs) {
    return from_coefficients(field, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

Polynomial Polynomial::constant(PrimeField field, std::int64_t c) {
    return {field, {field.reduce(c)}};
}

Polynomial Polynomial::x_pow_minus_one(PrimeField field, std::uint64_t e) {
    std::vector<std::uint32_t> coeffs(e + 1, 0);
    coeffs[0] = field.neg(1);
    coeffs[e] = 1;
    return {field, std::move(coeffs)};
}

void Polynomial::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint32_t Polynomial::leading_coeff() const {
    if (coeffs_.empty()) throw UsageError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw UsageError("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    std::uint32_t scale = field_.inv(coeffs_.back());
    std::vector<std::uint32_t> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.mul(coeffs_[i], scale);
    return {field_, std::move(out)};
}

Polynomial Polynomial::dilate(std::uint64_t stride) const {
    if (stride == 0) throw UsageError("dilation stride must be positive");
    if (is_zero() || stride == 1) return *this;
    std::vector<std::uint32_t> out((coeffs_.size() - 1) * stride + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * stride] = coeffs_[i];
    return {field_, std::move(out)};
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(coeffs_[i]);
            continue;
        }
        if (coeffs_[i] != 1) out += std::to_string(coeffs_[i]) + "*";
        out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const PrimeField f = a.field();
    std::vector<std::uint32_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return {f, std::move(out)};
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const PrimeField f = a.field();
    std::vector<std::uint32_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return {f, std::move(out)};
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const PrimeField f = a.field();
    if (a.is_zero() || b.is_zero()) return Polynomial(f);
    // Iterate over the operand with fewer nonzero terms so dense-by-sparse
    // products stay cheap.
    auto nonzeros = [](const Polynomial& p) {
        std::size_t n = 0;
        for (std::uint32_t c : p.coeffs()) n += (c != 0);
        return n;
    };
    const Polynomial& outer = nonzeros(a) <= nonzeros(b) ? a : b;
    const Polynomial& inner = (&outer == &a) ? b : a;
    std::vector<std::uint32_t> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < outer.coeffs().size(); ++i) {
        std::uint32_t ci = outer.coeffs()[i];
        if (ci == 0) continue;
        for (std::size_t j = 0; j < inner.coeffs().size(); ++j) {
            out[i + j] = f.add(out[i + j], f.mul(ci, inner.coeffs()[j]));
        }
    }
    return {f, std::move(out)};
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const PrimeField f = a.field();
    if (b.is_zero()) throw DivideByZeroError("polynomial division by zero");
    if (a.is_zero() || a.coeffs().size() < b.coeffs().size()) return {Polynomial(f), a};

    std::vector<std::uint32_t> rem = a.coeffs();
    const std::size_t bdeg = b.coeffs().size() - 1;
    std::vector<std::uint32_t> quo(rem.size() - bdeg, 0);
    const std::uint32_t lead_inv = f.inv(b.leading_coeff());
    for (std::size_t i = rem.size(); i-- > bdeg;) {
        std::uint32_t t = f.mul(rem[i], lead_inv);
        if (t == 0) continue;
        quo[i - bdeg] = t;
        for (std::size_t j = 0; j <= bdeg; ++j) {
            rem[i - bdeg + j] = f.sub(rem[i - bdeg + j], f.mul(t, b.coeffs()[j]));
        }
    }
    return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw UsageError("gcd of two zero polynomials is undefined");
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial poly_pow(const Polynomial& base, std::uint64_t e) {
    const PrimeField f = base.field();
    if (e == 0) return Polynomial::one(f);
    if (base.is_zero()) return base;
    const std::uint32_t q = f.modulus();
    Polynomial result = Polynomial::one(f);
    std::uint64_t stride = 1;
    while (e > 0) {
        std::uint32_t digit = static_cast<std::uint32_t>(e % q);
        e /= q;
        if (digit != 0) {
            Polynomial layer = base.dilate(stride);  // base^(q^j) = base(x^(q^j))
            Polynomial t = layer;
            for (std::uint32_t i = 1; i < digit; ++i) t = t * layer;
            result = result * t;
        }
        if (e > 0) stride *= q;
    }
    return result;
}

Polynomial cyclotomic_prime_power(std::uint64_t p, std::uint32_t k, PrimeField field) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (k == 0) throw UsageError("cyclotomic prime-power exponent must be positive");
    if (p == field.modulus()) {
        throw UsageError("cyclotomic order must be coprime to the field characteristic");
    }
    std::uint64_t step = 1;
    for (std::uint32_t i = 0; i + 1 < k; ++i) step *= p;
    std::vector<std::uint32_t> coeffs((p - 1) * step + 1, 0);
    for (std::uint64_t i = 0; i < p; ++i) coeffs[i * step] = 1;
    return {field, std::move(coeffs)};
}

Polynomial phi_frobenius_power(std::uint64_t p, std::uint32_t k, std::uint64_t e,
                               PrimeField field) {
    std::uint64_t t = e;
    while (t > 1) {
        if (t % field.modulus() != 0) {
            throw UsageError("exponent " + std::to_string(e) + " is not a power of " +
                             std::to_string(field.modulus()));
        }
        t /= field.modulus();
    }
    if (e == 0) throw UsageError("exponent must be positive");
    return cyclotomic_prime_power(p, k, field).dilate(e);
}

PolyFactor PolyFactor::one_minus_x_pow(std::uint64_t m) {
    if (m == 0) throw UsageError("factor exponent must be positive");
    if (m == 1) return linear();
    return PolyFactor(Kind::OneMinusXPow, m, 0);
}

PolyFactor PolyFactor::cyclotomic(std::uint64_t p, std::uint32_t k) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (k == 0) throw UsageError("cyclotomic prime-power exponent must be positive");
    return PolyFactor(Kind::CyclotomicPrimePower, p, k);
}

std::uint64_t PolyFactor::degree() const noexcept {
    switch (kind_) {
        case Kind::Linear: return 1;
        case Kind::OneMinusXPow: return a_;
        case Kind::CyclotomicPrimePower: return (a_ - 1) * ipow(a_, k_ - 1);
    }
    return 0;
}

Polynomial PolyFactor::expand(PrimeField field) const {
    switch (kind_) {
        case Kind::Linear:
            return Polynomial::from_coefficients(field, {1, -1});
        case Kind::OneMinusXPow: {
            std::vector<std::uint32_t> coeffs(a_ + 1, 0);
            coeffs[0] = 1;
            coeffs[a_] = field.neg(1);
            return {field, std::move(coeffs)};
        }
        case Kind::CyclotomicPrimePower:
            return cyclotomic_prime_power(a_, k_, field);
    }
    return Polynomial(field);
}

std::string PolyFactor::label() const {
    switch (kind_) {
        case Kind::Linear: return "1-x";
        case Kind::OneMinusXPow: return "1-x^" + std::to_string(a_);
        case Kind::CyclotomicPrimePower:
            return "Phi(" + std::to_string(a_) + "^" + std::to_string(k_) + ")";
    }
    return "?";
}

void FactoredPolynomial::multiply_by(const PolyFactor& factor, std::uint64_t exponent) {
    if (exponent == 0) return;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), factor,
                               [](const auto& entry, const PolyFactor& f) { return entry.first < f; });
    if (it != factors_.end() && it->first == factor) {
        it->second += exponent;
    } else {
        factors_.insert(it, {factor, exponent});
    }
}

void FactoredPolynomial::multiply_by(const FactoredPolynomial& other) {
    if (field_ != other.field_) throw UsageError("mixed-field factored polynomials");
    for (const auto& [factor, exponent] : other.factors_) multiply_by(factor, exponent);
}

std::uint64_t FactoredPolynomial::degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& [factor, exponent] : factors_) d += factor.degree() * exponent;
    return d;
}

Polynomial FactoredPolynomial::expand() const {
    Polynomial out = Polynomial::one(field_);
    for (const auto& [factor, exponent] : factors_) {
        out = out * poly_pow(factor.expand(field_), exponent);
    }
    return out;
}

Polynomial FactoredPolynomial::expand_monic() const { return expand().monic(); }

std::string FactoredPolynomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [factor, exponent] : factors_) {
        if (!out.empty()) out += " * ";
        out += "(" + factor.label() + ")";
        if (exponent != 1) out += "^" + std::to_string(exponent);
    }
    return out;
}

} // namespace lcseq
