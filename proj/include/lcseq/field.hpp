#pragma once

#include <cstdint>

#include "lcseq/error.hpp"

namespace lcseq {

class FieldElement;

/// Prime field GF(q). The modulus is verified prime at construction; all
/// operations take and return canonical residues in [0, q), so equality of
/// residues is plain integer comparison.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t modulus);

    std::uint32_t modulus() const noexcept { return q_; }

    /// Canonical residue of an arbitrary integer.
    std::uint32_t reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(q_);
        return static_cast<std::uint32_t>(r < 0 ? r + q_ : r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + q_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

    /// Multiplicative inverse; throws DivideByZeroError for a == 0.
    std::uint32_t inv(std::uint32_t a) const;

    FieldElement element(std::int64_t v) const;

    friend bool operator==(const PrimeField&, const PrimeField&) noexcept = default;

private:
    std::uint32_t q_;
};

/// A single element of GF(q); carries its modulus so that operations on
/// elements of different fields are detected instead of silently mixed.
class FieldElement {
public:
    FieldElement(std::uint32_t value, const PrimeField& field);

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return q_; }
    PrimeField field() const noexcept { return PrimeField(q_); }

    FieldElement inverse() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    friend bool operator==(const FieldElement&, const FieldElement&) noexcept = default;

private:
    std::uint32_t value_;
    std::uint32_t q_;
};

} // namespace lcseq
