#include "lcseq/field.hpp"

#include <string>

#include "lcseq/numtheory.hpp"

namespace lcseq {

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.modulus() != b.modulus()) {
        throw UsageError("mixed-field operands: GF(" + std::to_string(a.modulus()) + ") vs GF(" +
                         std::to_string(b.modulus()) + ")");
    }
}

} // namespace

PrimeField::PrimeField(std::uint32_t modulus) : q_(modulus) {
    if (modulus > 0x7fffffffu || !is_prime(modulus)) {
        throw UsageError("field modulus " + std::to_string(modulus) + " is not prime");
    }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % q_;
    std::uint64_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % q_ == 0) throw DivideByZeroError("inverse of zero in GF(" + std::to_string(q_) + ")");
    return pow(a, q_ - 2);
}

FieldElement PrimeField::element(std::int64_t v) const { return FieldElement(reduce(v), *this); }

FieldElement::FieldElement(std::uint32_t value, const PrimeField& field)
    : value_(value), q_(field.modulus()) {
    if (value >= q_) {
        throw UsageError("residue " + std::to_string(value) + " is not canonical in GF(" +
                         std::to_string(q_) + ")");
    }
}

FieldElement FieldElement::inverse() const { return FieldElement(field().inv(value_), field()); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field().add(a.value(), b.value()), a.field());
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field().sub(a.value(), b.value()), a.field());
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field().mul(a.value(), b.value()), a.field());
}

FieldElement FieldElement::operator-() const {
    return FieldElement(field().neg(value_), field());
}

} // namespace lcseq
