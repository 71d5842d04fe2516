#include "lcseq/oracle.hpp"

#include <string>
#include <utility>

namespace lcseq {

namespace {

/// Factor a monic divisor of x^N - 1 over the label vocabulary by repeated
/// exact division. Valid for certified shapes, where
/// x^N - 1 = [(x - 1) Phi_p Phi_{p^2} ... Phi_{p^m}]^(q^n) up to a scalar
/// and every cyclotomic factor is irreducible.
FactoredPolynomial factor_minpoly(const Polynomial& f_monic, const PeriodShape& shape) {
    const PrimeField field = f_monic.field();
    FactoredPolynomial out(field);
    Polynomial rest = f_monic;

    auto strip = [&](const Polynomial& divisor) {
        std::uint64_t e = 0;
        while (rest.degree().value_or(0) >= divisor.degree().value_or(0) && !rest.is_one()) {
            auto [quo, rem] = poly_divmod(rest, divisor);
            if (!rem.is_zero()) break;
            rest = std::move(quo);
            ++e;
        }
        return e;
    };

    out.multiply_by(PolyFactor::linear(), strip(Polynomial::from_coefficients(field, {-1, 1})));
    for (std::uint32_t k = 1; k <= shape.m; ++k) {
        out.multiply_by(PolyFactor::cyclotomic(shape.p, k),
                        strip(cyclotomic_prime_power(shape.p, k, field)));
    }
    if (!rest.is_one()) {
        throw InternalError("minimal polynomial has a factor outside the period's vocabulary");
    }
    return out;
}

} // namespace

std::pair<std::uint64_t, Polynomial> naive_minpoly_raw(const PrimeField& field,
                                                       std::span<const std::uint32_t> period) {
    if (period.empty()) throw UsageError("empty period");
    const Polynomial modulus = Polynomial::x_pow_minus_one(field, period.size());
    const Polynomial sN(field, std::vector<std::uint32_t>(period.begin(), period.end()));
    Polynomial f = modulus;
    if (!sN.is_zero()) {
        f = poly_divmod(modulus, poly_gcd(sN, modulus)).first.monic();
    } else {
        f = Polynomial::one(field);
    }
    return {f.degree().value_or(0), std::move(f)};
}

LinearComplexityResult naive_minpoly(const PeriodicSequence& s) {
    auto [c, f] = naive_minpoly_raw(s.field(), s.symbols());
    FactoredPolynomial factored = factor_minpoly(f, s.shape());
    return {c, std::move(factored), std::move(f), AlgorithmTrace{}};
}

BerlekampMasseyResult berlekamp_massey(const PrimeField& field,
                                       std::span<const std::uint32_t> prefix) {
    if (prefix.empty()) throw UsageError("empty prefix");
    const std::uint32_t q = field.modulus();
    // Deferred reduction is safe for small moduli: terms are < 2^32 and the
    // accumulator holds far more of them than any realistic register length.
    const bool deferred = q <= 0xffffu;

    std::vector<std::uint32_t> c{1}, b{1};
    std::size_t length = 0;
    std::size_t gap = 1;      // distance since the last length change
    std::uint32_t last_d = 1; // discrepancy at the last length change

    for (std::size_t i = 0; i < prefix.size(); ++i) {
        std::uint32_t d;
        if (deferred) {
            std::uint64_t acc = prefix[i];
            for (std::size_t j = 1; j <= length; ++j) {
                acc += static_cast<std::uint64_t>(c[j]) * prefix[i - j];
            }
            d = static_cast<std::uint32_t>(acc % q);
        } else {
            d = prefix[i];
            for (std::size_t j = 1; j <= length; ++j) {
                d = field.add(d, field.mul(c[j], prefix[i - j]));
            }
        }
        if (d == 0) {
            ++gap;
            continue;
        }
        const std::uint32_t coef = field.mul(d, field.inv(last_d));
        if (2 * length <= i) {
            std::vector<std::uint32_t> keep = c;
            if (c.size() < b.size() + gap) c.resize(b.size() + gap, 0);
            for (std::size_t j = 0; j < b.size(); ++j) {
                c[j + gap] = field.sub(c[j + gap], field.mul(coef, b[j]));
            }
            length = i + 1 - length;
            b = std::move(keep);
            last_d = d;
            gap = 1;
        } else {
            if (c.size() < b.size() + gap) c.resize(b.size() + gap, 0);
            for (std::size_t j = 0; j < b.size(); ++j) {
                c[j + gap] = field.sub(c[j + gap], field.mul(coef, b[j]));
            }
            ++gap;
        }
    }
    return {length, Polynomial(field, std::move(c))};
}

std::vector<std::uint32_t> lfsr_regenerate(const LfsrSpec& spec, std::size_t count) {
    const Polynomial& f = spec.connection;
    const PrimeField field = f.field();
    const std::size_t c = f.degree().value_or(0);
    if (f.is_zero() || !f.is_monic() || c != spec.initial_state.size()) {
        throw UsageError("connection polynomial must be monic with degree equal to the state size");
    }
    if (c > 0 && f.coeff(0) == 0) {
        throw UsageError("connection polynomial must have a nonzero constant term");
    }

    std::vector<std::uint32_t> out(spec.initial_state.begin(),
                                   spec.initial_state.begin() +
                                       std::min(count, spec.initial_state.size()));
    if (c == 0) {
        out.assign(count, 0);
        return out;
    }
    const std::uint32_t f0_inv = field.inv(f.coeff(0));
    for (std::size_t t = out.size(); t < count; ++t) {
        std::uint32_t acc = 0;
        for (std::size_t j = 1; j <= c; ++j) acc = field.add(acc, field.mul(f.coeff(j), out[t - j]));
        out.push_back(field.mul(field.neg(acc), f0_inv));
    }
    return out;
}

std::optional<std::string> verify_result(const PeriodicSequence& s,
                                         const LinearComplexityResult& result) {
    const LinearComplexityResult reference = naive_minpoly(s);
    if (reference.complexity != result.complexity) {
        return "complexity mismatch: fast=" + std::to_string(result.complexity) +
               " reference=" + std::to_string(reference.complexity);
    }
    if (!(reference.expanded == result.expanded)) {
        return "minimal polynomial mismatch: fast=" + result.expanded.to_string() +
               " reference=" + reference.expanded.to_string();
    }
    std::vector<std::uint32_t> prefix(s.symbols());
    prefix.insert(prefix.end(), s.symbols().begin(), s.symbols().end());
    const BerlekampMasseyResult bm = berlekamp_massey(s.field(), prefix);
    if (bm.length != result.complexity) {
        return "register-synthesis length mismatch: fast=" + std::to_string(result.complexity) +
               " synthesis=" + std::to_string(bm.length);
    }
    return std::nullopt;
}

} // namespace lcseq
