#include "lcseq/fastlc.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace lcseq {

namespace {

using Branch = AlgorithmTrace::Branch;

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

bool all_zero(std::span<const std::uint32_t> w) {
    return std::all_of(w.begin(), w.end(), [](std::uint32_t v) { return v == 0; });
}

/// Componentwise sum of the `blocks` blocks of length M covering w.
std::vector<std::uint32_t> block_sum(std::span<const std::uint32_t> w, std::size_t M,
                                     const PrimeField& f) {
    std::vector<std::uint32_t> sum(w.begin(), w.begin() + M);
    for (std::size_t b = 1; b < w.size() / M; ++b) {
        for (std::size_t t = 0; t < M; ++t) sum[t] = f.add(sum[t], w[b * M + t]);
    }
    return sum;
}

bool blocks_all_equal(std::span<const std::uint32_t> w, std::size_t M) {
    for (std::size_t b = 1; b < w.size() / M; ++b) {
        if (!std::equal(w.begin(), w.begin() + M, w.begin() + b * M)) return false;
    }
    return true;
}

/// In-place sequential prefix update: block i becomes A_1 + ... + A_i.
/// Divides the generating polynomial by 1 - x^M when the full block sum
/// vanishes.
void prefix_update(std::span<std::uint32_t> w, std::size_t M, const PrimeField& f) {
    for (std::size_t b = 1; b < w.size() / M; ++b) {
        for (std::size_t t = 0; t < M; ++t) {
            w[b * M + t] = f.add(w[b * M + t], w[(b - 1) * M + t]);
        }
    }
}

/// Stride-p column sums over a q*p-block buffer: segment i is
/// A_i + A_{p+i} + ... + A_{(q-1)p+i} (0-based i < p).
std::vector<std::uint32_t> stride_p_column_sums(std::span<const std::uint32_t> w, std::size_t M,
                                                std::uint32_t p, const PrimeField& f) {
    const std::size_t rows = w.size() / M / p;
    std::vector<std::uint32_t> sums(static_cast<std::size_t>(p) * M, 0);
    for (std::size_t j = 0; j < rows; ++j) {
        const std::size_t row_base = j * p * M;
        for (std::size_t i = 0; i < static_cast<std::size_t>(p) * M; ++i) {
            sums[i] = f.add(sums[i], w[row_base + i]);
        }
    }
    return sums;
}

bool segments_all_equal(std::span<const std::uint32_t> sums, std::size_t M) {
    return blocks_all_equal(sums, M);
}

/// In-place quotient by 1 + x^M + ... + x^{(p-1)M}. Single left-to-right
/// pass: colsum[i] accumulates column i through the current row; the new
/// block at (row j, column i) is colsum[i] - colsum[i-1], where column -1
/// wraps to the last column's value through the previous row.
void quotient_update_inplace(std::span<std::uint32_t> w, std::size_t M, std::uint32_t p,
                             const PrimeField& f, std::vector<std::uint32_t>& colsum) {
    const std::size_t rows = w.size() / M / p;
    colsum.assign(static_cast<std::size_t>(p) * M, 0);
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t i = 0; i < p; ++i) {
            std::uint32_t* blk = &w[(j * p + i) * M];
            std::uint32_t* cs = &colsum[i * M];
            const std::uint32_t* prev = (i > 0) ? &colsum[(i - 1) * M]
                                                : &colsum[(static_cast<std::size_t>(p) - 1) * M];
            for (std::size_t t = 0; t < M; ++t) {
                cs[t] = f.add(cs[t], blk[t]);
                blk[t] = f.sub(cs[t], prev[t]);
            }
        }
    }
}

/// Reduced sequence blocks at stride q: block i (0-based, i < q) is
/// A_i + A_{q+i} + ... + A_{(p-1)q+i}.
std::vector<std::uint32_t> stride_q_reduction(std::span<const std::uint32_t> w, std::size_t M,
                                              std::uint32_t q, const PrimeField& f) {
    const std::size_t rows = w.size() / M / q;
    std::vector<std::uint32_t> b(static_cast<std::size_t>(q) * M, 0);
    for (std::size_t j = 0; j < rows; ++j) {
        const std::size_t row_base = j * q * M;
        for (std::size_t i = 0; i < static_cast<std::size_t>(q) * M; ++i) {
            b[i] = f.add(b[i], w[row_base + i]);
        }
    }
    return b;
}

/// Period-q^n engine: repeated q-block sums with sequential prefix updates.
void run_qn(std::vector<std::uint32_t>& w, const PrimeField& f, std::uint64_t& c,
            FactoredPolynomial& poly, AlgorithmTrace& trace, std::uint32_t level) {
    const std::uint32_t q = f.modulus();
    for (;;) {
        ++trace.loop_count;
        if (all_zero(w)) {
            trace.log(level, Branch::ZeroExit);
            return;
        }
        if (w.size() == 1) {
            c += 1;
            poly.multiply_by(PolyFactor::linear(), 1);
            trace.log(level, Branch::ScalarTerminal);
            return;
        }
        const std::size_t M = w.size() / q;
        std::uint32_t count = 0;
        std::vector<std::uint32_t> sum = block_sum(w, M, f);
        while (all_zero(sum)) {
            trace.log(level, Branch::QSumZero);
            ++count;
            if (count == q) return;  // nothing left below this level
            prefix_update(w, M, f);
            sum = block_sum(w, M, f);
        }
        trace.log(level, Branch::QSumNonzero);
        const std::uint64_t e = q - count - 1;
        c += e * M;
        if (e > 0) poly.multiply_by(PolyFactor::one_minus_x_pow(M), e);
        w = std::move(sum);
    }
}

/// Period-p^m engine (no q-part): repeated p-block splits.
void run_pm(std::vector<std::uint32_t>& w, const PrimeField& f, std::uint32_t p, std::uint32_t m,
            std::uint64_t& c, FactoredPolynomial& poly, AlgorithmTrace& trace,
            std::uint32_t level) {
    std::uint32_t m_cur = m;
    for (;;) {
        ++trace.loop_count;
        if (all_zero(w)) {
            trace.log(level, Branch::ZeroExit);
            return;
        }
        if (m_cur == 0) {
            c += 1;
            poly.multiply_by(PolyFactor::linear(), 1);
            trace.log(level, Branch::ScalarTerminal);
            return;
        }
        const std::size_t k = w.size() / p;
        --m_cur;
        if (blocks_all_equal(w, k)) {
            trace.log(level, Branch::BlocksEqual);
            w.resize(k);
        } else {
            trace.log(level, Branch::BlocksUnequal);
            c += static_cast<std::uint64_t>(p - 1) * k;
            poly.multiply_by(PolyFactor::cyclotomic(p, m_cur + 1), 1);
            w = block_sum(w, k, f);
        }
    }
}

/// Extract the exponent z of the top cyclotomic power Phi_{p^m}(x)^z in the
/// minimal polynomial, consuming (and mutating) the working buffer.
std::uint64_t run_phi_part(std::vector<std::uint32_t>& w, const PrimeField& f, std::uint32_t p,
                           std::uint32_t m, std::uint32_t n, AlgorithmTrace& trace,
                           std::uint32_t level) {
    const std::uint32_t q = f.modulus();
    const std::uint64_t k = ipow(p, m - 1);
    std::uint64_t l = ipow(q, n);
    std::uint64_t z = 0;
    std::vector<std::uint32_t> colsum;
    for (;;) {
        ++trace.loop_count;
        if (all_zero(w)) {
            trace.log(level, Branch::ZeroExit);
            return z;
        }
        if (l == 1) {
            if (blocks_all_equal(w, k)) {
                trace.log(level, Branch::BlocksEqual);
            } else {
                trace.log(level, Branch::BlocksUnequal);
                z += 1;
            }
            return z;
        }
        l /= q;
        const std::size_t M = l * k;
        std::uint32_t count = 0;
        std::vector<std::uint32_t> sums = stride_p_column_sums(w, M, p, f);
        while (segments_all_equal(sums, M)) {
            trace.log(level, Branch::PhiDivisible);
            ++count;
            if (count == q) {
                trace.log(level, Branch::PhiExhausted);
                return z;  // the full power divides; no factor missing
            }
            quotient_update_inplace(w, M, p, f, colsum);
            sums = stride_p_column_sums(w, M, p, f);
        }
        trace.log(level, Branch::PhiNotDivisible);
        z += static_cast<std::uint64_t>(q - count - 1) * l;
        w = std::move(sums);
    }
}

/// General engine: peel one cyclotomic level per recursion step, reducing
/// the period from q^n p^m to q^n p^(m-1), until a pure-period engine takes
/// over.
void run_general(std::vector<std::uint32_t>& w, const PrimeField& f, const PeriodShape& shape,
                 std::uint64_t& c, FactoredPolynomial& poly, AlgorithmTrace& trace,
                 std::uint32_t level) {
    if (shape.m == 0) {
        run_qn(w, f, c, poly, trace, level);
        return;
    }
    if (shape.n == 0) {
        run_pm(w, f, shape.p, shape.m, c, poly, trace, level);
        return;
    }
    if (all_zero(w)) {
        ++trace.loop_count;
        trace.log(level, Branch::ZeroExit);
        return;
    }

    // The reduced sequence is built from the pristine buffer before the
    // cyclotomic extraction mutates it.
    const std::size_t M = ipow(f.modulus(), shape.n - 1) * ipow(shape.p, shape.m - 1);
    std::vector<std::uint32_t> reduced = stride_q_reduction(w, M, f.modulus(), f);

    const std::uint64_t z = run_phi_part(w, f, shape.p, shape.m, shape.n, trace, level);
    if (z > 0) {
        poly.multiply_by(PolyFactor::cyclotomic(shape.p, shape.m), z);
        c += z * static_cast<std::uint64_t>(shape.p - 1) * ipow(shape.p, shape.m - 1);
    }

    PeriodShape sub = shape;
    --sub.m;
    sub.N /= shape.p;
    if (sub.m == 0) sub.p = 1;
    w = std::move(reduced);
    run_general(w, f, sub, c, poly, trace, level + 1);
}

LinearComplexityResult finish(const PrimeField& f, std::uint64_t c, FactoredPolynomial poly,
                              AlgorithmTrace trace) {
    Polynomial expanded = poly.is_one() ? Polynomial::one(f) : poly.expand_monic();
    if (poly.degree() != c || expanded.degree().value_or(0) != c) {
        throw InternalError("complexity/polynomial degree mismatch: c=" + std::to_string(c) +
                            " deg=" + std::to_string(poly.degree()));
    }
    return {c, std::move(poly), std::move(expanded), std::move(trace)};
}

} // namespace

PeriodicSequence::PeriodicSequence(PrimeField field, std::vector<std::uint32_t> symbols)
    : field_(field), symbols_(std::move(symbols)), shape_() {
    for (std::uint32_t s : symbols_) {
        if (s >= field_.modulus()) {
            throw UsageError("symbol " + std::to_string(s) + " is not canonical in GF(" +
                             std::to_string(field_.modulus()) + ")");
        }
    }
    shape_ = factor_period(symbols_.size(), field_.modulus());
}

PeriodicSequence::PeriodicSequence(PrimeField field, std::vector<std::uint32_t> symbols,
                                   PeriodShape shape, trusted_tag)
    : field_(field), symbols_(std::move(symbols)), shape_(shape) {}

PeriodicSequence PeriodicSequence::from_integers(PrimeField field,
                                                 std::span<const std::int64_t> values) {
    std::vector<std::uint32_t> symbols(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) symbols[i] = field.reduce(values[i]);
    return {field, std::move(symbols)};
}

PeriodicSequence PeriodicSequence::with_shape(PrimeField field, std::vector<std::uint32_t> symbols,
                                              const PeriodShape& shape) {
    if (symbols.size() != shape.N) {
        throw InternalError("symbol count " + std::to_string(symbols.size()) +
                            " does not match shape period " + std::to_string(shape.N));
    }
    return {field, std::move(symbols), shape, trusted_tag{}};
}

PeriodicSequence PeriodicSequence::rotated(std::size_t offset) const {
    std::vector<std::uint32_t> out(symbols_.size());
    const std::size_t n = symbols_.size();
    for (std::size_t i = 0; i < n; ++i) out[i] = symbols_[(i + offset) % n];
    return {field_, std::move(out), shape_, trusted_tag{}};
}

const char* to_string(AlgorithmTrace::Branch branch) {
    switch (branch) {
        case Branch::ZeroExit: return "zero-exit";
        case Branch::ScalarTerminal: return "scalar-terminal";
        case Branch::QSumZero: return "q-sum-zero";
        case Branch::QSumNonzero: return "q-sum-nonzero";
        case Branch::PhiDivisible: return "phi-divisible";
        case Branch::PhiNotDivisible: return "phi-not-divisible";
        case Branch::PhiExhausted: return "phi-exhausted";
        case Branch::BlocksEqual: return "blocks-equal";
        case Branch::BlocksUnequal: return "blocks-unequal";
    }
    return "?";
}

std::uint64_t loop_count_bound(const PeriodShape& shape) {
    return (static_cast<std::uint64_t>(shape.n) * (shape.q - 1) + 1) * (shape.m + 1);
}

BlockDecomposition split_blocks(std::span<const std::uint32_t> working, std::size_t block_len) {
    if (block_len == 0 || working.size() % block_len != 0) {
        throw InternalError("block length " + std::to_string(block_len) +
                            " does not divide working length " + std::to_string(working.size()));
    }
    return {working, block_len};
}

std::vector<std::uint32_t> column_sums(const BlockDecomposition& d, std::uint32_t p,
                                       const PrimeField& field) {
    if (p == 0 || d.block_count() != static_cast<std::size_t>(p) * field.modulus()) {
        throw InternalError("expected " + std::to_string(field.modulus()) + "*" +
                            std::to_string(p) + " blocks, got " + std::to_string(d.block_count()));
    }
    return stride_p_column_sums(d.data, d.block_len, p, field);
}

bool phi_divisibility_holds(const BlockDecomposition& d, std::uint32_t p,
                            const PrimeField& field) {
    return segments_all_equal(column_sums(d, p, field), d.block_len);
}

std::vector<std::uint32_t> prime_update(const BlockDecomposition& d, std::uint32_t p,
                                        const PrimeField& field) {
    if (!phi_divisibility_holds(d, p, field)) {
        throw UsageError("quotient update requires the divisibility test to hold");
    }
    std::vector<std::uint32_t> w(d.data.begin(), d.data.end());
    std::vector<std::uint32_t> colsum;
    quotient_update_inplace(w, d.block_len, p, field, colsum);
    return w;
}

PeriodicSequence b_sequence(const PeriodicSequence& s) {
    const PeriodShape& shape = s.shape();
    if (shape.n < 1 || shape.m < 1) {
        throw UsageError("reduced sequence requires a mixed period q^n p^m with n, m >= 1");
    }
    const std::size_t M =
        ipow(shape.q, shape.n - 1) * ipow(shape.p, shape.m - 1);
    std::vector<std::uint32_t> b = stride_q_reduction(s.symbols(), M, shape.q, s.field());
    PeriodShape sub = shape;
    --sub.m;
    sub.N /= shape.p;
    if (sub.m == 0) sub.p = 1;
    return PeriodicSequence::with_shape(s.field(), std::move(b), sub);
}

LinearComplexityResult lc_period_pm(const PeriodicSequence& s) {
    if (s.shape().n != 0) {
        throw UsageError("period must be a pure power of p (n = 0), got n = " +
                         std::to_string(s.shape().n));
    }
    std::vector<std::uint32_t> w = s.symbols();
    std::uint64_t c = 0;
    FactoredPolynomial poly(s.field());
    AlgorithmTrace trace;
    run_pm(w, s.field(), s.shape().p, s.shape().m, c, poly, trace, 0);
    return finish(s.field(), c, std::move(poly), std::move(trace));
}

LinearComplexityResult lc_period_qn(const PeriodicSequence& s) {
    if (s.shape().m != 0) {
        throw UsageError("period must be a pure power of q (m = 0), got m = " +
                         std::to_string(s.shape().m));
    }
    std::vector<std::uint32_t> w = s.symbols();
    std::uint64_t c = 0;
    FactoredPolynomial poly(s.field());
    AlgorithmTrace trace;
    run_qn(w, s.field(), c, poly, trace, 0);
    return finish(s.field(), c, std::move(poly), std::move(trace));
}

PhiPartResult phi_part(const PeriodicSequence& s) {
    const PeriodShape& shape = s.shape();
    if (shape.m < 1) throw UsageError("cyclotomic extraction requires m >= 1");
    std::vector<std::uint32_t> w = s.symbols();
    AlgorithmTrace trace;
    const std::uint64_t z = run_phi_part(w, s.field(), shape.p, shape.m, shape.n, trace, 0);
    PhiPartResult out{z, FactoredPolynomial(s.field()), 0, std::move(trace)};
    if (z > 0) {
        out.contribution.multiply_by(PolyFactor::cyclotomic(shape.p, shape.m), z);
        out.c_contrib = z * static_cast<std::uint64_t>(shape.p - 1) * ipow(shape.p, shape.m - 1);
    }
    return out;
}

LinearComplexityResult lc_general(const PeriodicSequence& s) {
    std::vector<std::uint32_t> w = s.symbols();
    std::uint64_t c = 0;
    FactoredPolynomial poly(s.field());
    AlgorithmTrace trace;
    run_general(w, s.field(), s.shape(), c, poly, trace, 0);
    return finish(s.field(), c, std::move(poly), std::move(trace));
}

} // namespace lcseq
