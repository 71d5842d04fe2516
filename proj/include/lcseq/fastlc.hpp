#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcseq/numtheory.hpp"
#include "lcseq/polynomial.hpp"

namespace lcseq {

/// One period of a sequence over GF(q) together with its certified shape
/// N = q^n * p^m. Construction runs factor_period, so holding a
/// PeriodicSequence implies every precondition of the fast algorithms.
class PeriodicSequence {
public:
    /// Certifies the shape; symbols must already be canonical residues.
    PeriodicSequence(PrimeField field, std::vector<std::uint32_t> symbols);

    /// Reduces arbitrary integers mod q, then certifies.
    static PeriodicSequence from_integers(PrimeField field, std::span<const std::int64_t> values);

    const PrimeField& field() const noexcept { return field_; }
    const std::vector<std::uint32_t>& symbols() const noexcept { return symbols_; }
    const PeriodShape& shape() const noexcept { return shape_; }

    /// Cyclic left rotation of the first period by `offset` positions.
    PeriodicSequence rotated(std::size_t offset) const;

    /// Internal: adopt an already-certified shape (used when deriving the
    /// reduced sequence of a certified parent). Validates length only.
    static PeriodicSequence with_shape(PrimeField field, std::vector<std::uint32_t> symbols,
                                       const PeriodShape& shape);

private:
    struct trusted_tag {};
    PeriodicSequence(PrimeField field, std::vector<std::uint32_t> symbols, PeriodShape shape,
                     trusted_tag);

    PrimeField field_;
    std::vector<std::uint32_t> symbols_;
    PeriodShape shape_;
};

/// Execution record of an analysis. loop_count counts block-split passes
/// over the working sequence (one per refinement level, plus the terminal
/// scalar or zero pass); this is the quantity the documented bounds cap:
/// at most [n(q-1)+1](m+1) for the general analysis.
struct AlgorithmTrace {
    enum class Branch : std::uint8_t {
        ZeroExit,          ///< working sequence all zero
        ScalarTerminal,    ///< length-1 working sequence, nonzero symbol
        QSumZero,          ///< q-block sum vanished; divided by 1 - x^M
        QSumNonzero,       ///< q-block sum nonzero; reduced to the sum
        PhiDivisible,      ///< column sums equal; divided by the Phi power
        PhiNotDivisible,   ///< column sums unequal; reduced to the sums
        PhiExhausted,      ///< Phi power divides fully at this level
        BlocksEqual,       ///< p blocks equal; recursed on the first block
        BlocksUnequal,     ///< p blocks unequal; reduced to the block sum
    };
    struct Record {
        std::uint32_t level;  ///< recursion depth (0 = input sequence)
        Branch branch;
    };

    std::uint64_t loop_count = 0;
    std::vector<Record> branch_log;

    void log(std::uint32_t level, Branch branch) { branch_log.push_back({level, branch}); }
};

const char* to_string(AlgorithmTrace::Branch branch);

/// Upper bound [n(q-1)+1](m+1) on loop_count for a given shape. With m = 0
/// this is the pure q^n bound n(q-1)+1; with n = 0 it degenerates to m+1.
std::uint64_t loop_count_bound(const PeriodShape& shape);

struct LinearComplexityResult {
    std::uint64_t complexity = 0;
    FactoredPolynomial min_poly;  ///< factored minimal polynomial
    Polynomial expanded;          ///< monic expanded form; degree == complexity
    AlgorithmTrace trace;
};

/// Contiguous, non-overlapping, order-preserving view of a working buffer
/// as blocks of equal length.
struct BlockDecomposition {
    std::span<const std::uint32_t> data;
    std::size_t block_len = 0;  ///< M

    std::size_t block_count() const noexcept { return block_len ? data.size() / block_len : 0; }
    std::span<const std::uint32_t> block(std::size_t i) const noexcept {
        return data.subspan(i * block_len, block_len);
    }
};

/// Throws InternalError when block_len does not divide the buffer length.
BlockDecomposition split_blocks(std::span<const std::uint32_t> working, std::size_t block_len);

/// Column sums at stride p: segment i (0-based) is the componentwise sum of
/// blocks i, p+i, 2p+i, ... across all q rows. Returns p segments of length
/// M concatenated. The decomposition must have exactly q*p blocks, q being
/// the field characteristic.
std::vector<std::uint32_t> column_sums(const BlockDecomposition& d, std::uint32_t p,
                                       const PrimeField& field);

/// True iff all p column sums are pairwise equal, i.e. the generating
/// polynomial of the buffer is divisible by 1 + x^M + ... + x^{(p-1)M}
/// (the relevant cyclotomic power).
bool phi_divisibility_holds(const BlockDecomposition& d, std::uint32_t p, const PrimeField& field);

/// Exact quotient of the buffer's generating polynomial by the cyclotomic
/// power 1 + x^M + ... + x^{(p-1)M}, returned block-aligned (q*p blocks of
/// length M). Precondition: phi_divisibility_holds; throws UsageError
/// otherwise. Single left-to-right pass with running column accumulators.
std::vector<std::uint32_t> prime_update(const BlockDecomposition& d, std::uint32_t p,
                                        const PrimeField& field);

/// The reduced sequence with period q^n * p^(m-1): block i (0-based, i < q)
/// of the result is the sum of blocks i, q+i, 2q+i, ... of s at the top
/// block length M = q^(n-1) p^(m-1). Note the stride is q here, not p.
/// Requires n >= 1 and m >= 1.
PeriodicSequence b_sequence(const PeriodicSequence& s);

/// Linear complexity for shapes with n = 0 (period p^m), by repeated
/// p-block splits. Throws UsageError on shape mismatch.
LinearComplexityResult lc_period_pm(const PeriodicSequence& s);

/// Linear complexity for shapes with m = 0 (period q^n), by q-block sums
/// and sequential prefix updates. Throws UsageError on shape mismatch.
LinearComplexityResult lc_period_qn(const PeriodicSequence& s);

/// The Phi_{p^m}-power part of the minimal polynomial: returns the exponent
/// z, the factored contribution Phi_{p^m}(x)^z, and its complexity
/// contribution (p-1) p^(m-1) z. Requires m >= 1.
struct PhiPartResult {
    std::uint64_t z = 0;
    FactoredPolynomial contribution;
    std::uint64_t c_contrib = 0;
    AlgorithmTrace trace;
};
PhiPartResult phi_part(const PeriodicSequence& s);

/// Full analysis for any certified shape: dispatches to the pure-period
/// procedures when n or m is zero, otherwise peels one Phi_{p^m} level and
/// recurses on the reduced sequence. The trace accumulates across levels.
LinearComplexityResult lc_general(const PeriodicSequence& s);

} // namespace lcseq
