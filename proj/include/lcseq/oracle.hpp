#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcseq/fastlc.hpp"

namespace lcseq {

/// An LFSR: monic connection polynomial of degree c plus c seed symbols.
///
/// Recurrence orientation (shared by every oracle in this module):
/// for connection f = f_0 + f_1 x + ... + f_c x^c, the generated sequence
/// satisfies sum_{j=0..c} f_j * s_{t-j} = 0 for all t >= c, i.e.
/// s_t = -f_0^{-1} * sum_{j=1..c} f_j * s_{t-j}.
struct LfsrSpec {
    Polynomial connection;
    std::vector<std::uint32_t> initial_state;
};

/// Reference minimal polynomial straight from the defining formula:
/// f = (x^N - 1) / gcd(s^N(x), x^N - 1), monic, with c = deg f.
/// The factored form is recovered by exact division against the label
/// vocabulary (valid because the shape is certified). Trace empty.
LinearComplexityResult naive_minpoly(const PeriodicSequence& s);

/// Same computation for an arbitrary period (no shape requirement);
/// returns only (complexity, monic minimal polynomial).
std::pair<std::uint64_t, Polynomial> naive_minpoly_raw(const PrimeField& field,
                                                       std::span<const std::uint32_t> period);

struct BerlekampMasseyResult {
    std::uint64_t length = 0;   ///< shortest LFSR length L
    Polynomial connection;      ///< constant term 1, degree <= L
};

/// LFSR synthesis over GF(q). For a prefix of 2N symbols of an N-periodic
/// sequence, length equals the sequence's linear complexity.
BerlekampMasseyResult berlekamp_massey(const PrimeField& field,
                                       std::span<const std::uint32_t> prefix);

/// Run the register: emits the initial state followed by symbols produced
/// by the connection recurrence, `count` symbols in total.
std::vector<std::uint32_t> lfsr_regenerate(const LfsrSpec& spec, std::size_t count);

/// Cross-check a fast-path result against both oracles. Returns a
/// description of the first disagreement, or nullopt when everything
/// matches (complexity and monic polynomial vs the gcd oracle; complexity
/// vs Berlekamp-Massey over a 2N prefix).
std::optional<std::string> verify_result(const PeriodicSequence& s,
                                         const LinearComplexityResult& result);

} // namespace lcseq
