#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "lcseq/field.hpp"

namespace lcseq {

// Exit codes shared by the subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;     // precondition / usage / parse failures
inline constexpr int kExitMismatch = 2;  // oracle verification failed

struct AnalyzeOptions {
    std::uint32_t q = 2;
    std::string input;
    bool verify = false;
    bool json = false;
};

int run_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::uint32_t q = 2;
    std::uint32_t p = 3;
    std::uint32_t n_lo = 1, n_hi = 1;
    std::uint32_t m_lo = 1, m_hi = 1;
    std::uint32_t trials = 3;
    bool with_bm = false;
    std::uint64_t seed = 1;
    std::uint64_t n_cap = 1u << 22;  // largest admissible period in the grid
};

/// Benchmark grid over (n, m); emits CSV rows
/// q,p,n,m,N,algo,mean_seconds,loop_count_max (seed recorded as a comment).
/// Verifies the loop-count bound on every row; a violation exits with
/// kExitMismatch.
int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

/// Uniform random first period of length N (test/benchmark helper).
std::vector<std::uint32_t> random_period(const PrimeField& field, std::uint64_t N,
                                         std::mt19937_64& rng);

} // namespace lcseq
