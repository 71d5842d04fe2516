#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "lcseq/fastlc.hpp"

namespace lcseq {

/// Read a sequence from a UTF-8 text file of integers separated by
/// whitespace or commas. Values are reduced mod q; the period is the token
/// count. Throws ParseError (with line number) on bad tokens, UsageError on
/// an empty or unreadable file, and whatever factor_period throws when the
/// length is not a supported period.
PeriodicSequence parse_sequence_file(const std::filesystem::path& path, const PrimeField& field);

/// Flat, serialization-ready summary of one analysis.
struct AnalysisReport {
    std::uint32_t q = 0;
    std::uint32_t p = 1;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint64_t N = 0;
    std::uint64_t linear_complexity = 0;
    std::vector<std::uint32_t> coefficients;  ///< monic minimal polynomial, ascending
    std::string text;                         ///< human-readable polynomial
    std::vector<std::pair<std::string, std::uint64_t>> factors;  ///< (label, exponent)
    std::uint64_t loop_count = 0;
    bool oracle_checked = false;
};

AnalysisReport make_report(const PeriodicSequence& s, const LinearComplexityResult& result,
                           bool oracle_checked);

std::string report_json(const AnalysisReport& report);
std::string report_text(const AnalysisReport& report);

} // namespace lcseq
