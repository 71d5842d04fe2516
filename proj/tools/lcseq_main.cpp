#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lcseq/cli.hpp"

namespace {

/// "a..b" (or a bare "a") -> [a, b].
std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            std::uint32_t v = static_cast<std::uint32_t>(std::stoul(text));
            return {v, v};
        }
        return {static_cast<std::uint32_t>(std::stoul(text.substr(0, pos))),
                static_cast<std::uint32_t>(std::stoul(text.substr(pos + 2)))};
    } catch (const std::exception&) {
        throw lcseq::UsageError("invalid range '" + text + "' (expected a..b)");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear complexity and minimal polynomial of periodic sequences over GF(q)"};
    app.require_subcommand(1);

    lcseq::AnalyzeOptions analyze;
    auto* cmd_analyze = app.add_subcommand(
        "analyze", "compute the linear complexity of a sequence read from a file");
    cmd_analyze->add_option("--q", analyze.q, "prime field modulus")->required();
    cmd_analyze->add_option("--input", analyze.input, "path to the sequence file")->required();
    cmd_analyze->add_flag("--verify", analyze.verify,
                          "cross-check against the gcd and register-synthesis oracles");
    cmd_analyze->add_flag("--json", analyze.json, "emit the report as JSON");

    lcseq::BenchOptions bench;
    std::string n_range = "1..1";
    std::string m_range = "1..1";
    auto* cmd_bench =
        app.add_subcommand("bench", "time the analysis over a grid of periods q^n * p^m");
    cmd_bench->add_option("--q", bench.q, "prime field modulus")->required();
    cmd_bench->add_option("--p", bench.p, "cofactor prime")->required();
    cmd_bench->add_option("--n-range", n_range, "range a..b for the exponent of q")->required();
    cmd_bench->add_option("--m-range", m_range, "range a..b for the exponent of p")->required();
    cmd_bench->add_option("--trials", bench.trials, "random sequences per grid point");
    cmd_bench->add_flag("--with-bm", bench.with_bm, "also time register synthesis on a 2N prefix");
    cmd_bench->add_option("--seed", bench.seed, "random seed (recorded in the CSV)");
    cmd_bench->add_option("--n-cap", bench.n_cap, "largest admissible period in the grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? lcseq::kExitOk : lcseq::kExitUsage;
    }

    try {
        if (cmd_analyze->parsed()) {
            return lcseq::run_analyze(analyze, std::cout, std::cerr);
        }
        auto [n_lo, n_hi] = parse_range(n_range);
        auto [m_lo, m_hi] = parse_range(m_range);
        bench.n_lo = n_lo;
        bench.n_hi = n_hi;
        bench.m_lo = m_lo;
        bench.m_hi = m_hi;
        return lcseq::run_bench(bench, std::cout, std::cerr);
    } catch (const lcseq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lcseq::kExitUsage;
    }
}
