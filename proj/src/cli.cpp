#include "lcseq/cli.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "lcseq/io.hpp"
#include "lcseq/oracle.hpp"

namespace lcseq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t checked_period(std::uint32_t q, std::uint32_t n, std::uint32_t p, std::uint32_t m,
                             std::uint64_t cap) {
    long double approx = std::pow(static_cast<long double>(q), n) *
                         std::pow(static_cast<long double>(p), m);
    if (approx > static_cast<long double>(cap)) {
        throw UsageError("period " + std::to_string(q) + "^" + std::to_string(n) + " * " +
                         std::to_string(p) + "^" + std::to_string(m) + " exceeds the cap of " +
                         std::to_string(cap));
    }
    std::uint64_t N = 1;
    for (std::uint32_t i = 0; i < n; ++i) N *= q;
    for (std::uint32_t i = 0; i < m; ++i) N *= p;
    return N;
}

} // namespace

std::vector<std::uint32_t> random_period(const PrimeField& field, std::uint64_t N,
                                         std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
    std::vector<std::uint32_t> symbols(N);
    for (auto& s : symbols) s = dist(rng);
    return symbols;
}

int run_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const PrimeField field(options.q);
        const PeriodicSequence seq = parse_sequence_file(options.input, field);
        const LinearComplexityResult result = lc_general(seq);

        bool checked = false;
        if (options.verify) {
            if (auto mismatch = verify_result(seq, result)) {
                err << "verification mismatch: " << *mismatch << "\n";
                return kExitMismatch;
            }
            checked = true;
        }

        const AnalysisReport report = make_report(seq, result, checked);
        out << (options.json ? report_json(report) : report_text(report)) << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const PrimeField field(options.q);
        if (!is_prime(options.p)) {
            throw UsageError(std::to_string(options.p) + " is not prime");
        }
        if (options.n_lo > options.n_hi || options.m_lo > options.m_hi) {
            throw UsageError("empty benchmark range");
        }
        if (options.trials == 0) throw UsageError("trials must be positive");

        // Validate the whole grid (cap + shape preconditions) before timing.
        for (std::uint32_t n = options.n_lo; n <= options.n_hi; ++n) {
            for (std::uint32_t m = options.m_lo; m <= options.m_hi; ++m) {
                factor_period(checked_period(options.q, n, options.p, m, options.n_cap),
                              options.q);
            }
        }

        out << "# seed=" << options.seed << "\n";
        out << "q,p,n,m,N,algo,mean_seconds,loop_count_max\n";

        std::mt19937_64 rng(options.seed);
        for (std::uint32_t n = options.n_lo; n <= options.n_hi; ++n) {
            for (std::uint32_t m = options.m_lo; m <= options.m_hi; ++m) {
                const std::uint64_t N =
                    checked_period(options.q, n, options.p, m, options.n_cap);

                std::vector<PeriodicSequence> inputs;
                inputs.reserve(options.trials);
                for (std::uint32_t t = 0; t < options.trials; ++t) {
                    inputs.emplace_back(field, random_period(field, N, rng));
                }

                // Repeat short analyses until a sample is long enough to time.
                std::uint32_t reps = 1;
                {
                    auto t0 = Clock::now();
                    (void)lc_general(inputs[0]);
                    double pilot = seconds_since(t0);
                    if (pilot < 1e-3) {
                        reps = static_cast<std::uint32_t>(1e-3 / std::max(pilot, 1e-9)) + 1;
                    }
                }

                double fast_total = 0;
                std::uint64_t loop_max = 0;
                for (const PeriodicSequence& seq : inputs) {
                    auto t0 = Clock::now();
                    for (std::uint32_t r = 0; r < reps; ++r) {
                        const LinearComplexityResult res = lc_general(seq);
                        loop_max = std::max(loop_max, res.trace.loop_count);
                    }
                    fast_total += seconds_since(t0);
                }
                const double fast_mean = fast_total / options.trials / reps;

                const std::uint64_t bound = loop_count_bound(inputs[0].shape());
                if (loop_max > bound) {
                    err << "loop-count bound violated for N=" << N << ": " << loop_max << " > "
                        << bound << "\n";
                    return kExitMismatch;
                }

                out << options.q << "," << options.p << "," << n << "," << m << "," << N
                    << ",lc_general," << fast_mean << "," << loop_max << "\n";

                if (options.with_bm) {
                    double bm_total = 0;
                    for (const PeriodicSequence& seq : inputs) {
                        std::vector<std::uint32_t> prefix(seq.symbols());
                        prefix.insert(prefix.end(), seq.symbols().begin(), seq.symbols().end());
                        auto t0 = Clock::now();
                        (void)berlekamp_massey(field, prefix);
                        bm_total += seconds_since(t0);
                    }
                    // A synthesis pass visits each of the 2N prefix symbols once.
                    out << options.q << "," << options.p << "," << n << "," << m << "," << N
                        << ",berlekamp_massey," << bm_total / options.trials << "," << 2 * N
                        << "\n";
                }
            }
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace lcseq
