#include "lcseq/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lcseq {

PeriodicSequence parse_sequence_file(const std::filesystem::path& path, const PrimeField& field) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file: " + path.string());

    std::vector<std::uint32_t> symbols;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (char& ch : line) {
            if (ch == ',') ch = ' ';
        }
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                throw ParseError("line " + std::to_string(lineno) + ": invalid token '" + tok +
                                 "' (expected an integer)");
            }
            symbols.push_back(field.reduce(value));
        }
    }
    if (symbols.empty()) throw UsageError("empty input: " + path.string() + " holds no symbols");
    return {field, std::move(symbols)};
}

AnalysisReport make_report(const PeriodicSequence& s, const LinearComplexityResult& result,
                           bool oracle_checked) {
    AnalysisReport rep;
    const PeriodShape& shape = s.shape();
    rep.q = shape.q;
    rep.p = shape.p;
    rep.n = shape.n;
    rep.m = shape.m;
    rep.N = shape.N;
    rep.linear_complexity = result.complexity;
    rep.coefficients = result.expanded.coeffs();
    rep.text = result.expanded.to_string();
    for (const auto& [factor, exponent] : result.min_poly.factors()) {
        rep.factors.emplace_back(factor.label(), exponent);
    }
    rep.loop_count = result.trace.loop_count;
    rep.oracle_checked = oracle_checked;
    return rep;
}

std::string report_json(const AnalysisReport& report) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [label, exponent] : report.factors) {
        factors.push_back({{"label", label}, {"exponent", exponent}});
    }
    nlohmann::json j{
        {"q", report.q},
        {"p", report.p},
        {"n", report.n},
        {"m", report.m},
        {"N", report.N},
        {"linear_complexity", report.linear_complexity},
        {"minimal_polynomial",
         {{"coefficients", report.coefficients}, {"text", report.text}, {"factors", factors}}},
        {"loop_count", report.loop_count},
        {"oracle_checked", report.oracle_checked},
    };
    return j.dump(2);
}

std::string report_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "field              GF(" << report.q << ")\n";
    out << "period             " << report.N << " = " << report.q << "^" << report.n;
    if (report.m > 0) out << " * " << report.p << "^" << report.m;
    out << "\n";
    out << "linear complexity  " << report.linear_complexity << "\n";
    out << "minimal polynomial " << report.text << "\n";
    out << "factors            ";
    if (report.factors.empty()) {
        out << "1";
    } else {
        bool first = true;
        for (const auto& [label, exponent] : report.factors) {
            if (!first) out << " * ";
            first = false;
            out << "(" << label << ")";
            if (exponent != 1) out << "^" << exponent;
        }
    }
    out << "\n";
    out << "loop count         " << report.loop_count << "\n";
    out << "oracle checked     " << (report.oracle_checked ? "yes" : "no");
    return out.str();
}

} // namespace lcseq
