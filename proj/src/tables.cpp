#include "edges/tables.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "edges/error.hpp"

namespace edges {

namespace {

void write_metadata(std::ostream& out, const Metadata& params)
{
    out << '#';
    for (const auto& [key, value] : params) {
        out << ' ' << key << '=' << value;
    }
    out << '\n';
}

double parse_double(const std::string& text, const char* context)
{
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first < last && (*first == ' ' || *first == '\t')) {
        ++first;
    }
    while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) {
        --last;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw PreconditionError(std::string(context) + ": cannot parse number '" + text + "'");
    }
    return v;
}

}  // namespace

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_factor(std::ostream& out, const ConcentrationFactor& factor)
{
    const FactorParams& p = factor.params();
    write_metadata(out, {{"family", std::string(to_string(factor.family()))},
                         {"N", std::to_string(factor.N())},
                         {"eta", format_number(p.eta)},
                         {"beta", format_number(p.beta)},
                         {"k0", format_number(p.k0)},
                         {"N0", std::to_string(p.N0)},
                         {"epsilon_reg", format_number(p.epsilon_reg)},
                         {"norm_constant", format_number(factor.norm_constant())}});
    out << "k,s_k\n";
    for (int k = 1; k <= factor.N(); ++k) {
        out << k << ',' << format_number(factor.value(k)) << '\n';
    }
}

FactorTable read_factor(std::istream& in)
{
    FactorTable table;
    std::string line;
    bool saw_columns = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::istringstream fields(line.substr(1));
            std::string field;
            while (fields >> field) {
                const auto eq = field.find('=');
                if (eq != std::string::npos) {
                    table.header[field.substr(0, eq)] = field.substr(eq + 1);
                }
            }
            continue;
        }
        if (!saw_columns) {
            if (line != "k,s_k") {
                throw PreconditionError("factor table: expected column header 'k,s_k'");
            }
            saw_columns = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw PreconditionError("factor table: malformed row '" + line + "'");
        }
        const double k = parse_double(line.substr(0, comma), "factor table");
        if (k != static_cast<double>(table.values.size() + 1)) {
            throw PreconditionError("factor table: rows must list k = 1..N in order");
        }
        table.values.push_back(parse_double(line.substr(comma + 1), "factor table"));
    }
    if (table.values.empty()) {
        throw PreconditionError("factor table: no rows");
    }
    return table;
}

void write_coefficients(std::ostream& out, const SpectralData& data)
{
    Metadata meta{{"N", std::to_string(data.N)}};
    if (data.noise_variance) {
        meta.emplace_back("noise_variance", format_number(*data.noise_variance));
    }
    if (data.seed) {
        meta.emplace_back("seed", std::to_string(*data.seed));
    }
    write_metadata(out, meta);
    out << "k,re,im\n";
    for (int k = -data.N; k <= data.N; ++k) {
        const cplx c = data.at(k);
        out << k << ',' << format_number(c.real()) << ',' << format_number(c.imag()) << '\n';
    }
}

void write_edges(std::ostream& out, const std::vector<Edge>& edges)
{
    out << "location,amplitude\n";
    for (const Edge& e : edges) {
        out << format_number(e.location) << ',' << format_number(e.amplitude) << '\n';
    }
}

void write_detection(std::ostream& out, const DetectionResult& result, const Metadata& params)
{
    Metadata meta = params;
    meta.emplace_back("epsilon_predicted", format_number(result.epsilon_predicted));
    meta.emplace_back("threshold", format_number(result.threshold_used));
    write_metadata(out, meta);
    out << "x,K\n";
    for (std::size_t i = 0; i < result.grid.size(); ++i) {
        out << format_number(result.grid[i]) << ',' << format_number(result.samples[i]) << '\n';
    }
    out << "# edges\n";
    write_edges(out, result.edges);
}

void write_monte_carlo(std::ostream& out, const MonteCarloSummary& summary, const Metadata& params)
{
    Metadata meta = params;
    meta.emplace_back("epsilon_predicted", format_number(summary.epsilon_predicted));
    meta.emplace_back("plateau_exclusion", format_number(summary.plateau_exclusion));
    meta.emplace_back("grid_spacing", format_number(summary.grid_spacing));
    write_metadata(out, meta);

    const std::size_t jumps = summary.amplitude_mean.size();
    out << "trial,seed";
    for (std::size_t j = 0; j < jumps; ++j) {
        out << ",K_jump" << j << ",K_jump" << j << "_std";
    }
    out << ",plateau_rms,plateau_max,edge_count,detected\n";
    for (const TrialRecord& t : summary.trials) {
        out << t.trial << ',' << t.seed;
        for (std::size_t j = 0; j < jumps; ++j) {
            out << ',' << format_number(t.jump_values[j]) << ",0";
        }
        out << ',' << format_number(t.plateau_rms) << ',' << format_number(t.plateau_max) << ','
            << t.edge_count << ',' << (t.detected ? 1 : 0) << '\n';
    }
    out << "aggregate," << summary.trials.size();
    for (std::size_t j = 0; j < jumps; ++j) {
        out << ',' << format_number(summary.amplitude_mean[j]) << ','
            << format_number(summary.amplitude_std[j]);
    }
    out << ',' << format_number(summary.plateau_rms) << ',' << format_number(summary.plateau_max)
        << ",," << format_number(summary.detection_rate) << '\n';
}

}  // namespace edges
