#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "edges/analysis.hpp"
#include "edges/concentration.hpp"
#include "edges/detector.hpp"
#include "edges/spectral_core.hpp"

namespace edges {

// Headered comma-separated tables. Metadata lines start with "# " and carry
// space-separated key=value pairs; numbers are written with 17 significant
// digits so doubles round-trip exactly.

using Metadata = std::vector<std::pair<std::string, std::string>>;

std::string format_number(double v);

/// "# family=... N=... eta=... beta=... k0=... N0=... epsilon_reg=... norm_constant=..."
/// then "k,s_k" rows.
void write_factor(std::ostream& out, const ConcentrationFactor& factor);

struct FactorTable {
    std::map<std::string, std::string> header;
    std::vector<double> values;  // s_1..s_N
};

/// Reads a table produced by write_factor (or any "k,s_k" table with k = 1..N
/// in order). Throws PreconditionError on malformed input.
FactorTable read_factor(std::istream& in);

/// "k,re,im" rows for k = -N..N.
void write_coefficients(std::ostream& out, const SpectralData& data);

/// Parameter header, "x,K" rows, then a "# edges" section with
/// "location,amplitude" rows.
void write_detection(std::ostream& out, const DetectionResult& result, const Metadata& params);

/// "location,amplitude" rows only.
void write_edges(std::ostream& out, const std::vector<Edge>& edges);

/// One row per trial plus a final "aggregate" row.
void write_monte_carlo(std::ostream& out, const MonteCarloSummary& summary, const Metadata& params);

}  // namespace edges
