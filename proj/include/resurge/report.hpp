#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "resurge/borel_series.hpp"
#include "resurge/formal.hpp"
#include "resurge/models.hpp"
#include "resurge/newton.hpp"

namespace resurge {

using Json = nlohmann::json;

// Shared CLI knobs, recorded verbatim in every report for reproducibility.
struct GlobalOptions {
    unsigned precision = 256;
    long order = 60;
    std::string tol = "1e-10";
};

// ---------------------------------------------------------------------------
// serializers (exact values as "p/q" strings, floats as 30-digit strings)

Json to_json(const NewtonPolygon& np);
Json to_json(const Complex& z);
Json series_to_json(const PowerSeries<Rational>& f, long max_coeffs = -1);
Json series_to_json(const PowerSeries<Complex>& f, long max_coeffs = -1);
Json poles_to_json(const std::vector<PadePole>& poles);
Json to_json(const GevreyEstimate& g);
Json to_json(const StokesEstimate& s);

// ---------------------------------------------------------------------------
// pipelines behind the CLI subcommands; each returns the finished report

// operator analysis: either a k for the partition-function family or an
// operator in text form
Json run_analyze(const std::string& op_text, long k, const GlobalOptions& opt);

// quadrature vs truncated series vs resummation over a coupling grid
Json run_partition(long k, const std::vector<Rational>& lambdas, long j, const GlobalOptions& opt);

// Borel-Pade-Laplace on a coefficient file (one rational or "re im" per line)
Json run_resum(const std::string& coeffs_path, const std::string& direction, const std::string& z,
               const GlobalOptions& opt);

Json run_airy(const std::string& q_text, const GlobalOptions& opt);

} // namespace resurge
