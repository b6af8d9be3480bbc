#pragma once

#include <string>
#include <vector>

#include "gup/sampler.hpp"
#include "gup/tradeoff.hpp"

namespace gup {

/// Shortest decimal form that parses back to the identical double
/// (to_chars round-trip guarantee); infinities and NaN come out as
/// "inf" / "-inf" / "nan".
std::string format_double(double v);

/// Header `lambda,u,delta_x,delta_p,bound_eq13`, one row per curve
/// point in the stored order.  The last column is the algebraic
/// variance bound of the curve's modification at the row's delta_p.
std::string tradeoff_csv(const TradeoffCurve& curve);

/// One row of the entropy table.  The gamma field is pre-formatted so
/// marker rows (the "->0" limit) can carry a non-numeric label.
struct EntropyRow {
    std::string gamma;
    double h_k_analytic = 0.0;
    double h_k_numeric = 0.0;
    double h_x_numeric = 0.0;
};

/// Header `gamma,h_k_analytic,h_k_numeric,h_x_numeric`; any warnings
/// are appended as trailing `#` comment lines.
std::string entropy_csv(const std::vector<EntropyRow>& rows,
                        const std::vector<std::string>& warnings = {});

/// Header `index,h_x,h_k,delta_x,delta_p,divergent_x`; the last column
/// holds `true`/`false` literals.
std::string scan_csv(const std::vector<ScanRecord>& records);

/// Write a string verbatim (binary mode, '\n' endings untouched).
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gup
