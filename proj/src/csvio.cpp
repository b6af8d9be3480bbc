#include "gup/csvio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "gup/errors.hpp"

namespace gup {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string tradeoff_csv(const TradeoffCurve& curve) {
    std::string out = "lambda,u,delta_x,delta_p,bound_eq13\n";
    for (const TradeoffPoint& pt : curve.points) {
        out += format_double(pt.lambda);
        out += ',';
        out += format_double(pt.u);
        out += ',';
        out += format_double(pt.delta_x);
        out += ',';
        out += format_double(pt.delta_p);
        out += ',';
        out += format_double(suboptimal_bound(curve.modification, pt.delta_p));
        out += '\n';
    }
    return out;
}

std::string entropy_csv(const std::vector<EntropyRow>& rows,
                        const std::vector<std::string>& warnings) {
    std::string out = "gamma,h_k_analytic,h_k_numeric,h_x_numeric\n";
    for (const EntropyRow& row : rows) {
        out += row.gamma;
        out += ',';
        out += format_double(row.h_k_analytic);
        out += ',';
        out += format_double(row.h_k_numeric);
        out += ',';
        out += format_double(row.h_x_numeric);
        out += '\n';
    }
    for (const std::string& w : warnings) {
        out += "# ";
        out += w;
        out += '\n';
    }
    return out;
}

std::string scan_csv(const std::vector<ScanRecord>& records) {
    std::string out = "index,h_x,h_k,delta_x,delta_p,divergent_x\n";
    for (const ScanRecord& rec : records) {
        out += std::to_string(rec.index);
        out += ',';
        out += format_double(rec.h_x);
        out += ',';
        out += format_double(rec.h_k);
        out += ',';
        out += format_double(rec.delta_x);
        out += ',';
        out += format_double(rec.delta_p);
        out += ',';
        out += rec.divergent_x ? "true" : "false";
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw validation_error("cannot open for writing: " + path);
    file.write(content.data(),
               static_cast<std::streamsize>(content.size()));
    if (!file) throw validation_error("write failed: " + path);
}

}  // namespace gup
