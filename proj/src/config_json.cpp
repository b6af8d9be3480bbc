#include "gup/config_json.hpp"

#include <fstream>

#include "gup/errors.hpp"

namespace gup {

namespace {

std::string kind_label(ModKind kind) {
    switch (kind) {
        case ModKind::KMM: return "kmm";
        case ModKind::Cosh: return "cosh";
        case ModKind::Quartic: return "quartic";
        case ModKind::EvenPolynomial: return "poly";
    }
    throw validation_error("unknown modification kind");
}

}  // namespace

nlohmann::json modification_to_json(const Modification& mod) {
    return {{"kind", kind_label(mod.kind)},
            {"beta", mod.beta},
            {"coefficients", mod.coefficients}};
}

Modification modification_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw validation_error("modification must be a JSON object");
    const std::string kind = j.value("kind", "kmm");
    const double beta = j.value("beta", 1.0);
    if (kind == "kmm") return Modification::kmm(beta);
    if (kind == "cosh") return Modification::cosh_type(beta);
    if (kind == "quartic") return Modification::quartic(beta);
    if (kind == "poly") {
        std::vector<double> coeff;
        if (j.contains("coefficients"))
            coeff = j.at("coefficients").get<std::vector<double>>();
        return Modification::even_polynomial(coeff);
    }
    throw validation_error("unknown modification kind: " + kind);
}

nlohmann::json run_config_to_json(const RunConfig& cfg) {
    return {{"modification", modification_to_json(cfg.modification)},
            {"lambda_grid", cfg.lambda_grid},
            {"gamma_grid", cfg.gamma_grid},
            {"states", cfg.states},
            {"modes", cfg.modes},
            {"seed", cfg.seed},
            {"units", cfg.units},
            {"out", cfg.output_path}};
}

RunConfig run_config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw validation_error("config must be a JSON object");
    RunConfig cfg;
    if (j.contains("modification"))
        cfg.modification = modification_from_json(j.at("modification"));
    cfg.lambda_grid = j.value("lambda_grid", cfg.lambda_grid);
    cfg.gamma_grid = j.value("gamma_grid", cfg.gamma_grid);
    cfg.states = j.value("states", cfg.states);
    cfg.modes = j.value("modes", cfg.modes);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.units = j.value("units", cfg.units);
    cfg.output_path = j.value("out", cfg.output_path);
    if (cfg.units != "nats" && cfg.units != "bits")
        throw validation_error("units must be \"nats\" or \"bits\"");
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw validation_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        file >> j;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("config parse error: ") + e.what());
    }
    return run_config_from_json(j);
}

std::vector<double> parse_gamma_grid(const std::string& spec) {
    const auto first = spec.find(':');
    const auto second = spec.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw validation_error("grid spec must look like lo:hi:count");
    double lo = 0.0, hi = 0.0;
    long count = 0;
    try {
        std::size_t used = 0;
        const std::string lo_s = spec.substr(0, first);
        const std::string hi_s = spec.substr(first + 1, second - first - 1);
        const std::string count_s = spec.substr(second + 1);
        lo = std::stod(lo_s, &used);
        if (used != lo_s.size())
            throw validation_error("trailing characters in grid spec");
        hi = std::stod(hi_s, &used);
        if (used != hi_s.size())
            throw validation_error("trailing characters in grid spec");
        count = std::stol(count_s, &used);
        if (used != count_s.size())
            throw validation_error("trailing characters in grid spec");
    } catch (const validation_error&) {
        throw;
    } catch (const std::exception&) {
        throw validation_error("malformed grid spec: " + spec);
    }
    if (count < 1) throw validation_error("grid count must be positive");
    if (count == 1) {
        if (lo != hi)
            throw validation_error("single-point grid needs lo == hi");
        return {lo};
    }
    std::vector<double> grid(count);
    for (long i = 0; i < count; ++i)
        grid[i] = lo + (hi - lo) * double(i) / double(count - 1);
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

}  // namespace gup
