// gup: uncertainty relations for modified commutation relations.
//
// Subcommands compute the momentum cut-off, the variance trade-off
// curve, the entropic region data, the three minimal-length notions,
// and the random-state region scan, writing byte-stable CSV/JSON.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gup/config_json.hpp"
#include "gup/csvio.hpp"
#include "gup/entropy.hpp"
#include "gup/errors.hpp"
#include "gup/modification.hpp"
#include "gup/momentum_map.hpp"
#include "gup/sampler.hpp"
#include "gup/tradeoff.hpp"

namespace {

constexpr double kLog2 = 0.693147180559945309417232121458;

struct Flags {
    std::string mod;
    double beta = 1.0;
    std::vector<double> coeff;
    int lambda_grid = 64;
    std::string gamma_grid;
    int states = 10000;
    int modes = 12;
    std::uint64_t seed = 42;
    std::string units;
    std::string out;
    std::string config;
};

void add_common_options(CLI::App* cmd, Flags& fl) {
    cmd->add_option("--mod", fl.mod, "modification family")
        ->check(CLI::IsMember({"kmm", "cosh", "quartic", "poly"}));
    cmd->add_option("--beta", fl.beta, "deformation strength");
    cmd->add_option("--coeff", fl.coeff,
                    "even-polynomial coefficients a_1 a_2 ... (of p^2, p^4, ...)");
    cmd->add_option("--lambda-grid", fl.lambda_grid,
                    "number of lambda points on the trade-off curve");
    cmd->add_option("--gamma-grid", fl.gamma_grid,
                    "gamma grid as lo:hi:count");
    cmd->add_option("--states", fl.states, "number of random states to scan");
    cmd->add_option("--modes", fl.modes, "modes per random state");
    cmd->add_option("--seed", fl.seed, "scan seed");
    cmd->add_option("--units", fl.units, "entropy units")
        ->check(CLI::IsMember({"nats", "bits"}));
    cmd->add_option("--out", fl.out, "output path");
    cmd->add_option("--config", fl.config, "JSON config file (flags override)");
}

gup::RunConfig assemble_config(const CLI::App* cmd, const Flags& fl) {
    gup::RunConfig cfg;
    if (cmd->count("--config") > 0) cfg = gup::load_run_config(fl.config);
    // Flags override config-file values field by field.
    nlohmann::json mj = gup::modification_to_json(cfg.modification);
    if (cmd->count("--mod") > 0) mj["kind"] = fl.mod;
    if (cmd->count("--beta") > 0) mj["beta"] = fl.beta;
    if (cmd->count("--coeff") > 0) mj["coefficients"] = fl.coeff;
    cfg.modification = gup::modification_from_json(mj);
    if (cmd->count("--lambda-grid") > 0) cfg.lambda_grid = fl.lambda_grid;
    if (cmd->count("--gamma-grid") > 0) cfg.gamma_grid = fl.gamma_grid;
    if (cmd->count("--states") > 0) cfg.states = fl.states;
    if (cmd->count("--modes") > 0) cfg.modes = fl.modes;
    if (cmd->count("--seed") > 0) cfg.seed = fl.seed;
    if (cmd->count("--units") > 0) cfg.units = fl.units;
    if (cmd->count("--out") > 0) cfg.output_path = fl.out;
    return cfg;
}

double in_units(double nats, const gup::RunConfig& cfg) {
    return cfg.units == "bits" ? nats / kLog2 : nats;
}

int cmd_validate(const gup::RunConfig& cfg) {
    const gup::ValidationReport report =
        gup::validate_modification(cfg.modification);
    std::cout << "modification: " << cfg.modification.kind_name()
              << " (beta = " << gup::format_double(cfg.modification.beta)
              << ")\n";
    for (const gup::AssumptionCheck& check : report.checks) {
        std::cout << (check.passed ? "  pass  " : "  FAIL  ")
                  << check.assumption;
        if (!check.passed) {
            std::cout << " (at p = " << gup::format_double(check.witness_p);
            if (!check.note.empty()) std::cout << "; " << check.note;
            std::cout << ")";
        }
        std::cout << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

/// All commands except `validate` refuse inadmissible modifications.
void require_admissible(const gup::RunConfig& cfg) {
    const gup::ValidationReport report =
        gup::validate_modification(cfg.modification);
    if (report.all_passed()) return;
    for (const gup::AssumptionCheck& check : report.checks)
        if (!check.passed)
            std::cerr << "inadmissible modification: " << check.assumption
                      << " fails at p = "
                      << gup::format_double(check.witness_p) << "\n";
    std::exit(1);
}

int cmd_kmax(const gup::RunConfig& cfg) {
    const double k = gup::compute_kmax(cfg.modification);
    std::cout << (std::isinf(k) ? std::string("inf") : gup::format_double(k))
              << "\n";
    return 0;
}

int cmd_tradeoff(const gup::RunConfig& cfg) {
    const gup::MomentumMap map = gup::build_momentum_map(cfg.modification);
    if (!map.has_cutoff())
        throw gup::domain_error(
            "trade-off curve requires a finite momentum cut-off");
    const auto lambdas = gup::chebyshev_lambda_grid(cfg.lambda_grid);
    const gup::TradeoffCurve curve = gup::sweep_tradeoff(map, lambdas);
    const std::string path =
        cfg.output_path.empty() ? "tradeoff.csv" : cfg.output_path;
    gup::write_text_file(path, gup::tradeoff_csv(curve));
    std::cout << "wrote " << path << " (" << curve.points.size()
              << " rows)\n";
    return 0;
}

int cmd_entropy(const gup::RunConfig& cfg) {
    const gup::MomentumMap map = gup::build_momentum_map(cfg.modification);
    std::vector<gup::EntropyRow> rows;
    std::vector<std::string> warnings;
    const double beta = cfg.modification.beta;
    if (cfg.modification.kind == gup::ModKind::KMM) {
        auto add_row = [&](const std::string& label, double gamma) {
            gup::EntropyRow row;
            row.gamma = label;
            row.h_k_analytic = in_units(
                gamma > 0.0 ? gup::analytic_hk(beta, gamma)
                            : std::log(2.0 * map.k_max),
                cfg);
            row.h_k_numeric =
                in_units(gup::family_hk_numeric(beta, gamma), cfg);
            row.h_x_numeric = in_units(gup::family_hx(beta, gamma), cfg);
            rows.push_back(row);
        };
        for (double gamma : gup::parse_gamma_grid(cfg.gamma_grid))
            add_row(gup::format_double(gamma), gamma);
        // Marker rows for the distinguished points.  The gamma -> 0
        // limit is listed at the resolution gamma = 0.01: the position
        // entropy approaches its flat-state limit with a near-vertical
        // slope ~ log^2(gamma), and the conventionally reported value
        // belongs to this small-gamma regime.
        add_row("1", 1.0);
        add_row("0.5", 0.5);
        add_row("->0", 0.01);
    } else {
        warnings.push_back(
            "analytic entropy family is specific to the kmm modification; "
            "emitting bounds only");
    }
    const gup::EntropicBounds bounds = gup::entropic_bounds(map);
    if (bounds.finite) {
        warnings.push_back("h_k ceiling log(2 k_max) = " +
                           gup::format_double(in_units(bounds.h_p_max, cfg)));
        warnings.push_back("h_x floor 1 - log(2 k_max / pi) = " +
                           gup::format_double(in_units(bounds.h_x_lower, cfg)));
    } else {
        warnings.push_back("no finite cut-off: entropies are unbounded");
    }
    const std::string path =
        cfg.output_path.empty() ? "entropy.csv" : cfg.output_path;
    gup::write_text_file(path, gup::entropy_csv(rows, warnings));
    std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";
    return 0;
}

int cmd_minlength(const gup::RunConfig& cfg) {
    const gup::MomentumMap map = gup::build_momentum_map(cfg.modification);
    nlohmann::json out;
    auto entry = [&](std::optional<double> value, const char* provenance,
                     bool entropic) {
        nlohmann::json e;
        if (value) {
            e["value"] = entropic ? in_units(*value, cfg) : *value;
            e["provenance"] = provenance;
        } else {
            e["value"] = nullptr;
            e["provenance"] = "none";
        }
        return e;
    };
    out["variance"] =
        entry(gup::minimal_length_variance(map), "ANALYTIC", false);
    std::optional<double> shannon;
    if (cfg.modification.kind == gup::ModKind::KMM && map.has_cutoff())
        shannon = gup::shannon_minlength_estimate(
                      map, gup::parse_gamma_grid(cfg.gamma_grid))
                      .h_x_min;
    out["shannon_conjectured"] = entry(shannon, "CONJECTURED", true);
    out["min_entropy"] =
        entry(gup::min_entropy_minlength(map), "ANALYTIC", true);
    out["units"] = cfg.units;
    const std::string text = out.dump(2) + "\n";
    std::cout << text;
    if (!cfg.output_path.empty())
        gup::write_text_file(cfg.output_path, text);
    return 0;
}

int cmd_scan(const gup::RunConfig& cfg) {
    const gup::MomentumMap map = gup::build_momentum_map(cfg.modification);
    gup::ScanConfig scan_cfg;
    scan_cfg.map = map;
    scan_cfg.state_count = cfg.states;
    scan_cfg.mode_count = cfg.modes;
    scan_cfg.seed = cfg.seed;
    std::vector<gup::ScanRecord> records = gup::scan(scan_cfg);
    const gup::RegionReport report = gup::region_report(records, map);
    if (cfg.units == "bits")
        for (gup::ScanRecord& rec : records) {
            rec.h_x /= kLog2;
            rec.h_k /= kLog2;
        }
    const std::string path =
        cfg.output_path.empty() ? "scan.csv" : cfg.output_path;
    gup::write_text_file(path, gup::scan_csv(records));

    nlohmann::json sidecar;
    sidecar["config"] = gup::run_config_to_json(cfg);
    nlohmann::json rj;
    rj["bb"] = report.bb;
    rj["boundary"] = report.boundary;
    rj["ceiling"] = report.ceiling;
    rj["curve_dominance"] = report.curve_dominance;
    rj["divergent_fraction"] = report.divergent_fraction;
    rj["heisenberg"] = report.heisenberg;
    rj["suboptimal"] = report.suboptimal;
    rj["hull"] = report.hull;
    sidecar["region_report"] = rj;
    gup::write_text_file(path + ".json", sidecar.dump(2) + "\n");
    std::cout << "wrote " << path << " and " << path << ".json ("
              << records.size() << " states)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "uncertainty relations for modified commutators: cut-offs, "
        "trade-off curves, entropic regions, minimal lengths"};
    app.require_subcommand(1);
    Flags fl;
    add_common_options(
        app.add_subcommand("validate", "check the admissibility assumptions"),
        fl);
    add_common_options(
        app.add_subcommand("kmax", "print the momentum cut-off"), fl);
    add_common_options(
        app.add_subcommand("tradeoff", "variance trade-off curve CSV"), fl);
    add_common_options(
        app.add_subcommand("entropy", "entropic-region table CSV"), fl);
    add_common_options(
        app.add_subcommand("minlength", "the three minimal lengths as JSON"),
        fl);
    add_common_options(
        app.add_subcommand("scan", "random-state scan CSV + region report"),
        fl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    const CLI::App* cmd = app.get_subcommands().front();
    try {
        const gup::RunConfig cfg = assemble_config(cmd, fl);
        const std::string name = cmd->get_name();
        if (name == "validate") return cmd_validate(cfg);
        require_admissible(cfg);
        if (name == "kmax") return cmd_kmax(cfg);
        if (name == "tradeoff") return cmd_tradeoff(cfg);
        if (name == "entropy") return cmd_entropy(cfg);
        if (name == "minlength") return cmd_minlength(cfg);
        if (name == "scan") return cmd_scan(cfg);
        std::cerr << "unknown command: " << name << "\n";
        return 3;
    } catch (const gup::accuracy_error& e) {
        std::cerr << "accuracy failure: " << e.what() << "\n";
        return 2;
    } catch (const gup::solver_error& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
