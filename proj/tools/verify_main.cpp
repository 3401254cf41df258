#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hessk3/checks.hpp"

int main(int argc, char** argv) {
    hessk3::RunConfig cfg;
    cfg.suites.clear();

    CLI::App app{"exact verification suite for the Hessian-quartic K3 family"};
    app.add_option("--suite", cfg.suites,
                   "suite to run: all, theta, lattice, periods, invariants (repeatable)");
    app.add_option("--order", cfg.order, "truncation order for the theta suite");
    app.add_option("--seed", cfg.seed, "seed for the randomized checks");
    app.add_option("--samples", cfg.samples, "sample count for the randomized checks");
    app.add_option("--format", cfg.format, "output format: text or json");
    app.add_option("--emit-series", cfg.emit_series, "write canonical series dumps to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (cfg.suites.empty()) cfg.suites = {"all"};

    const std::string err = hessk3::validate_config(cfg);
    if (!err.empty()) {
        std::cerr << "error: " << err << "\n";
        return 2;
    }

    const hessk3::Report rep = hessk3::run_checks(cfg);
    if (cfg.format == "json")
        std::cout << hessk3::render_json(rep).dump(2) << "\n";
    else
        std::cout << hessk3::render_text(rep);

    if (!cfg.emit_series.empty()) {
        std::ofstream out(cfg.emit_series);
        if (!out) {
            std::cerr << "error: cannot open " << cfg.emit_series << "\n";
            return 2;
        }
        out << hessk3::series_dump(cfg.order).dump(2) << "\n";
    }
    return rep.any_fail() ? 1 : 0;
}
