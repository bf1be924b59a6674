// igusa: exact local ideal zeta functions of class-2-nilpotent Lie rings.
//
//   igusa compute --spec "g2,2"
//   igusa series  --spec "g1,1" --degree 6 --primes 2,3
//   igusa check   --check funeq --spec "f2,3"
//   igusa check   --check genigusa --spec "(2,1)"
//   igusa oracle  --spec "g1,1" --degree 4 --primes 2

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "igusa/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact ideal zeta functions of class-2-nilpotent Lie rings"};
    app.require_subcommand(1);

    igusa::cli::JobConfig cfg;
    std::string format = "plain";
    std::string primes;

    auto add_common = [&](CLI::App* sub, bool with_degree) {
        sub->add_option("--spec", cfg.spec,
                        "catalog spec (\"f2,3 x h2[f=2] x Z^1\"), composition, inline JSON, or "
                        "a .json file path")
            ->required();
        sub->add_option("--format", format, "plain | latex | json");
        sub->add_option("--out", cfg.out_file, "write output to a file instead of stdout");
        sub->add_option("--budget", cfg.budget, "enumeration budget override (also IGUSA_BUDGET)");
        sub->add_option("--threads", cfg.threads, "worker threads for oracle enumeration");
        if (with_degree) {
            sub->add_option("--degree", cfg.degree, "series truncation degree (<= 64)");
            sub->add_option("--primes", primes, "comma-separated primes for specialization");
        }
    };

    add_common(app.add_subcommand("compute", "print the zeta function of a spec"), false);
    add_common(app.add_subcommand("series", "expand the Dirichlet series"), true);
    auto* check = app.add_subcommand("check", "verify functional equations and identities");
    add_common(check, false);
    check->add_option("--check", cfg.check_kind, "funeq | genigusa | dwrho | match");
    add_common(app.add_subcommand("oracle", "compare engine coefficients with brute-force counts"),
               true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (format == "plain")
        cfg.format = igusa::cli::OutputFormat::Plain;
    else if (format == "latex")
        cfg.format = igusa::cli::OutputFormat::Latex;
    else if (format == "json")
        cfg.format = igusa::cli::OutputFormat::Json;
    else {
        std::cerr << "unknown format: " << format << "\n";
        return 2;
    }
    if (!primes.empty()) {
        std::stringstream ss(primes);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.primes.push_back(std::stoll(item));
    }

    auto res = igusa::cli::run_command(cfg);
    if (!res.error.empty()) std::cerr << res.error << "\n";
    // Reports (check, oracle) print even when they record failures; formulas
    // and series print only on success.
    if (res.exit_code == 0 || cfg.command == "oracle" || cfg.command == "check") {
        if (!cfg.out_file.empty()) {
            std::ofstream out(cfg.out_file);
            out << res.output;
        } else {
            std::cout << res.output;
        }
    }
    return res.exit_code;
}
