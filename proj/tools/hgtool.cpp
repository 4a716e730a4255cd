#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

const char* kSubcommands[][2] = {
    {"verify", "check hypergroup axioms and Haar weights"},
    {"characters", "character table and Plancherel weights of a finite table"},
    {"norms", "A, B_lambda, MA and M_cb norms of seeded random functions"},
    {"amenability", "diagonal indicator, approximate diagonal and weak amenability"},
    {"deform", "chi_0 and the deformed hypergroup"},
    {"product", "product with a second hypergroup"},
    {"quantum", "fusion ring hypergroups, Kac check and the hat map"},
    {"p2", "(P2) classification"},
};

}  // namespace

int main(int argc, char** argv) {
    hgtool::RunConfig cfg;
    if (const char* env = std::getenv("HGROUP_TOL")) {
        try {
            cfg.tol = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "error: HGROUP_TOL is not a number\n";
            return 2;
        }
    }

    CLI::App app{"Discrete hypergroups: harmonic analysis and verification"};
    app.require_subcommand(1, 1);
    std::string format = "text";
    double q = cfg.spec.q;
    for (const auto& sc : kSubcommands) {
        CLI::App* sub = app.add_subcommand(sc[0], sc[1]);
        sub->add_option("--family", cfg.spec.family, "builtin family")
            ->check(CLI::IsMember(hgroup::family_names()));
        sub->add_option("--group", cfg.spec.group, "builtin group (s3, d4, q8, a4, klein, zN)");
        sub->add_option("--cayley", cfg.spec.cayley_path, "Cayley table file");
        sub->add_option("--q", q, "parameter of suq2_fusion and tree_radial");
        sub->add_option("--n", cfg.spec.n, "order of the cyclic group");
        sub->add_option("--radius", cfg.spec.radius, "truncation radius")->check(CLI::PositiveNumber);
        sub->add_option("--input", cfg.input, "hypergroup file");
        sub->add_option("--fusion", cfg.fusion, "fusion ring file (quantum)");
        sub->add_option("--with-group", cfg.second_group, "second factor as a group hypergroup (product)");
        sub->add_option("--with-input", cfg.second_input, "second factor file (product)");
        sub->add_option("--save", cfg.save, "write the product table here (product)");
        sub->add_option("--tol", cfg.tol, "tolerance (default from HGROUP_TOL or 1e-9)")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--samples", cfg.samples, "random samples")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--output", cfg.output, "also write the report to this file");
        sub->add_option("--jobs", cfg.jobs, "worker threads for sample sweeps")->check(CLI::PositiveNumber);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (!(cfg.tol > 0.0)) {
        std::cerr << "error: tolerance must be positive\n";
        return 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    CLI::App* sub = app.get_subcommands().front();
    cfg.spec.q = q;
    cfg.family_set = !cfg.spec.family.empty();
    if (!cfg.family_set && !cfg.spec.cayley_path.empty()) {
        cfg.spec.family = "group_from_cayley";
        cfg.family_set = true;
    }
    if (!cfg.family_set && cfg.subcommand == "quantum" && sub->count("--group")) {
        cfg.spec.family = "irr";
        cfg.family_set = true;
    }
    cfg.structured = format == "structured";

    hgroup::Report report(cfg.subcommand);
    try {
        hgtool::run_command(cfg, report);
    } catch (const hgroup::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return hgtool::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const std::string text = cfg.structured ? report.structured() : report.text();
    std::cout << text;
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) {
            std::cerr << "error: cannot write " << cfg.output << "\n";
            return 2;
        }
        out << text;
    }
    return report.failed() ? 1 : 0;
}
