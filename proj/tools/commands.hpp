#pragma once

#include <cstdint>
#include <string>

#include "hgroup/builders.hpp"
#include "hgroup/errors.hpp"
#include "hgroup/report.hpp"

namespace hgtool {

struct RunConfig {
    std::string subcommand;
    hgroup::FamilySpec spec;
    bool family_set = false;
    std::string input;
    std::string fusion;
    std::string second_group;
    std::string second_input;
    std::string save;
    double tol = 1e-9;
    std::uint64_t seed = 20240611;
    int samples = 5;
    int jobs = 1;
    bool structured = false;
    std::string output;
};

/// Runs one subcommand and fills the report. Throws hgroup::Error on bad input.
void run_command(const RunConfig& cfg, hgroup::Report& report);

/// 2 for input errors, 1 for mathematical failures.
int exit_code_for(const hgroup::Error& e);

}  // namespace hgtool
