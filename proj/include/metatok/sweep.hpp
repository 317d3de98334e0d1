#pragma once

#include "metatok/verify.hpp"

#include <functional>
#include <istream>
#include <string>
#include <vector>

namespace metatok {

enum class Statement { Main, Tokuyama, Classic, MN, F, Longword, Branching, Gauss };

Statement parse_statement(const std::string& name);
std::string statement_name(Statement s);
// "main,MN" or "all"
std::vector<Statement> parse_statement_list(const std::string& text);

struct SweepConfig {
    std::vector<Statement> statements{Statement::Main};
    int r_min = 1;
    int r_max = 2;
    int n_min = 1;
    int n_max = 2;
    int lambda_max = 2;
    std::string format = "text";
    // 0 means all available cores.
    int jobs = 0;
    unsigned long long seed = 1;
    // Random inputs per longword instance.
    int samples = 20;
    FaultInjection fault;

    // Throws InvalidArgument.
    void validate() const;
};

// Reads key=value lines (statement, r, n, lambda_max, format, jobs, seed, samples) over base.
SweepConfig parse_config_text(std::istream& in, SweepConfig base = {});

// "2" or "1..3"
std::pair<int, int> parse_range(const std::string& text);

struct SweepTask {
    std::string key;
    std::function<std::vector<CheckReport>()> run;
};

// Independent units of work in parameter order. With shared_tables the main
// statement computes one T_u table per (lambda, n) for every w_length.
std::vector<SweepTask> plan_sweep(const SweepConfig& cfg, bool shared_tables = true);

// OpenMP over tasks; reports come back in plan order whatever the schedule.
std::vector<CheckReport> run_sweep(const SweepConfig& cfg);

// One thread, and check_main recomputed per w_length.
std::vector<CheckReport> run_sweep_serial(const SweepConfig& cfg);

// Smallest prime p with p = 1 mod 2n.
int default_prime(int n);

} // namespace metatok
