#include "metatok/sweep.hpp"

#include "metatok/errors.hpp"
#include "metatok/weyl.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <tuple>

namespace metatok {

namespace {

const std::vector<std::pair<Statement, std::string>>& statement_names() {
    static const std::vector<std::pair<Statement, std::string>> names{
        {Statement::Main, "main"},         {Statement::Tokuyama, "tokuyama"}, {Statement::Classic, "classic"},
        {Statement::MN, "MN"},             {Statement::F, "F"},               {Statement::Longword, "longword"},
        {Statement::Branching, "branching"}, {Statement::Gauss, "gauss"}};
    return names;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int to_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw InvalidArgument("not an integer: " + s);
    }
    if (pos != s.size()) throw InvalidArgument("not an integer: " + s);
    return v;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Wraps a single report so every task has the same shape.
template <class F>
SweepTask single(std::string key, F f) {
    return SweepTask{std::move(key), [f] { return std::vector<CheckReport>{f()}; }};
}

std::string weight_key(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

// A thrown error becomes a failing report rather than escaping a parallel region.
std::vector<CheckReport> run_task(const SweepTask& t) {
    try {
        return t.run();
    } catch (const std::exception& e) {
        CheckReport rep;
        rep.statement = t.key;
        rep.params = nlohmann::json::object();
        rep.pass = false;
        rep.detail = std::string("exception: ") + e.what();
        return {rep};
    }
}

} // namespace

Statement parse_statement(const std::string& name) {
    for (const auto& [s, n] : statement_names())
        if (n == name) return s;
    throw InvalidArgument("unknown statement: " + name);
}

std::string statement_name(Statement s) {
    for (const auto& [st, n] : statement_names())
        if (st == s) return n;
    return "";
}

void SweepConfig::validate() const {
    if (statements.empty()) throw InvalidArgument("no statement selected");
    if (r_min < 1 || r_max < r_min) throw InvalidArgument("r range must be non-empty with r >= 1");
    if (n_min < 1 || n_max < n_min) throw InvalidArgument("n range must be non-empty with n >= 1");
    if (lambda_max < 0) throw InvalidArgument("lambda_max must be non-negative");
    if (format != "text" && format != "json") throw InvalidArgument("format must be text or json");
    if (jobs < 0) throw InvalidArgument("jobs must be non-negative");
    if (samples < 1) throw InvalidArgument("samples must be positive");
}

std::vector<Statement> parse_statement_list(const std::string& text) {
    std::vector<Statement> out;
    if (text == "all") {
        for (const auto& [s, name] : statement_names()) out.push_back(s);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_statement(trim(item)));
    if (out.empty()) throw InvalidArgument("no statement selected");
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const std::string t = trim(text);
    const auto dots = t.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(t);
        return {v, v};
    }
    const int lo = to_int(trim(t.substr(0, dots)));
    const int hi = to_int(trim(t.substr(dots + 2)));
    if (lo > hi) throw InvalidArgument("empty range " + t);
    return {lo, hi};
}

SweepConfig parse_config_text(std::istream& in, SweepConfig cfg) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "statement") {
            cfg.statements = parse_statement_list(value);
        } else if (key == "r") {
            std::tie(cfg.r_min, cfg.r_max) = parse_range(value);
        } else if (key == "n") {
            std::tie(cfg.n_min, cfg.n_max) = parse_range(value);
        } else if (key == "lambda_max") {
            cfg.lambda_max = to_int(value);
        } else if (key == "format") {
            cfg.format = value;
        } else if (key == "jobs") {
            cfg.jobs = to_int(value);
        } else if (key == "seed") {
            cfg.seed = static_cast<unsigned long long>(to_int(value));
        } else if (key == "samples") {
            cfg.samples = to_int(value);
        } else {
            throw InvalidArgument("config line " + std::to_string(line_no) + ": unknown key " + key);
        }
    }
    cfg.validate();
    return cfg;
}

int default_prime(int n) {
    for (int p = 2 * n + 1;; p += 2 * n)
        if (is_prime(p)) return p;
}

std::vector<SweepTask> plan_sweep(const SweepConfig& cfg, bool shared_tables) {
    cfg.validate();
    std::vector<SweepTask> tasks;
    const FaultInjection fault = cfg.fault;
    for (Statement st : cfg.statements) {
        const std::string name = statement_name(st);
        switch (st) {
        case Statement::Main:
            for (int r = cfg.r_min; r <= cfg.r_max; ++r)
                for (int n = cfg.n_min; n <= cfg.n_max; ++n)
                    for (const Weight& lam : dominant_weights(r, cfg.lambda_max)) {
                        const std::string key = name + " lambda=" + weight_key(lam) + " n=" + std::to_string(n);
                        if (shared_tables) {
                            tasks.push_back({key, [lam, n, fault] { return check_main_all_lengths(lam, n, fault); }});
                        } else {
                            tasks.push_back({key, [lam, n, r, fault] {
                                                 std::vector<CheckReport> out;
                                                 for (int l = 0; l <= binomial2(r + 1); ++l)
                                                     out.push_back(check_main(lam, l, n, fault));
                                                 return out;
                                             }});
                        }
                    }
            break;
        case Statement::Tokuyama:
            for (int r = cfg.r_min; r <= cfg.r_max; ++r)
                for (int n = cfg.n_min; n <= cfg.n_max; ++n)
                    for (const Weight& lam : dominant_weights(r, cfg.lambda_max))
                        tasks.push_back(single(name + " lambda=" + weight_key(lam) + " n=" + std::to_string(n),
                                               [lam, n] { return check_tokuyama(lam, n); }));
            break;
        case Statement::Classic:
            for (int r = cfg.r_min; r <= cfg.r_max; ++r)
                for (const Weight& lam : dominant_weights(r, cfg.lambda_max))
                    tasks.push_back(single(name + " lambda=" + weight_key(lam), [lam] { return check_classic_tokuyama(lam); }));
            break;
        case Statement::MN:
            // Entries down to -1 exercise the effectivity shift.
            for (int r = cfg.r_min; r <= cfg.r_max; ++r)
                for (int k = 0; k < r; ++k)
                    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
                        for (const Weight& lam : dominant_weights(r, cfg.lambda_max, -1))
                            for (MNKind kind : {MNKind::M, MNKind::N})
                                tasks.push_back(single(std::string(kind == MNKind::M ? "M" : "N") + " k=" + std::to_string(k) +
                                                          " lambda=" + weight_key(lam) + " n=" + std::to_string(n),
                                                      [kind, k, lam, n] { return check_MN(kind, k, lam, n); }));
            break;
        case Statement::F:
            for (int r = std::max(cfg.r_min, 2); r <= cfg.r_max; ++r)
                for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
                    for (const Weight& mu : dominant_weights(r - 1, cfg.lambda_max))
                        for (int a = 1; a <= 2 * n + 1; ++a)
                            tasks.push_back(single(name + " mu=" + weight_key(mu) + " a=" + std::to_string(a) + " n=" + std::to_string(n),
                                                   [mu, a, n] { return check_F(mu, a, n); }));
                    const int g_lo = r == 2 ? 0 : 1;
                    const int g_hi = r == 2 ? 0 : std::max(1, cfg.lambda_max);
                    for (int a : {n, 2 * n})
                        for (int lam2 = 0; lam2 <= cfg.lambda_max; ++lam2)
                            for (int lam3 = 0; lam3 <= lam2; ++lam3)
                                for (int g13 = g_lo; g13 <= g_hi; ++g13)
                                    tasks.push_back(single("f a=" + std::to_string(a) + " gamma13=" + std::to_string(g13) + " lambda=" +
                                                               weight_key({lam2, lam3}) + " n=" + std::to_string(n) + " r=" + std::to_string(r),
                                                           [a, g13, lam2, lam3, n, r] {
                                        return check_little_f(a, g13, lam2, lam3, n, r);
                                    }));
                }
            break;
        case Statement::Longword:
            for (int r = cfg.r_min; r <= cfg.r_max; ++r)
                for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
                    const unsigned long long seed = cfg.seed * 1000003ULL + static_cast<unsigned long long>(r * 31 + n);
                    const int samples = cfg.samples;
                    tasks.push_back(single(name + " r=" + std::to_string(r) + " n=" + std::to_string(n), [r, n, samples, seed] {
                        return check_longword_formulas(r, n, samples, seed);
                    }));
                }
            break;
        case Statement::Branching:
            for (int r = cfg.r_min; r <= cfg.r_max; ++r)
                for (int n = cfg.n_min; n <= cfg.n_max; ++n)
                    for (const Weight& lam : dominant_weights(r, cfg.lambda_max))
                        tasks.push_back(single(name + " lambda=" + weight_key(lam) + " n=" + std::to_string(n),
                                               [lam, n] { return check_branching(lam, n); }));
            break;
        case Statement::Gauss:
            for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
                const int p = default_prime(n);
                tasks.push_back(single(name + " n=" + std::to_string(n), [p, n] { return check_gauss(p, n); }));
            }
            break;
        }
    }
    return tasks;
}

std::vector<CheckReport> run_sweep(const SweepConfig& cfg) {
    const std::vector<SweepTask> tasks = plan_sweep(cfg, true);
    std::vector<std::vector<CheckReport>> results(tasks.size());
    const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
    const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = run_task(tasks[static_cast<std::size_t>(i)]);
    std::vector<CheckReport> out;
    for (auto& batch : results)
        for (auto& rep : batch) out.push_back(std::move(rep));
    return out;
}

std::vector<CheckReport> run_sweep_serial(const SweepConfig& cfg) {
    std::vector<CheckReport> out;
    for (const SweepTask& t : plan_sweep(cfg, false))
        for (auto& rep : run_task(t)) out.push_back(std::move(rep));
    return out;
}

} // namespace metatok
