#include "metatok/cli.hpp"

#include "metatok/coefficients.hpp"
#include "metatok/crystal.hpp"
#include "metatok/errors.hpp"
#include "metatok/gauss.hpp"
#include "metatok/operators.hpp"
#include "metatok/sweep.hpp"
#include "metatok/weyl.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace metatok {

namespace {

constexpr int exit_pass = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

Weight parse_weight(const std::string& text) {
    Weight w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw InvalidArgument("bad weight entry '" + item + "'");
        }
        if (pos != item.size()) throw InvalidArgument("bad weight entry '" + item + "'");
        w.push_back(v);
    }
    if (w.empty()) throw InvalidArgument("empty weight");
    return w;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string decor_code(Decor d) {
    switch (d) {
    case Decor::Undecorated: return "u";
    case Decor::Circled: return "c";
    case Decor::Boxed: return "b";
    case Decor::CircledBoxed: return "cb";
    }
    return "?";
}

std::string fixed12(double x) {
    if (std::abs(x) < 5e-13) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

std::string render_complex(std::complex<double> z) {
    if (std::abs(z.imag()) < 5e-13) return fixed12(z.real());
    const std::string im = fixed12(z.imag());
    return fixed12(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

void check_format(const std::string& format) {
    if (format != "text" && format != "json") throw InvalidArgument("format must be text or json");
}

int cmd_crystal(const std::string& top_text, int n, std::optional<int> w_length, const std::string& format,
                std::ostream& out) {
    check_format(format);
    if (n < 1) throw InvalidArgument("n must be positive");
    const Weight top = parse_weight(top_text);
    const int r = static_cast<int>(top.size()) - 1;
    std::vector<GTPattern> vertices;
    if (w_length) {
        if (*w_length < 0 || *w_length > binomial2(r + 1)) throw InvalidArgument("w-length out of range");
        vertices = demazure_members(top, *w_length);
    } else {
        vertices = enumerate_patterns(top);
    }
    for (const auto& p : vertices) {
        const ScalarPoly c = gt_coefficient(p, n);
        if (format == "json") {
            nlohmann::json j = pattern_json(p);
            j["coefficient"] = c.to_string();
            out << j.dump() << '\n';
            continue;
        }
        std::string gamma;
        std::string decs;
        const auto g = gamma_of(p).entries();
        const auto d = decorations(p).flags;
        for (std::size_t i = 0; i < g.size(); ++i) {
            gamma += (i ? "/" : "") + join(g[i]);
            decs += i ? "/" : "";
            for (std::size_t k = 0; k < d[i].size(); ++k) decs += (k ? "," : "") + decor_code(d[i][k]);
        }
        out << "rows=" << p.to_string() << " gamma=" << (gamma.empty() ? "-" : gamma)
            << " decorations=" << (decs.empty() ? "-" : decs) << " weight=" << join(weight_of(p))
            << " coefficient=" << c.to_string() << '\n';
    }
    return exit_pass;
}

int cmd_whittaker(const std::string& lam_text, int n, const std::string& format, std::ostream& out) {
    check_format(format);
    if (n < 1) throw InvalidArgument("n must be positive");
    const Weight lam = parse_weight(lam_text);
    if (!is_dominant(lam)) throw InvalidArgument("lambda must be dominant");
    const LaurentPoly f = whittaker_value(lam, n);
    if (format == "json")
        out << f.to_json().dump() << '\n';
    else
        out << f.to_string() << '\n';
    return exit_pass;
}

int cmd_verify(const SweepConfig& cfg, std::ostream& out) {
    const std::vector<CheckReport> reports = run_sweep(cfg);
    int failed = 0;
    for (const auto& rep : reports) {
        if (!rep.pass) ++failed;
        if (cfg.format == "json")
            out << rep.to_json().dump() << '\n';
        else
            out << rep.to_text() << '\n';
    }
    if (cfg.format == "json")
        out << nlohmann::json{{"summary", {{"checks", reports.size()}, {"failed", failed}}}}.dump() << '\n';
    else
        out << "summary: " << reports.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? exit_pass : exit_failed;
}

int cmd_gauss(int n, std::optional<int> p_opt, const std::string& format, std::ostream& out) {
    check_format(format);
    if (n < 1) throw InvalidArgument("n must be positive");
    const int p = p_opt ? *p_opt : default_prime(n);
    const GaussContext ctx(p, n);
    for (int a = 0; a <= n; ++a) {
        const auto g = gauss_gflat(a, ctx);
        const auto h = gauss_hflat(a, ctx);
        if (format == "json")
            out << nlohmann::json{{"a", a}, {"g_flat", {g.real(), g.imag()}}, {"h_flat", {h.real(), h.imag()}}}.dump()
                << '\n';
        else
            out << "a=" << a << " g_flat=" << render_complex(g) << " h_flat=" << render_complex(h) << '\n';
    }
    const CheckReport rep = check_gauss(p, n);
    out << (format == "json" ? rep.to_json().dump() : rep.to_text()) << '\n';
    return rep.pass ? exit_pass : exit_failed;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"metaplectic Whittaker and crystal toolkit"};
    app.require_subcommand(1);

    auto* crystal = app.add_subcommand("crystal", "list crystal vertices with coefficients");
    std::string top_row;
    int crystal_n = 1;
    std::optional<int> w_length;
    std::string crystal_format = "text";
    crystal->add_option("--top-row", top_row, "comma-separated top row")->required();
    crystal->add_option("--n", crystal_n, "metaplectic degree");
    crystal->add_option("--w-length", w_length, "restrict to the Demazure crystal of this length");
    crystal->add_option("--format", crystal_format, "text or json");

    auto* whittaker = app.add_subcommand("whittaker", "Whittaker value as a polynomial");
    std::string lam_text;
    int whittaker_n = 1;
    std::string whittaker_format = "text";
    whittaker->add_option("--lambda", lam_text, "comma-separated dominant weight")->required();
    whittaker->add_option("--n", whittaker_n, "metaplectic degree");
    whittaker->add_option("--format", whittaker_format, "text or json");

    auto* verify = app.add_subcommand("verify", "run identity checks over a grid");
    std::string statement = "main";
    std::string r_text = "1..2";
    std::string n_text = "1..2";
    int lambda_max = 2;
    std::string verify_format = "text";
    int jobs = 0;
    unsigned long long seed = 1;
    int samples = 20;
    std::string config_file;
    bool inject_fault = false;
    auto* o_statement = verify->add_option("--statement", statement, "comma list or all");
    auto* o_r = verify->add_option("--r", r_text, "rank or range a..b");
    auto* o_n = verify->add_option("--n", n_text, "degree or range a..b");
    auto* o_lmax = verify->add_option("--lambda-max", lambda_max, "bound on lambda entries");
    auto* o_format = verify->add_option("--format", verify_format, "text or json");
    auto* o_jobs = verify->add_option("--jobs", jobs, "threads, 0 for all cores");
    auto* o_seed = verify->add_option("--seed", seed, "seed for sampled checks");
    auto* o_samples = verify->add_option("--samples", samples, "random inputs per longword instance");
    verify->add_option("--config", config_file, "key=value file");
    verify->add_flag("--inject-fault", inject_fault, "corrupt the crystal side of main checks");

    auto* gauss = app.add_subcommand("gauss", "numeric Gauss sums");
    int gauss_n = 2;
    std::optional<int> gauss_p;
    std::string gauss_format = "text";
    gauss->add_option("--n", gauss_n, "degree");
    gauss->add_option("--p", gauss_p, "prime with p = 1 mod 2n, default the smallest");
    gauss->add_option("--format", gauss_format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*crystal) return cmd_crystal(top_row, crystal_n, w_length, crystal_format, out);
        if (*whittaker) return cmd_whittaker(lam_text, whittaker_n, whittaker_format, out);
        if (*gauss) return cmd_gauss(gauss_n, gauss_p, gauss_format, out);

        SweepConfig cfg;
        if (!config_file.empty()) {
            std::ifstream in(config_file);
            if (!in) throw InvalidArgument("cannot open config file " + config_file);
            cfg = parse_config_text(in, cfg);
        }
        // Explicit flags win over the file.
        if (o_statement->count() || config_file.empty()) cfg.statements = parse_statement_list(statement);
        if (o_r->count() || config_file.empty()) std::tie(cfg.r_min, cfg.r_max) = parse_range(r_text);
        if (o_n->count() || config_file.empty()) std::tie(cfg.n_min, cfg.n_max) = parse_range(n_text);
        if (o_lmax->count() || config_file.empty()) cfg.lambda_max = lambda_max;
        if (o_format->count() || config_file.empty()) cfg.format = verify_format;
        if (o_jobs->count() || config_file.empty()) cfg.jobs = jobs;
        if (o_seed->count() || config_file.empty()) cfg.seed = seed;
        if (o_samples->count() || config_file.empty()) cfg.samples = samples;
        cfg.fault.corrupt_crystal_side = inject_fault;
        cfg.validate();
        return cmd_verify(cfg, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"metatok"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace metatok
