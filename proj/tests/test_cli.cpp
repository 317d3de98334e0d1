#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "metatok/cli.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace metatok;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

} // namespace

TEST_CASE("crystal listing") {
    auto r = run({"crystal", "--top-row", "3,1,0"});
    CHECK(r.code == 0);
    CHECK(split_lines(r.out).size() == 15);
    CHECK(r.out.find("rows=3,1,0/2,1/2 ") != std::string::npos);
    CHECK(r.out.find("coefficient=t^2 - t^3") != std::string::npos);
    r = run({"crystal", "--top-row", "3,1,0", "--w-length", "2"});
    CHECK(split_lines(r.out).size() == 9);
    CHECK(split_lines(run({"crystal", "--top-row", "1,0"}).out).size() == 2);

    r = run({"crystal", "--top-row", "3,1,0", "--format", "json"});
    CHECK(r.code == 0);
    for (const auto& l : split_lines(r.out)) {
        const auto j = nlohmann::json::parse(l);
        CHECK(j.contains("gamma"));
        CHECK(j.contains("coefficient"));
    }
    CHECK(run({"crystal", "--top-row", "0,1"}).code == 2);
    CHECK(run({"crystal", "--top-row", "3,1,0", "--w-length", "9"}).code == 2);
    CHECK(run({"crystal"}).code == 2);
}

TEST_CASE("whittaker values") {
    auto r = run({"whittaker", "--lambda", "1,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "x2 + (1 - t)*x1 - t*x1^2*x2^-1\n");
    r = run({"whittaker", "--lambda", "0,0", "--n", "2", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out).size() == 2);
    CHECK(run({"whittaker", "--lambda", "1,2"}).code == 2);
}

TEST_CASE("verify exit codes") {
    auto r = run({"verify", "--r", "1..2", "--n", "1..2", "--lambda-max", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("summary: 44 checks, 0 failed") != std::string::npos);

    r = run({"verify", "--r", "1", "--n", "1", "--lambda-max", "1", "--inject-fault"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL main") != std::string::npos);

    CHECK(run({"verify", "--statement", "nonsense"}).code == 2);
    CHECK(run({"verify", "--r", "0"}).code == 2);
    CHECK(run({"verify", "--format", "yaml"}).code == 2);
    CHECK(run({"verify", "--config", "/nonexistent/sweep.cfg"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify json and determinism") {
    const std::vector<std::string> args{"verify", "--statement", "main,MN,longword", "--r", "1..2", "--n", "1..2",
                                        "--lambda-max", "1", "--samples", "3", "--format", "json"};
    const auto a = run(args);
    auto with_jobs = args;
    with_jobs.insert(with_jobs.end(), {"--jobs", "2"});
    const auto b = run(with_jobs);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto lines = split_lines(a.out);
    const auto summary = nlohmann::json::parse(lines.back());
    CHECK(summary["summary"]["failed"] == 0);
    CHECK(summary["summary"]["checks"] == static_cast<int>(lines.size()) - 1);
}

TEST_CASE("verify reads a config file and flags override it") {
    const std::string path = "test_cli_sweep.cfg";
    {
        std::ofstream f(path);
        f << "statement=tokuyama\nr=1..2\nn=1\nlambda_max=1\n";
    }
    auto r = run({"verify", "--config", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("summary: 7 checks, 0 failed") != std::string::npos);
    r = run({"verify", "--config", path, "--r", "1"});
    CHECK(r.out.find("summary: 3 checks, 0 failed") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("gauss table") {
    auto r = run({"gauss", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("a=1 g_flat=0.447213595500 h_flat=0.000000000000") != std::string::npos);
    CHECK(r.out.find("PASS gauss") != std::string::npos);
    CHECK(r.out == run({"gauss", "--n", "2"}).out);
    CHECK(run({"gauss", "--n", "2", "--p", "7"}).code == 2);
    CHECK(run({"gauss", "--n", "3", "--p", "13"}).code == 0);
    r = run({"gauss", "--n", "2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(split_lines(r.out).front()).is_object());
}
