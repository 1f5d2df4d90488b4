#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tamecft/cli.hpp"
#include "tamecft/report.hpp"
#include "tamecft/sampling.hpp"
#include "tamecft/selftest.hpp"

using namespace tamecft;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "tamecft");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle)
{
    return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("jt on the worked instance")
{
    auto r = run({"jt", "--prime", "5", "--points", "inf,t,t-1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[4, 4]"));
}

TEST_CASE("weil and hilbert commands")
{
    auto w = run({"weil", "--prime", "5", "--f", "t", "--g", "t-1"});
    CHECK(w.code == 0);
    CHECK(contains(w.out, "product 1"));
    auto h = run({"hilbert", "--prime", "5", "--modulus", "4", "--a", "5", "--b", "5"});
    CHECK(h.code == 0);
    CHECK(contains(h.out, "class 2"));
}

TEST_CASE("et, recip and report succeed on valid input")
{
    CHECK(run({"et", "-p", "5", "-m", "4", "--points", "inf,t,t-1"}).code == 0);
    CHECK(run({"recip", "-p", "5", "-m", "4", "--points", "inf,t^2-5"}).code == 0);
    auto r = run({"report", "-p", "5", "-m", "4", "--points", "inf,t,t-1", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"jt", "et_mod_m", "gr0", "gr1", "square_12_5", "certificates", "normalization", "tool"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["jt"]["factors"] == nlohmann::json::array({4, 4}));
}

TEST_CASE("invalid input exits with 2")
{
    CHECK(run({"jt", "--prime", "5", "--points", "t,t-1"}).code == 2);
    CHECK(run({"jt", "--prime", "6", "--points", "inf"}).code == 2);
    CHECK(run({"report", "-p", "5", "-m", "5", "--points", "inf"}).code == 2);
    CHECK(run({"jt", "--prime", "5", "--points", "inf,t^2-1"}).code == 2);
    CHECK(run({"weil", "--f", "t+", "--g", "t"}).code == 2);
    CHECK(run({"weil", "--f", "0", "--g", "t"}).code == 2);
    CHECK(run({"hilbert", "--prime", "5", "--a", "0", "--b", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    auto r = run({"jt", "--prime", "5", "--points", "t"});
    CHECK(contains(r.err, "S must contain infinity"));
}

TEST_CASE("instance files")
{
    const auto path = std::filesystem::temp_directory_path() / "tamecft_cli_instance.json";
    {
        std::ofstream f(path);
        f << R"({"p":5,"m":4,"points":["inf","t","t-1"]})";
    }
    auto r = run({"jt", "--instance", path.string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[4, 4]"));
    {
        std::ofstream f(path);
        f << R"({"p":5,"m":4,"points":)";
    }
    CHECK(run({"jt", "--instance", path.string()}).code == 2);
    std::filesystem::remove(path);
    CHECK(run({"jt", "--instance", path.string()}).code == 2);
}

TEST_CASE("report JSON round trip")
{
    Sampler s(61);
    for (int i = 0; i < 30; ++i) {
        auto inst = s.instance(i % 3 == 0);
        Report r = full_report(inst);
        CHECK(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
        CHECK(instance_to_json(instance_from_json(instance_to_json(inst))) == instance_to_json(inst));
    }
    auto r = run({"report", "-p", "7", "-m", "6", "--points", "inf,t^2-7,t^2+1", "--format", "json"});
    REQUIRE(r.code == 0);
    auto parsed = report_from_json(nlohmann::json::parse(r.out));
    CHECK(to_json(parsed) == nlohmann::json::parse(r.out));
}

TEST_CASE("selftest is deterministic")
{
    auto a = run({"selftest", "--seed", "7", "--size", "20"});
    auto b = run({"selftest", "--seed", "7", "--size", "20"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto empty = run({"selftest", "--size", "0"});
    CHECK(empty.code == 0);
    CHECK(contains(empty.out, "0 cases"));
    CHECK(run_selftest(default_selftest_seed, 50).ok());
}

TEST_CASE("seed falls back to the environment")
{
    ::setenv("TAMECFT_SEED", "99", 1);
    auto env = run({"selftest", "--size", "5"});
    ::unsetenv("TAMECFT_SEED");
    auto flag = run({"selftest", "--seed", "99", "--size", "5"});
    CHECK(env.code == 0);
    CHECK(env.out == flag.out);
    CHECK(contains(env.out, "seed=99"));
    ::setenv("TAMECFT_SEED", "not-a-number", 1);
    CHECK(run({"selftest", "--size", "5"}).code == 2);
    ::unsetenv("TAMECFT_SEED");
}
