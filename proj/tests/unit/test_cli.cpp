#include "doctest.h"
#include "json.hpp"
#include "qh/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "qh");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = qh::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("info on R_3")
{
    const Run r = run({"info", "--dihedral", "3"});
    CHECK(r.code == qh::kExitOk);
    CHECK(r.out.find("|Inn|=6") != std::string::npos);
    const Run j = run({"info", "--trivial", "4", "--format", "json"});
    REQUIRE(j.code == qh::kExitOk);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == "qh/1");
    CHECK(doc["command"] == "info");
}

TEST_CASE("homology output in both formats")
{
    const Run j = run({"homology", "--dihedral", "3", "--coeff", "f3", "--max-degree", "4", "--format", "json"});
    REQUIRE(j.code == qh::kExitOk);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == "qh/1");
    CHECK(j.out.find("\"field_dim\"") != std::string::npos);
    CHECK(run({"homology", "--dihedral", "3", "--max-degree", "3"}).code == qh::kExitOk);
}

TEST_CASE("verify exit codes and determinism")
{
    const std::vector<std::string> args{"verify", "--dihedral", "3", "--suite", "cup", "--max-degree", "3",
                                        "--trials", "5", "--seed", "42", "--format", "json"};
    const Run a = run(args), b = run(args);
    CHECK(a.code == qh::kExitOk);
    CHECK(a.out == b.out);
    auto faulty = args;
    faulty.insert(faulty.end(), {"--inject-fault", "cup"});
    const Run f = run(faulty);
    CHECK(f.code == qh::kExitIdentityFailure);
    CHECK(f.out.find("replay_seed") != std::string::npos);
}

TEST_CASE("invalid input exits with code 2")
{
    CHECK(run({"frobnicate"}).code == qh::kExitInvalidInput);
    CHECK(run({"info"}).code == qh::kExitInvalidInput);
    CHECK(run({"homology", "--dihedral", "3", "--coeff", "f4"}).code == qh::kExitInvalidInput);
    CHECK(run({"verify", "--dihedral", "3", "--inject-fault", "nonsense"}).code == qh::kExitInvalidInput);
    CHECK(run({"generators", "--trivial", "2"}).code == qh::kExitInvalidInput);

    const std::string path = "qh_cli_test_bad.json";
    {
        std::ofstream f(path);
        f << R"({"size": 2, "table": [[0,0],[1,0]]})";
    }
    const Run bad = run({"info", "--file", path});
    std::remove(path.c_str());
    CHECK(bad.code == qh::kExitInvalidInput);
    CHECK(bad.err.find("column 1") != std::string::npos);
}

TEST_CASE("cell cap exits with code 3")
{
    CHECK(run({"homology", "--dihedral", "3", "--max-degree", "6", "--cell-cap", "100"}).code == qh::kExitCap);
}

TEST_CASE("compare marks unpredicted rows")
{
    const Run t = run({"compare", "--trivial", "2", "--max-degree", "3"});
    CHECK(t.code == qh::kExitOk);
    CHECK(t.out.find("N/A") != std::string::npos);
    const Run r = run({"compare", "--dihedral", "3", "--max-degree", "4", "--format", "json"});
    CHECK(r.code == qh::kExitOk);
    CHECK(nlohmann::json::parse(r.out)["predictions"] == true);
}

TEST_CASE("generators and export")
{
    const Run g = run({"generators", "--dihedral", "3", "--format", "json"});
    REQUIRE(g.code == qh::kExitOk);
    const auto doc = nlohmann::json::parse(g.out);
    CHECK(doc["schema"] == "qh/1");
    const Run e = run({"export", "--dihedral", "3", "--what", "A"});
    CHECK(e.code == qh::kExitOk);
    CHECK(nlohmann::json::parse(e.out).dump().find("\"degree\":2") != std::string::npos);
    CHECK(run({"export", "--dihedral", "3", "--what", "boundary", "--degree", "2"}).code == qh::kExitOk);
}
