#include "wplab/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace wplab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "wplab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("wplab_cli_test_" + std::to_string(::getpid())) / name;
    fs::create_directories(p.parent_path());
    return p;
}

int system_exit(const std::string& cmd) {
    const int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

} // namespace

TEST_CASE("scl at the basepoint") {
    const auto r = call({"scl", "--s2", "0", "--genus", "2"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["scl"]["S_cl"].get<double>() == 16 * std::numbers::pi);
    CHECK(j["scl"]["slack"].get<double>() == 0.0);
    CHECK(j.contains("conventions"));
    CHECK(j["status"] == "ok");
}

TEST_CASE("logdet of the identity pair") {
    const auto r = call({"logdet", "--family", "identity", "--N", "16"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["S2_univ_via_B1"]["extrapolated"].get<double>() == 0.0);
    CHECK(j["S2_univ_via_B4"]["extrapolated"].get<double>() == 0.0);
}

TEST_CASE("identity report for ellipse(0.3)") {
    const auto r = call({"identity", "--family", "ellipse", "--c", "0.3", "--N", "64", "--grid", "128x256"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["identity"]["residual_identity"]["rel"].get<double>() <= 1e-3);
}

TEST_CASE("exit codes") {
    CHECK(call({"frobnicate"}).code == 2);
    const auto u = call({"frobnicate"});
    CHECK(u.err.find("Usage") != std::string::npos);
    CHECK(call({"logdet", "--family", "lens"}).code == 2);
    CHECK(call({"logdet", "--family", "ellipse", "--c", "1.5"}).code == 2);
    CHECK(call({"logdet", "--orders", "8,4"}).code == 2);
    CHECK(call({"identity", "--grid", "12by4"}).code == 2);
    CHECK(call({"scl", "--s2", "-1"}).code == 2);
    // check failure: a tolerance no computation meets
    CHECK(call({"identity", "--family", "ellipse", "--c", "0.1", "--N", "8", "--grid", "32x64", "--tol", "1e-30"}).code == 1);
    CHECK(call({"--help"}).code == 0);

    // numerical failure: z + 0.9 z^2 is not univalent and its Grunsky matrix has norm > 1
    std::vector<std::array<double, 2>> f(40, {0.0, 0.0});
    f[1] = {1.0, 0.0};
    f[2] = {0.9, 0.0};
    std::vector<std::array<double, 2>> g(40, {0.0, 0.0});
    g[0] = {1.0, 0.0};
    const json doc = {{"family_tag", "bad"}, {"taylor_coeffs", f}, {"laurent_coeffs", g}};
    const auto path = scratch("bad_pair.json");
    std::ofstream(path) << doc.dump();
    const auto r = call({"logdet", "--pair-file", path.string(), "--N", "16"});
    CHECK(r.code == 3);
    CHECK(r.err.find("numerical failure") != std::string::npos);
}

TEST_CASE("binary exit codes") {
    const std::string bin = WPLAB_BINARY;
    CHECK(system_exit(bin + " scl --s2 0 --genus 2 > /dev/null") == 0);
    CHECK(system_exit(bin + " nope 2> /dev/null") == 2);
}

TEST_CASE("config file with flag override") {
    const auto path = scratch("run.conf");
    std::ofstream(path) << "# logdet run\nfamily = ellipse\nc = 0.3\nN = 8\ntol = 1e-2\n";
    const auto a = call({"logdet", "--config", path.string()});
    REQUIRE(a.code == 0);
    const auto ja = json::parse(a.out);
    CHECK(ja["pair"]["params"]["c"].get<double>() == 0.3);
    CHECK(ja["S2_univ_via_B4"]["orders"][0].get<int>() == 8);
    const auto b = call({"logdet", "--config", path.string(), "--c", "0.2"});
    REQUIRE(b.code == 0);
    CHECK(json::parse(b.out)["pair"]["params"]["c"].get<double>() == 0.2);
}

TEST_CASE("reports are deterministic") {
    const auto a = call({"grunsky", "--family", "fourier_bump", "--eps", "0.05", "--k", "2", "--N", "16", "--tol", "1e-5"});
    const auto b = call({"grunsky", "--family", "fourier_bump", "--eps", "0.05", "--k", "2", "--N", "16", "--tol", "1e-5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("sweep") {
    const auto r = call({"sweep", "--family", "ellipse", "--values", "0.1,0.2", "--N", "32", "--grid", "128x256"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string header, line;
    std::getline(is, header);
    CHECK(header.find("S1") != std::string::npos);
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ','))
            cells.push_back(c);
        REQUIRE(cells.size() >= 11);
        const double s2dg = std::stod(cells[9]), slack = std::stod(cells[10]);
        CHECK(slack == doctest::Approx(12 * std::numbers::pi * s2dg).epsilon(1e-15));
    }
    CHECK(rows == 2);

    const auto bad = call({"sweep", "--family", "ellipse", "--values", "0.2,1.5", "--N", "8", "--grid", "32x64"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("ellipse needs 0 < c < 1") != std::string::npos);

    const auto id = call({"sweep", "--family", "identity", "--values", "0", "--N", "8", "--grid", "32x64"});
    CHECK(id.code == 0);
    CHECK(id.out.find("identity,none,0,0,0,0,0,0,0,0,0,8,32x64,") != std::string::npos);
}

TEST_CASE("output directory from the environment") {
    const auto dir = scratch("out");
    ::setenv("WPLAB_OUTPUT_DIR", dir.string().c_str(), 1);
    const auto r = call({"scl", "--s2", "0.1"});
    ::unsetenv("WPLAB_OUTPUT_DIR");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    REQUIRE(fs::exists(dir / "scl.json"));
    std::ifstream in(dir / "scl.json");
    const auto j = json::parse(in);
    CHECK(j["scl"]["slack"].get<double>() == doctest::Approx(1.2 * std::numbers::pi));
}

TEST_CASE("matrix dump") {
    const auto dir = scratch("dump");
    const auto r = call({"grunsky", "--family", "identity", "--N", "4", "--dump-dir", dir.string()});
    CHECK(r.code == 0);
    std::ifstream in(dir / "B2.csv");
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "re_1,im_1,re_2,im_2,re_3,im_3,re_4,im_4");
    CHECK(row == "1,0,0,0,0,0,0,0");
}
