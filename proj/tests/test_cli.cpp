// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "tricoil/cli.hpp"

namespace fs = std::filesystem;
using namespace tricoil;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("tricoil_cli_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int shell(const std::string& cmd)
{
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("optimize writes the trace")
{
    ScenarioConfig cfg;
    cfg.output_dir = scratch("optimize").string();
    std::ostringstream log;
    CHECK(cli::run("optimize", cfg, {true}, log) == cli::kExitOk);
    const std::string csv = slurp(fs::path(cfg.output_dir) / "trace.csv");
    CHECK(csv.rfind("iter,alpha,i1,i2,i3,s1,s2,s3,pathloss_db\n", 0) == 0);
    CHECK(fs::exists(fs::path(cfg.output_dir) / "trace.svg"));
    CHECK(log.str().find("joint") != std::string::npos);
}

TEST_CASE("mutual and sweep subcommands")
{
    ScenarioConfig cfg;
    cfg.output_dir = scratch("sweep").string();
    cfg.angles = 12;
    cfg.deltas = {1e-3, 1e-1};
    std::ostringstream log;
    CHECK(cli::run("mutual", cfg, {}, log) == cli::kExitOk);
    CHECK(cli::run("sweep-angle", cfg, {}, log) == cli::kExitOk);
    CHECK(cli::run("sweep-threshold", cfg, {true}, log) == cli::kExitOk);
    CHECK(fs::exists(fs::path(cfg.output_dir) / "mutual.csv"));
    CHECK(fs::exists(fs::path(cfg.output_dir) / "sweep.csv"));
    CHECK_FALSE(fs::exists(fs::path(cfg.output_dir) / "sweep.svg"));
    CHECK(fs::exists(fs::path(cfg.output_dir) / "threshold.svg"));
}

TEST_CASE("oracle passes on the default scenario")
{
    ScenarioConfig cfg;
    cfg.output_dir = scratch("oracle").string();
    cfg.oracle_samples = 5000;
    cfg.oracle_angles = 6;
    std::ostringstream log;
    CHECK(cli::run("oracle", cfg, {}, log) == cli::kExitOk);
    std::istringstream csv(slurp(fs::path(cfg.output_dir) / "oracle.csv"));
    std::string line;
    std::getline(csv, line);
    int current_rows = 0;
    while (std::getline(csv, line)) {
        if (line.rfind("current_step@", 0) != 0)
            continue;
        ++current_rows;
        std::istringstream row(line);
        std::string field;
        for (int k = 0; k < 4; ++k)
            std::getline(row, field, ',');
        CHECK(std::stod(field) <= 1e-9);
    }
    CHECK(current_rows == 6);
}

TEST_CASE("bad input maps to the validation exit code")
{
    std::ostringstream log;
    ScenarioConfig cfg;
    cfg.output_dir = scratch("bad").string();
    CHECK(cli::run("frobnicate", cfg, {}, log) == cli::kExitValidation);
    CHECK_FALSE(fs::exists(cfg.output_dir));
    cfg.delta = -1.0;
    CHECK(cli::run("optimize", cfg, {}, log) == cli::kExitValidation);
}

TEST_CASE("executable")
{
    const std::string exe = TRICOIL_EXE;
    CHECK(shell(exe + " frobnicate") == 1);
    CHECK(shell(exe + " mutual --delta=-3") == 1);

    const fs::path missing = scratch("missing") / "nope.json";
    CHECK(shell(exe + " mutual --config " + missing.string()) == 1);

    const fs::path bad = scratch("badcfg");
    fs::create_directories(bad);
    std::ofstream(bad / "cfg.json") << "{\n\"delta\": ,\n}";
    CHECK(shell(exe + " mutual --config " + (bad / "cfg.json").string()) == 1);

    const fs::path via_flag = scratch("flag");
    const fs::path via_env = scratch("env");
    CHECK(shell("TRICOIL_OUT=" + via_env.string() + " " + exe + " mutual --out " + via_flag.string()) == 0);
    CHECK(fs::exists(via_env / "mutual.csv"));
    CHECK_FALSE(fs::exists(via_flag));
}
