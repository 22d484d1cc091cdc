#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "slspec/cli.hpp"
#include "slspec/io.hpp"

using namespace slspec;
namespace fs = std::filesystem;

namespace {

std::string tmp_dir(const std::string& tag)
{
    const std::string d = (fs::temp_directory_path() / ("slspec_cli_" + tag)).string();
    fs::remove_all(d);
    return d;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("minimal config gets the documented defaults")
    {
        const cli::RunConfig cfg = cli::parse_config("command=spectrum\npotential=zero\n");
        CHECK(cfg.command == "spectrum");
        CHECK(cfg.M == 2048);
        CHECK(cfg.n_max == 64);
        CHECK(cfg.bc == "both");
        CHECK(cfg.form == SystemForm::sigma_form);
        CHECK_NOTHROW(cfg.validate());
    }

    TEST_CASE("comments, blank lines and whitespace are tolerated")
    {
        const cli::RunConfig cfg = cli::parse_config(
            "# a comment\n\n  command = charfn   # trailing\n  potential = constant:2\n");
        CHECK(cfg.command == "charfn");
        CHECK(cfg.potential.variant == PotentialVariant::constant);
    }

    TEST_CASE("unknown keys are rejected with their line number")
    {
        try {
            cli::parse_config("command=spectrum\nbogus=1\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }

    TEST_CASE("the n_max <= M/8 guard trips validation")
    {
        cli::RunConfig cfg =
            cli::parse_config("command=spectrum\npotential=zero\nn_max=1000\nM=2048\n");
        CHECK_THROWS_AS(cfg.validate(), ConfigError);
        CHECK(cli::run(cfg) == 2);
    }

    TEST_CASE("step potential sub-grammar")
    {
        const cli::RunConfig cfg =
            cli::parse_config("command=spectrum\npotential=step:0.5:1.0\n");
        REQUIRE(cfg.potential.steps.size() == 1);
        CHECK(cfg.potential.steps[0].first == 0.5);
        CHECK(cfg.potential.steps[0].second == cplx(1.0));
        CHECK_THROWS_AS(cli::parse_config("potential=step:0.5\n"), ConfigError);
        CHECK_THROWS_AS(cli::parse_config("potential=warp:1\n"), ConfigError);
    }

    TEST_CASE("complex values parse in the a+bi forms")
    {
        const cli::RunConfig cfg =
            cli::parse_config("command=spectrum\npotential=constant:1.5-0.25i\nh_offset=2i\n");
        CHECK(cfg.potential.constant_value == cplx(1.5, -0.25));
        CHECK(cfg.potential.h_offset == cplx(0.0, 2.0));
    }

    TEST_CASE("spectrum run emits the free eigenvalues and a checksummed manifest")
    {
        const std::string dir = tmp_dir("spectrum");
        cli::RunConfig cfg = cli::parse_config(
            "command=spectrum\npotential=zero\nM=512\nn_max=8\noutput_dir=" + dir + "\n");
        REQUIRE(cli::run(cfg) == 0);

        const std::string csv = io::read_file(dir + "/spectrum_dirichlet.csv");
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line); // header
        int n = 0;
        while (std::getline(in, line)) {
            ++n;
            const size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
            const double re = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
            CHECK(std::abs(re - pi * n) < 1e-9);
        }
        CHECK(n == 8);

        // every emitted file appears in the manifest with a valid digest
        const std::string manifest = io::read_file(dir + "/manifest.json");
        CHECK(manifest.find("spectrum_dirichlet.csv") != std::string::npos);
        CHECK(manifest.find(io::sha256_hex(csv)) != std::string::npos);
        fs::remove_all(dir);
    }

    TEST_CASE("identical config and seed give byte-identical outputs across thread counts")
    {
        const std::string d1 = tmp_dir("t1"), d2 = tmp_dir("t2");
        const std::string base =
            "command=spectrum\npotential=fourier_random:0.5:32:9:0.5\nM=256\nn_max=8\n";
        cli::RunConfig a = cli::parse_config(base + "threads=1\noutput_dir=" + d1 + "\n");
        cli::RunConfig b = cli::parse_config(base + "threads=2\noutput_dir=" + d2 + "\n");
        REQUIRE(cli::run(a) == 0);
        REQUIRE(cli::run(b) == 0);
        for (const auto& entry : fs::directory_iterator(d1)) {
            const std::string name = entry.path().filename().string();
            CHECK(io::read_file(d1 + "/" + name) == io::read_file(d2 + "/" + name));
        }
        fs::remove_all(d1);
        fs::remove_all(d2);
    }

    TEST_CASE("charfn dumps a lambda table")
    {
        const std::string dir = tmp_dir("charfn");
        cli::RunConfig cfg = cli::parse_config(
            "command=charfn\npotential=zero\nM=256\nn_max=16\nlambda_max=10\nlambda_count=11\n"
            "bc=neumann\noutput_dir=" + dir + "\n");
        REQUIRE(cli::run(cfg) == 0);
        const std::string csv = io::read_file(dir + "/charfn_neumann.csv");
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line);
        CHECK(line == "lambda,re,im");
        int rows = 0;
        while (std::getline(in, line)) ++rows;
        CHECK(rows == 11);
        fs::remove_all(dir);
    }

    TEST_CASE("asymptotics command writes residual tables and fitted exponents")
    {
        const std::string dir = tmp_dir("asy");
        cli::RunConfig cfg = cli::parse_config(
            "command=asymptotics\npotential=fourier_random:0.5:64:7:0.5\nM=512\nn_max=32\n"
            "output_dir=" + dir + "\n");
        REQUIRE(cli::run(cfg) == 0);
        for (const char* name :
             {"residual_leading_dirichlet.csv", "residual_refined_neumann.csv",
              "sigma_plus.csv", "report.json", "manifest.json"})
            CHECK_NOTHROW(io::read_file(dir + "/" + name));
        const std::string report = io::read_file(dir + "/report.json");
        CHECK(report.find("\"gamma\": 1.5") != std::string::npos);
        CHECK(report.find("dirichlet_refined") != std::string::npos);
        fs::remove_all(dir);
    }

    TEST_CASE("factorize command dumps the factorization grid functions")
    {
        const std::string dir = tmp_dir("fac");
        cli::RunConfig cfg = cli::parse_config(
            "command=factorize\npotential=constant:-2\nM=256\nn_max=8\noutput_dir=" + dir +
            "\n");
        REQUIRE(cli::run(cfg) == 0);
        const GridFunction tau = io::gridfun_from_csv(io::read_file(dir + "/tau.csv"));
        CHECK(tau.cells == 256);
        const std::string report = io::read_file(dir + "/report.json");
        CHECK(report.find("shift_C") != std::string::npos);
        fs::remove_all(dir);
    }

    TEST_CASE("sha256 matches the FIPS test vector")
    {
        CHECK(io::sha256_hex("abc") ==
              "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
        CHECK(io::sha256_hex("") ==
              "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    TEST_CASE("main_entry maps error classes to exit codes")
    {
        const char* bad_cmd[] = {"slspec", "explode"};
        CHECK(cli::main_entry(2, bad_cmd) == 2);
        // numerical failure: a potential whose file does not exist is a config error
        const char* bad_file[] = {"slspec", "spectrum", "--potential", "from_file:/nonexistent"};
        CHECK(cli::main_entry(4, bad_file) == 2);
    }

    TEST_CASE("inverse command reports jumps for the delta potential")
    {
        // desk-scale version of the reconstruction example
        const std::string dir = tmp_dir("inverse");
        cli::RunConfig cfg = cli::parse_config(
            "command=inverse\npotential=step:0.5:1.0\nM=1024\nn_max=128\noutput_dir=" + dir +
            "\n");
        REQUIRE(cli::run(cfg) == 0);
        const std::string report = io::read_file(dir + "/report.json");
        CHECK(report.find("\"jumps\"") != std::string::npos);
        CHECK(report.find("0.5") != std::string::npos);
        fs::remove_all(dir);
    }
}
