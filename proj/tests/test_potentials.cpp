#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "slspec/io.hpp"
#include "slspec/potentials.hpp"

using namespace slspec;

TEST_SUITE("potentials")
{
    TEST_CASE("zero spec realizes the zero function")
    {
        const GridFunction g = realize(PotentialSpec::zero(), 64);
        CHECK(g.max_abs() == 0.0);
        CHECK(g.fine_rate == potential_fine_rate);
    }

    TEST_CASE("step at one half is the indicator with a breakpoint at M/2")
    {
        const int M = 128;
        const GridFunction g = realize(PotentialSpec::step({{0.5, 1.0}}), M);
        REQUIRE(g.breakpoints.size() == 1);
        CHECK(g.breakpoints[0].node == M / 2);
        CHECK(g.value_left(M / 2) == cplx(0.0));
        CHECK(g.value_right(M / 2) == cplx(1.0));
        for (int k = 0; k < M / 2; ++k) CHECK(g.value_right(k) == cplx(0.0));
        for (int k = M / 2; k <= M; ++k) CHECK(g.value_right(k) == cplx(1.0));
    }

    TEST_CASE("fourier_random is deterministic in (spec, M)")
    {
        const PotentialSpec spec = PotentialSpec::fourier_random(0.5, 256, 7, 1.0);
        const GridFunction a = realize(spec, 512);
        const GridFunction b = realize(spec, 512);
        for (int k = 0; k <= 512; ++k)
            CHECK(a.value_right(k) == b.value_right(k));
    }

    TEST_CASE("linear carries the offset in front")
    {
        PotentialSpec spec = PotentialSpec::linear(2.0);
        spec.h_offset = cplx(0.5, 0.0);
        const GridFunction g = realize(spec, 64);
        for (int k = 0; k <= 64; ++k)
            CHECK(std::abs(g.value_right(k) - (0.5 + 2.0 * k / 64.0)) < 1e-15);
    }

    TEST_CASE("step positions must be interior, increasing, distinct after snapping")
    {
        CHECK_THROWS_AS(realize(PotentialSpec::step({{0.001, 1.0}}), 16), ConfigError);
        CHECK_THROWS_AS(PotentialSpec::step({{0.7, 1.0}, {0.3, 1.0}}).validate(), ConfigError);
        CHECK_THROWS_AS(realize(PotentialSpec::step({{0.500, 1.0}, {0.501, 1.0}}), 64),
                        ConfigError);
    }

    TEST_CASE("step rejects a nominal alpha at or above one half")
    {
        PotentialSpec spec = PotentialSpec::step({{0.5, 1.0}});
        spec.nominal_alpha = 0.6;
        CHECK_THROWS_AS(spec.validate(), ConfigError);
    }

    TEST_CASE("log singularity clips near the origin")
    {
        const int M = 64;
        const GridFunction g = realize(PotentialSpec::log_singularity(2.0), M);
        CHECK(std::abs(g.value_right(0) - 2.0 * std::log(1.0 / M)) < 1e-14);
        CHECK(std::abs(g.value_right(M / 2) - 2.0 * std::log(0.5)) < 1e-14);
    }

    TEST_CASE("generator self-consistency: coefficient decay tracks alpha + 0.55")
    {
        const double alpha = 0.5;
        const GridFunction g =
            realize(PotentialSpec::fourier_random(alpha, 256, 11, 1.0), 2048);
        const auto fit_s = estimate_decay(fourier_coeffs(g, 1, 512, SeqKind::sine), 8, 512);
        const auto fit_c = estimate_decay(fourier_coeffs(g, 1, 512, SeqKind::cosine), 8, 512);
        CHECK(std::abs(fit_s.exponent - (alpha + 0.55)) < 0.15);
        CHECK(std::abs(fit_c.exponent - (alpha + 0.55)) < 0.15);
    }

    TEST_CASE("describe reports the variant metadata")
    {
        const PotentialInfo z = describe(PotentialSpec::zero());
        CHECK(z.variant == "zero");
        CHECK(!z.alpha_relevant);

        const PotentialInfo s = describe(PotentialSpec::step({{0.5, 1.0}}));
        CHECK(s.variant == "step");
        CHECK(s.nominal_alpha == doctest::Approx(0.49));

        const PotentialInfo f = describe(PotentialSpec::fourier_random(0.25, 64, 3, 0.5));
        CHECK(f.nominal_alpha == doctest::Approx(0.25));
        CHECK(f.params.at("n_modes") == "64");
    }

    TEST_CASE("from_file round-trips the CSV format, breakpoints included")
    {
        const GridFunction orig = realize(PotentialSpec::step({{0.25, 1.0}, {0.75, -0.5}}), 64);
        const std::string path = "/tmp/slspec_test_potential.csv";
        io::write_file(path, io::csv_of_gridfun(orig));
        const GridFunction back = realize(PotentialSpec::from_file(path), 64);
        REQUIRE(back.breakpoints.size() == 2);
        for (int k = 0; k <= 64; ++k)
            CHECK(std::abs(back.value_right(k) - orig.value_right(k)) < 1e-15);
        CHECK(back.value_left(16) == orig.value_left(16));
        const PotentialInfo info = describe(PotentialSpec::from_file(path));
        CHECK(info.params.at("header").find("GridFunction M=64") != std::string::npos);
        // grid mismatch is a config error
        CHECK_THROWS_AS(realize(PotentialSpec::from_file(path), 128), ConfigError);
        std::remove(path.c_str());
    }
}
