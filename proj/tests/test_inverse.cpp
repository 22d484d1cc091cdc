#include <doctest.h>

#include <cmath>

#include "slspec/inverse.hpp"
#include "slspec/potentials.hpp"
#include "slspec/spectrum.hpp"

using namespace slspec;

namespace {

CoeffSeq plain_seq(std::vector<cplx> v)
{
    return CoeffSeq(SeqKind::plain, 1, std::move(v));
}

} // namespace

TEST_SUITE("inverse")
{
    TEST_CASE("zero remainders synthesize the zero function")
    {
        const GridFunction star =
            sigma_star(plain_seq(std::vector<cplx>(16, 0.0)),
                       plain_seq(std::vector<cplx>(16, 0.0)), 256);
        CHECK(star.max_abs() == 0.0);
    }

    TEST_CASE("sigma_star is linear in the remainder data")
    {
        std::vector<cplx> l1(8), m1(8), l2(8), m2(8);
        for (int n = 0; n < 8; ++n) {
            l1[(size_t)n] = cplx(0.1 / (n + 1), 0.02);
            m1[(size_t)n] = cplx(-0.05 / (n + 1), 0.0);
            l2[(size_t)n] = cplx(0.03, -0.01 * n);
            m2[(size_t)n] = cplx(0.07 / (n + 1), 0.01);
        }
        std::vector<cplx> ls(8), ms(8);
        for (int n = 0; n < 8; ++n) { ls[(size_t)n] = l1[(size_t)n] + l2[(size_t)n];
                                      ms[(size_t)n] = m1[(size_t)n] + m2[(size_t)n]; }
        const GridFunction a = sigma_star(plain_seq(l1), plain_seq(m1), 128);
        const GridFunction b = sigma_star(plain_seq(l2), plain_seq(m2), 128);
        const GridFunction s = sigma_star(plain_seq(ls), plain_seq(ms), 128);
        for (int k = 0; k <= 128; ++k)
            CHECK(std::abs(s.value_right(k) - a.value_right(k) - b.value_right(k)) < 1e-13);
    }

    TEST_CASE("resolution guard: N must stay at or below M/8")
    {
        CHECK_THROWS_AS(sigma_star(plain_seq(std::vector<cplx>(33, 0.0)),
                                   plain_seq(std::vector<cplx>(33, 0.0)), 256),
                        ResolutionError);
    }

    TEST_CASE("endpoints vanish: pure sine synthesis")
    {
        std::vector<cplx> l(12), m(12);
        for (int n = 0; n < 12; ++n) {
            l[(size_t)n] = 0.2 / (n + 1);
            m[(size_t)n] = -0.1 / (n + 1);
        }
        const GridFunction star = sigma_star(plain_seq(l), plain_seq(m), 256);
        CHECK(std::abs(star.value_right(0)) < 1e-13);
        CHECK(std::abs(star.value_right(256)) < 1e-13);
    }

    TEST_CASE("Parseval: dropping the top term changes the L2 norm exactly")
    {
        std::vector<cplx> l(8), m(8);
        for (int n = 0; n < 8; ++n) {
            l[(size_t)n] = 0.3 / (n + 1);
            m[(size_t)n] = 0.15 / ((n + 1) * (n + 1));
        }
        const GridFunction sN = sigma_star(plain_seq(l), plain_seq(m), 512);
        std::vector<cplx> l7(l.begin(), l.end() - 1), m7(m.begin(), m.end() - 1);
        const GridFunction sN1 = sigma_star(plain_seq(l7), plain_seq(m7), 512);
        const double diff2 = std::pow(l2_norm(sub(sN, sN1)), 2.0);
        // dropped terms: 2 mu_8 sin(15 pi t) - 2 lambda_8 sin(16 pi t)
        const double expected =
            2.0 * (std::norm(m[7]) + std::norm(l[7]));
        CHECK(diff2 == doctest::Approx(expected).epsilon(1e-10));
    }

    TEST_CASE("smoothness gain is capped when sigma_star equals sigma")
    {
        const GridFunction zero = realize(PotentialSpec::zero(), 256);
        const GridFunction star =
            sigma_star(plain_seq(std::vector<cplx>(16, 0.0)),
                       plain_seq(std::vector<cplx>(16, 0.0)), 256);
        const SmoothnessGain g = smoothness_gain(star, zero, 0.5);
        CHECK(g.capped);
    }

    TEST_CASE("detect_jumps needs at least 64 modes and returns empty on smooth input")
    {
        const GridFunction smooth = GridFunction::sample(
            2048, [](double x) { return cplx(std::sin(pi * x) + 0.2 * std::sin(3 * pi * x), 0.0); });
        CHECK_THROWS_AS(detect_jumps(smooth, 32), std::invalid_argument);
        CHECK(detect_jumps(smooth, 128).empty());
    }

    TEST_CASE("jump detection on truncated step series: position exact to the node, "
              "shift-equivariant")
    {
        const int M = 2048, N = 128;
        auto star_of_step = [&](double x0) {
            // truncated sine expansion of the unit step at x0
            std::vector<cplx> b((size_t)2 * N);
            for (int k = 1; k <= 2 * N; ++k)
                b[(size_t)k - 1] =
                    2.0 * (std::cos(pi * k * x0) - std::cos(pi * k)) / (pi * k);
            return synthesize(CoeffSeq(SeqKind::sine, 1, b), M);
        };
        const int node1 = 819, shift = 3;
        const double x1 = (double)node1 / M, x2 = (double)(node1 + shift) / M;
        const auto j1 = detect_jumps(star_of_step(x1), N);
        const auto j2 = detect_jumps(star_of_step(x2), N);
        REQUIRE(j1.size() == 1);
        REQUIRE(j2.size() == 1);
        CHECK(j1[0].position == doctest::Approx(x1).epsilon(1e-12));
        CHECK(j2[0].position - j1[0].position == doctest::Approx((double)shift / M));
        CHECK(std::abs(j1[0].size - 1.0) < 0.05);
    }

    TEST_CASE("two deltas at 0.3 and 0.7 with sizes 1 and -0.5 are both recovered")
    {
        const int M = 2560, n_max = 200;
        const GridFunction sigma =
            realize(PotentialSpec::step({{0.3, 1.0}, {0.7, -0.5}}), M);
        const auto dir =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, n_max);
        const auto neu =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::neumann, n_max);
        const GridFunction star = sigma_star(remainders(dir), remainders(neu), M);
        const auto jumps = detect_jumps(star, n_max);
        REQUIRE(jumps.size() == 2);
        CHECK(std::abs(jumps[0].position - 0.3) <= 0.005);
        CHECK(std::abs(jumps[0].size - cplx(1.0)) <= 0.05);
        CHECK(std::abs(jumps[1].position - 0.7) <= 0.005);
        CHECK(std::abs(jumps[1].size - cplx(-0.5)) <= 0.05);
    }

    TEST_CASE("pipeline: smooth random potential reconstructs without spurious jumps")
    {
        const int M = 1024, n_max = 64;
        const GridFunction sigma =
            realize(PotentialSpec::fourier_random(0.5, 64, 29, 0.4), M);
        const auto dir =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, n_max);
        const auto neu =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::neumann, n_max);
        const GridFunction star = sigma_star(remainders(dir), remainders(neu), M);
        CHECK(detect_jumps(star, n_max).empty());
        // sigma_star tracks sigma up to a smoother correction: the gain is positive
        const SmoothnessGain g = smoothness_gain(star, sigma, 0.5, 2 * n_max);
        CHECK(g.value >= 0.0);
    }
}
