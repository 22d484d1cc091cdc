#include <doctest.h>

#include <cmath>

#include "slspec/factorization.hpp"
#include "slspec/potentials.hpp"
#include "slspec/spectrum.hpp"

using namespace slspec;

TEST_SUITE("factorization")
{
    TEST_CASE("zero potential factorizes trivially")
    {
        const FactorizationResult fac = factorize(realize(PotentialSpec::zero(), 256));
        CHECK(fac.shift_C == 0.0);
        CHECK(fac.phi.max_abs() < 1e-14);
        CHECK(fac.tau.max_abs() < 1e-14);
        CHECK(fac.riccati_residual < 1e-14);
    }

    TEST_CASE("neutral solution for constant sigma is 1 + c x")
    {
        const GridFunction u = solve_neutral(realize(PotentialSpec::constant(1.0), 256));
        for (int k = 0; k <= 256; ++k)
            CHECK(std::abs(u.value_right(k) - (1.0 + (double)k / 256)) < 1e-11);
    }

    TEST_CASE("sigma = -2 vanishes mid-interval and triggers the shift")
    {
        const GridFunction sigma = realize(PotentialSpec::constant(-2.0), 256);
        const GridFunction u = solve_neutral(sigma);
        // u = 1 - 2x crosses zero at 1/2
        double min_abs = 1e300;
        for (const auto& v : u.values) min_abs = std::min(min_abs, std::abs(v));
        CHECK(min_abs < 1e-2);

        const auto [C, shifted] = accretive_shift(sigma);
        CHECK(C > 0.0);
        const GridFunction u2 = solve_neutral(shifted);
        double m2 = 1e300;
        for (const auto& v : u2.values) m2 = std::min(m2, std::abs(v));
        CHECK(m2 >= neutral_min_abs);
    }

    TEST_CASE("zero shift is only accepted with a non-vanishing neutral solution")
    {
        const auto [C, shifted] = accretive_shift(realize(PotentialSpec::constant(0.5), 256));
        CHECK(C == 0.0);
        const GridFunction u = solve_neutral(shifted);
        double m = 1e300;
        for (const auto& v : u.values) m = std::min(m, std::abs(v));
        CHECK(m >= neutral_min_abs);
    }

    TEST_CASE("closed forms for constant sigma: tau = c/(1+cx), phi = -c^2 x/(1+cx)")
    {
        const double c = 1.0;
        const FactorizationResult fac = factorize(realize(PotentialSpec::constant(c), 512));
        CHECK(fac.shift_C == 0.0);
        for (int k = 0; k <= 512; ++k) {
            const double x = (double)k / 512;
            CHECK(std::abs(fac.tau.value_right(k) - c / (1.0 + c * x)) < 1e-10);
            CHECK(std::abs(fac.phi.value_right(k) + c * c * x / (1.0 + c * x)) < 1e-10);
        }
        CHECK(std::abs(fac.phi.value_right(0)) < 1e-12); // phi(0) = 0
        CHECK(fac.riccati_residual <= riccati_tolerance);
    }

    TEST_CASE("tilde_phi carries the gamma-smoothness shadow")
    {
        // Decay proxy for "tilde_phi in W_2^gamma": its boundary-corrected
        // sine coefficients fit at gamma + 0.5 or better, and never worse than
        // phi's.  A direct phi-vs-tilde_phi gap of min{alpha,1-alpha} would
        // presume phi saturates its W_2^{2 alpha} bound, which these random
        // potentials do not.
        for (double alpha : {0.25, 0.5, 0.75}) {
            const FactorizationResult fac =
                factorize(realize(PotentialSpec::fourier_random(alpha, 256, 17, 0.5), 2048));
            auto corrected_fit = [&](const GridFunction& f) {
                GridFunction g = f;
                const cplx f0 = f.value_right(0), f1 = f.value_left(f.cells);
                for (int k = 0; k <= f.cells; ++k)
                    g.values[(size_t)k] -= f0 + (f1 - f0) * ((double)k / f.cells);
                g.fine.clear();
                g.fine_rate = 0;
                return estimate_decay(fourier_coeffs(g, 1, 256, SeqKind::sine), 8, 256)
                    .exponent;
            };
            const double gamma = std::min(3.0 * alpha, 1.0 + alpha);
            const double fit_phi = corrected_fit(fac.phi);
            const double fit_tilde = corrected_fit(fac.tilde_phi);
            CHECK(fit_tilde >= gamma + 0.5 - 0.2);
            CHECK(fit_tilde >= fit_phi - 0.2);
        }
    }

    TEST_CASE("shift bookkeeping closes the loop on the spectrum")
    {
        // sigma = -2 (q = 0 with a Robin offset): the Dirichlet spectrum is pi n
        const GridFunction sigma = realize(PotentialSpec::constant(-2.0), 512);
        const FactorizationResult fac = factorize(sigma);
        REQUIRE(fac.shift_C > 0.0);
        SpectralSequence seq =
            locate_real(fac.tau, SystemForm::tau_form, BoundaryCondition::dirichlet, 8);
        seq.shift_C = fac.shift_C;
        const SpectralSequence back = unshift(seq);
        for (int n = 1; n <= 8; ++n)
            CHECK(std::abs(back.values[(size_t)n - 1] - pi * n) < 1e-7);
    }

    TEST_CASE("Coulomb-type log potential: shift engages, routes agree")
    {
        // sigma = ln x (clipped at 1/M).  The offset sigma(0) = ln(1/M) is a
        // strongly binding Robin parameter, so only the Dirichlet spectrum
        // stays on the real axis; it is offset-independent.
        const GridFunction sigma = realize(PotentialSpec::log_singularity(1.0), 2048);
        const FactorizationResult fac = factorize(sigma);
        CHECK(fac.shift_C > 0.0);
        CHECK(fac.riccati_residual <= riccati_tolerance);
        const auto dir =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, 8);
        SpectralSequence dt =
            locate_real(fac.tau, SystemForm::tau_form, BoundaryCondition::dirichlet, 8);
        dt.shift_C = fac.shift_C;
        const auto du = unshift(dt);
        for (int n = 0; n < 8; ++n)
            CHECK(std::abs(du.values[(size_t)n] - dir.values[(size_t)n]) < 1e-7);
    }

    TEST_CASE("spectra agree between the sigma route and the tau route")
    {
        const GridFunction sigma =
            realize(PotentialSpec::fourier_random(0.5, 64, 23, 0.5), 512);
        const FactorizationResult fac = factorize(sigma);
        for (BoundaryCondition bc :
             {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
            SpectralSequence a =
                locate_real(fac.shifted_sigma, SystemForm::sigma_form, bc, 8);
            SpectralSequence b = locate_real(fac.tau, SystemForm::tau_form, bc, 8);
            a.shift_C = b.shift_C = fac.shift_C;
            const SpectralSequence ua = unshift(a), ub = unshift(b);
            for (int n = 0; n < 8; ++n)
                CHECK(std::abs(ua.values[(size_t)n] - ub.values[(size_t)n]) < 1e-7);
        }
    }
}
