#include <doctest.h>

#include <cmath>

#include "slspec/gridfun.hpp"
#include "slspec/rng.hpp"

using namespace slspec;

namespace {

GridFunction fn_of(int M, double (*f)(double))
{
    return GridFunction::sample(M, [&](double x) { return cplx(f(x), 0.0); });
}

double max_gap(const GridFunction& a, const GridFunction& b)
{
    double worst = 0.0;
    for (int k = 0; k <= a.cells; ++k)
        worst = std::max(worst, std::abs(a.value_right(k) - b.value_right(k)));
    return worst;
}

// independent midpoint Riemann oracle for the correlation of sin(pi x) with
// itself, evaluated analytically
cplx sin_correlate_oracle(double x, int steps)
{
    const double len = 1.0 - x;
    cplx acc = 0.0;
    for (int i = 0; i < steps; ++i) {
        const double t = len * (i + 0.5) / steps;
        acc += std::sin(pi * (x + t)) * std::sin(pi * t);
    }
    return acc * (len / steps);
}

} // namespace

TEST_SUITE("gridfun")
{
    TEST_CASE("quadrature of the classics")
    {
        CHECK(std::abs(quadrature(GridFunction::constant(2048, 1.0)) - 1.0) < 1e-14);
        CHECK(std::abs(quadrature(fn_of(2048, [](double x) { return std::sin(pi * x); })) -
                       2.0 / pi) < 1e-12);
        CHECK(std::abs(quadrature(fn_of(2048, [](double x) { return x * x; })) - 1.0 / 3.0) <
              1e-14);
    }

    TEST_CASE("piecewise quadrature respects breakpoints")
    {
        // f = 0 on [0,1/2), 1 on (1/2,1]: integral exactly 1/2
        const int M = 64;
        std::vector<cplx> v((size_t)M + 1, 0.0);
        for (int k = M / 2; k <= M; ++k) v[(size_t)k] = 1.0;
        GridFunction f(M, std::move(v), {{M / 2, 0.0}});
        CHECK(std::abs(quadrature(f) - 0.5) < 1e-15);
    }

    TEST_CASE("Fourier coefficients of 1 and x")
    {
        const GridFunction one = GridFunction::constant(2048, 1.0);
        for (int n = 1; n <= 12; ++n) {
            const double expected = (1.0 - std::pow(-1.0, n)) / (pi * n);
            CHECK(std::abs(fourier_coeff(one, n, SeqKind::sine) - expected) < 1e-12);
            CHECK(std::abs(fourier_coeff(one, n, SeqKind::cosine)) < 1e-12);
        }
        const GridFunction lin = fn_of(2048, [](double x) { return x; });
        for (int n = 1; n <= 6; ++n)
            CHECK(std::abs(fourier_coeff(lin, 2 * n, SeqKind::sine) + 1.0 / (2.0 * pi * n)) <
                  1e-12);
    }

    TEST_CASE("resolution guard rejects n beyond M/4")
    {
        const GridFunction one = GridFunction::constant(64, 1.0);
        CHECK_NOTHROW(fourier_coeff(one, 16, SeqKind::sine));
        CHECK_THROWS_AS(fourier_coeff(one, 17, SeqKind::sine), ResolutionError);
    }

    TEST_CASE("V multiplies by 1-2x and R reflects")
    {
        const int M = 64;
        const GridFunction one = GridFunction::constant(M, 1.0);
        const GridFunction v = apply_V(one);
        CHECK(v.value_right(M / 2) == cplx(0.0));
        for (int k = 0; k <= M; ++k)
            CHECK(std::abs(v.value_right(k) - (1.0 - 2.0 * (double)k / M)) < 1e-15);

        const GridFunction lin = fn_of(M, [](double x) { return x; });
        const GridFunction r = apply_R(lin);
        for (int k = 0; k <= M; ++k)
            CHECK(std::abs(r.value_right(k) - (1.0 - (double)k / M)) < 1e-15);
        CHECK(max_gap(apply_R(r), lin) == 0.0);
    }

    TEST_CASE("R is an involution and anti-commutes with V")
    {
        const GridFunction f =
            GridFunction::sample(128, [](double x) { return cplx(std::sin(5.0 * x), x); });
        CHECK(max_gap(apply_R(apply_R(f)), f) == 0.0);
        CHECK(max_gap(apply_R(apply_V(f)), scale(apply_V(apply_R(f)), -1.0)) < 1e-15);
        // reflection permutes samples, so the quadrature of |f|^2 is untouched
        CHECK(l2_norm(apply_R(f)) == doctest::Approx(l2_norm(f)).epsilon(1e-14));
    }

    TEST_CASE("reflection mirrors breakpoints")
    {
        const int M = 64;
        std::vector<cplx> v((size_t)M + 1, 0.0);
        for (int k = M / 4; k <= M; ++k) v[(size_t)k] = 1.0;
        GridFunction f(M, std::move(v), {{M / 4, 0.0}});
        const GridFunction r = apply_R(f);
        REQUIRE(r.breakpoints.size() == 1);
        CHECK(r.breakpoints[0].node == 3 * M / 4);
        CHECK(r.value_left(3 * M / 4) == cplx(1.0));
        CHECK(r.value_right(3 * M / 4) == cplx(0.0));
    }

    TEST_CASE("convolution basics")
    {
        const int M = 256;
        const GridFunction one = GridFunction::constant(M, 1.0);
        const GridFunction lin = fn_of(M, [](double x) { return x; });
        const GridFunction c1 = convolve(one, one);
        const GridFunction c2 = convolve(lin, one);
        CHECK(c1.value_right(0) == cplx(0.0));
        for (int k = 0; k <= M; ++k) {
            const double x = (double)k / M;
            CHECK(std::abs(c1.value_right(k) - x) < 1e-14);
            CHECK(std::abs(c2.value_right(k) - 0.5 * x * x) < 1e-13);
        }
    }

    TEST_CASE("cumulative integral of products")
    {
        const int M = 256;
        const GridFunction one = GridFunction::constant(M, 1.0);
        const GridFunction lin = fn_of(M, [](double x) { return x; });
        const GridFunction h1 = cumulative_integral(one, one);
        const GridFunction h2 = cumulative_integral(lin, lin);
        for (int k = 0; k <= M; ++k) {
            const double x = (double)k / M;
            CHECK(std::abs(h1.value_right(k) - x) < 1e-14);
            CHECK(std::abs(h2.value_right(k) - x * x * x / 3.0) < 2e-8); // odd-prefix trapezoid cell
        }
        // consistency with the full quadrature
        const GridFunction f =
            GridFunction::sample(M, [](double x) { return cplx(std::cos(3 * x), 0.2 * x); });
        const GridFunction g =
            GridFunction::sample(M, [](double x) { return cplx(std::sin(2 * x), -x); });
        CHECK(std::abs(cumulative_integral(f, g).value_right(M) -
                       quadrature(multiply(f, g))) < 1e-15);
    }

    TEST_CASE("correlation basics and the 2-d Riemann oracle")
    {
        const int M = 256;
        const GridFunction one = GridFunction::constant(M, 1.0);
        const GridFunction c = correlate(one, one);
        for (int k = 0; k <= M; ++k)
            CHECK(std::abs(c.value_right(k) - (1.0 - (double)k / M)) < 1e-14);
        CHECK(std::abs(c.value_right(M)) == 0.0);

        const GridFunction s = fn_of(M, [](double x) { return std::sin(pi * x); });
        const GridFunction cs = correlate(s, s);
        for (int k : {0, 32, 100, 180, 256}) {
            const cplx oracle = sin_correlate_oracle((double)k / M, 200000);
            CHECK(std::abs(cs.value_right(k) - oracle) < 1e-8);
        }
    }

    TEST_CASE("grid mismatch is rejected")
    {
        CHECK_THROWS_AS(convolve(GridFunction::constant(64, 1.0),
                                 GridFunction::constant(128, 1.0)),
                        GridMismatchError);
    }

    TEST_CASE("product identities against direct quadrature")
    {
        const int M = 512;
        // f = g = 1: c_n(f)c_n(g) = 0 = c_n(h1) for n >= 1
        const GridFunction one = GridFunction::constant(M, 1.0);
        const GridFunction h1 = product_identity_h(one, one, ProductIdentity::h1);
        for (int n = 1; n <= 8; ++n)
            CHECK(std::abs(fourier_coeff(h1, n, SeqKind::cosine)) < 1e-10);

        // f = g = sin(pi x): s_1(f)s_1(g) = 1/4 = c_1(h2)
        const GridFunction s = fn_of(M, [](double x) { return std::sin(pi * x); });
        const GridFunction h2 = product_identity_h(s, s, ProductIdentity::h2);
        CHECK(std::abs(fourier_coeff(h2, 1, SeqKind::cosine) - 0.25) < 1e-8);

        // g = 0 kills all three
        const GridFunction z = GridFunction::constant(M, 0.0);
        const GridFunction f =
            GridFunction::sample(M, [](double x) { return cplx(std::cos(2 * x), x); });
        for (ProductIdentity which :
             {ProductIdentity::h1, ProductIdentity::h2, ProductIdentity::h3})
            CHECK(product_identity_h(f, z, which).max_abs() < 1e-15);
    }

    TEST_CASE("I2 equals R(Rf * g) and correlate")
    {
        const int M = 256;
        const GridFunction f = fn_of(M, [](double x) { return std::sin(pi * x) + 0.3 * x; });
        const GridFunction g = fn_of(M, [](double x) { return std::cos(2.0 * x); });
        const GridFunction via_R = apply_R(convolve(apply_R(f), g));
        const GridFunction i2 = iterated_integral_In({f, g}).value;
        CHECK(max_gap(i2, via_R) < 1e-8);
        CHECK(max_gap(i2, correlate(f, g)) == 0.0);
    }

    TEST_CASE("I3 of constants is s(1-s), with norm below the factorial bound")
    {
        const int M = 128;
        const GridFunction one = GridFunction::constant(M, 1.0);
        const GridFunction g = iterated_integral_In({one, one, one}).value;
        for (int k = 0; k <= M; ++k) {
            const double s = (double)k / M;
            CHECK(std::abs(g.value_right(k) - s * (1.0 - s)) < 1e-12);
        }
        CHECK(l2_norm(g) == doctest::Approx(std::sqrt(1.0 / 30.0)).epsilon(1e-6));
        CHECK(l2_norm(g) < 1.0 / std::sqrt(2.0)); // factorial bound 1/sqrt((n-1)!)
    }

    TEST_CASE("I4 Monte Carlo agrees with an independent rejection sampler")
    {
        const int M = 32;
        const GridFunction one = GridFunction::constant(M, 1.0);
        IteratedIntegralOptions opts;
        opts.mc_samples = 60000;
        opts.seed = 99;
        const auto r4 = iterated_integral_In({one, one, one, one}, opts);

        // plain-LCG rejection oracle for the simplex volume with constraints
        auto oracle = [&](double s) {
            std::uint64_t state = 88172645463325252ull;
            auto unif = [&]() {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                return (double)(state >> 11) * 0x1.0p-53;
            };
            const int N = 200000;
            int hits = 0;
            for (int i = 0; i < N; ++i) {
                double y[3] = {unif(), unif(), unif()};
                std::sort(y, y + 3, std::greater<double>());
                const double xi = y[0] - y[1] + y[2];
                if (y[0] <= s + xi && s + xi <= 1.0) ++hits;
            }
            return (double)hits / N / 6.0; // simplex volume 1/3!
        };
        for (int k : {8, 16, 24}) {
            const double s = (double)k / M;
            const double est = r4.value.value_right(k).real();
            const double ref = oracle(s);
            CHECK(std::abs(est - ref) < 5e-3);
            CHECK(r4.std_error[(size_t)k] < 5e-3);
        }
    }

    TEST_CASE("unreachable Monte Carlo tolerance raises an accuracy error")
    {
        const GridFunction one = GridFunction::constant(32, 1.0);
        IteratedIntegralOptions opts;
        opts.mc_samples = 500;
        opts.tolerance = 1e-9;
        CHECK_THROWS_AS(iterated_integral_In({one, one, one, one}, opts), AccuracyError);
    }

    TEST_CASE("In rejects n outside [2,5]")
    {
        const GridFunction one = GridFunction::constant(32, 1.0);
        CHECK_THROWS_AS(iterated_integral_In({one}), std::invalid_argument);
        CHECK_THROWS_AS(iterated_integral_In({one, one, one, one, one, one}),
                        std::invalid_argument);
    }

    TEST_CASE("synthesize produces partial sums and round-trips")
    {
        std::vector<cplx> a(1, 1.0);
        const GridFunction s = synthesize(CoeffSeq(SeqKind::sine, 1, a), 256);
        for (int k = 0; k <= 256; ++k)
            CHECK(std::abs(s.value_right(k) - std::sin(pi * k / 256.0)) < 1e-14);

        const GridFunction z =
            synthesize(CoeffSeq(SeqKind::sine, 1, std::vector<cplx>(8, 0.0)), 64);
        CHECK(z.max_abs() == 0.0);

        // round trip: the coefficient comes back halved (int sin^2 = 1/2)
        std::vector<cplx> coeffs = {cplx(0.7, 0.0), cplx(-0.2, 0.1), cplx(0.05, 0.0)};
        const GridFunction f = synthesize(CoeffSeq(SeqKind::sine, 1, coeffs), 512);
        for (int n = 1; n <= 3; ++n)
            CHECK(std::abs(fourier_coeff(f, n, SeqKind::sine) - 0.5 * coeffs[(size_t)n - 1]) <
                  1e-10);
        CHECK_THROWS_AS(synthesize(CoeffSeq(SeqKind::sine, 1, std::vector<cplx>(65, 1.0)), 256),
                        ResolutionError);
    }

    TEST_CASE("cumulative integration smooths synthesized roughness")
    {
        // coefficient decay alpha+0.55 in, gain of at least alpha-0.2 out
        const int M = 2048, N = 256;
        for (double alpha : {0.25, 0.5}) {
            std::vector<cplx> af((size_t)N), ag((size_t)N);
            for (int n = 1; n <= N; ++n) {
                af[(size_t)n - 1] = rng::sign(1, 0, (std::uint64_t)n) *
                                    std::pow((double)n, -alpha - 0.55);
                ag[(size_t)n - 1] = rng::sign(2, 0, (std::uint64_t)n) *
                                    std::pow((double)n, -alpha - 0.55);
            }
            const GridFunction f = synthesize(CoeffSeq(SeqKind::sine, 1, af), M);
            const GridFunction g = synthesize(CoeffSeq(SeqKind::sine, 1, ag), M);
            GridFunction h = cumulative_integral(f, g);
            // subtract the chord so the fit sees interior smoothness
            const cplx h1 = h.value_right(M);
            for (int k = 0; k <= M; ++k)
                h.values[(size_t)k] -= h1 * ((double)k / M);

            const double fit_f =
                estimate_decay(fourier_coeffs(f, 1, N, SeqKind::sine), 8, N).exponent;
            const double fit_h =
                estimate_decay(fourier_coeffs(h, 1, N, SeqKind::sine), 8, N).exponent;
            CHECK(fit_h - fit_f >= alpha - 0.2);
        }
    }
}
