#include "slspec/inverse.hpp"

#include <algorithm>
#include <cmath>

#include "slspec/parallel.hpp"

namespace slspec {

GridFunction sigma_star(const CoeffSeq& lambda_rem, const CoeffSeq& mu_rem, int M)
{
    if (lambda_rem.start_index != 1 || mu_rem.start_index != 1)
        throw std::invalid_argument("sigma_star: remainder sequences start at n = 1");
    const int N = lambda_rem.size();
    if (mu_rem.size() != N)
        throw std::invalid_argument("sigma_star: remainder sequences must have equal length");
    if (8 * N > M)
        throw ResolutionError("sigma_star: N = " + std::to_string(N) +
                              " beyond the resolution guard M/8");

    std::vector<cplx> b((size_t)2 * N, 0.0); // sine coefficients, index 1..2N
    for (int n = 1; n <= N; ++n) {
        b[(size_t)(2 * n - 1) - 1] = 2.0 * mu_rem.at(n);
        b[(size_t)(2 * n) - 1] = -2.0 * lambda_rem.at(n);
    }
    return synthesize(CoeffSeq(SeqKind::sine, 1, std::move(b)), M);
}

namespace {

// sine coefficients after subtracting the chord through the endpoints, so the
// fit sees interior smoothness instead of the 1/n boundary term
CoeffSeq interior_sine_coeffs(const GridFunction& f, int k_max)
{
    const cplx f0 = f.values[0];
    const cplx f1 = f.value_left(f.cells);
    GridFunction g = f;
    for (int k = 0; k <= f.cells; ++k) {
        const double x = f.node_x(k);
        g.values[(size_t)k] -= f0 + (f1 - f0) * x;
    }
    for (auto& b : g.breakpoints) {
        const double x = f.node_x(b.node);
        b.left -= f0 + (f1 - f0) * x;
    }
    g.fine.clear();
    g.fine_rate = 0;
    return fourier_coeffs(g, 1, k_max, SeqKind::sine);
}

} // namespace

SmoothnessGain smoothness_gain(const GridFunction& sigma_star, const GridFunction& sigma,
                               double alpha, int fit_max_index)
{
    (void)alpha; // nominal smoothness, recorded by the caller's report
    if (sigma_star.cells != sigma.cells)
        throw GridMismatchError("smoothness_gain: grids differ");
    int k_max = fit_max_index > 0 ? fit_max_index : sigma.cells / 8;
    k_max = std::min(k_max, sigma.cells / 4);

    const GridFunction diff = sub(sigma_star, sigma);
    const CoeffSeq cd = interior_sine_coeffs(diff, k_max);
    const CoeffSeq cs = interior_sine_coeffs(sigma, k_max);
    const DecayEstimate dd = estimate_decay(cd, 8, k_max);
    const DecayEstimate ds = estimate_decay(cs, 8, k_max);

    SmoothnessGain g;
    if (dd.all_zero || ds.all_zero || (dd.capped && ds.capped)) {
        g.capped = true;
        g.value = DecayEstimate::cap;
        return g;
    }
    g.value = dd.exponent - ds.exponent;
    g.capped = dd.capped;
    return g;
}

std::vector<Jump> detect_jumps(const GridFunction& sigma_star, int n_used)
{
    if (n_used < 64)
        throw std::invalid_argument("detect_jumps: need n_used >= 64");
    const int M = sigma_star.cells;
    const int K = std::min(2 * n_used, M / 4);

    // sine coefficients with a Lanczos factor over the top octave
    std::vector<cplx> b((size_t)K);
    par::parallel_for(K, [&](std::int64_t i) {
        b[(size_t)i] = 2.0 * fourier_coeff(sigma_star, (int)i + 1, SeqKind::sine);
    });
    const int half = K / 2;
    for (int k = half + 1; k <= K; ++k)
        b[(size_t)k - 1] *= sinc_z(pi * (double)(k - half) / (double)(K - half + 1));

    // term-wise derivative of the smoothed series
    std::vector<double> deriv((size_t)M + 1);
    par::parallel_for(M + 1, [&](std::int64_t j) {
        const double x = (double)j / M;
        cplx acc = 0.0;
        for (int k = 1; k <= K; ++k)
            acc += b[(size_t)k - 1] * (pi * k) * std::cos(pi * k * x);
        deriv[(size_t)j] = std::abs(acc);
    });

    std::vector<double> sorted = deriv;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double threshold = 5.0 * median;

    // candidate peaks, keeping one representative per cluster; the sine
    // synthesis pins sigma*(0) = sigma*(1) = 0, so a band of two window
    // widths at each end is off limits (phantom roll-off transitions live
    // there)
    const int w_lo = std::max(1, (int)std::lround(2.0 / n_used * M));
    const int w_hi = (int)std::lround(10.0 / n_used * M);
    const int suppress = w_hi;
    const int margin = 2 * w_hi;

    std::vector<int> peaks;
    for (int j = margin; j <= M - margin; ++j) {
        if (deriv[(size_t)j] <= threshold) continue;
        if (deriv[(size_t)j] < deriv[(size_t)j - 1] || deriv[(size_t)j] < deriv[(size_t)j + 1])
            continue;
        if (!peaks.empty() && j - peaks.back() <= suppress) {
            if (deriv[(size_t)j] > deriv[(size_t)peaks.back()]) peaks.back() = j;
            continue;
        }
        peaks.push_back(j);
    }

    std::vector<Jump> jumps;
    for (int j : peaks) {
        auto window_mean = [&](int lo, int hi) {
            cplx acc = 0.0;
            int cnt = 0;
            for (int k = std::max(0, lo); k <= std::min(M, hi); ++k, ++cnt)
                acc += sigma_star.value_right(k);
            return cnt > 0 ? acc / (double)cnt : cplx(0.0);
        };
        const cplx upper = window_mean(j + w_lo, j + w_hi);
        const cplx lower = window_mean(j - w_hi, j - w_lo);
        jumps.push_back({(double)j / M, upper - lower});
    }

    // ringing sidelobes of a dominant jump clear the derivative gate but
    // carry near-zero mass; drop anything below 5% of the largest size
    double top = 0.0;
    for (const auto& j : jumps) top = std::max(top, std::abs(j.size));
    std::vector<Jump> kept;
    for (const auto& j : jumps)
        if (std::abs(j.size) >= 0.05 * top) kept.push_back(j);
    return kept;
}

} // namespace slspec
