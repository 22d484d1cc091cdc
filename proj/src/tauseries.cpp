#include "slspec/tauseries.hpp"

#include <cmath>

namespace slspec {

GridFunction compute_tau_n(const GridFunction& tau, int n, const TauSeriesOptions& opts)
{
    if (n < 1 || n > 5)
        throw std::invalid_argument("compute_tau_n: n must be in [1,5]");
    if (n == 1) return tau;
    IteratedIntegralOptions io;
    io.seed = opts.seed;
    io.mc_samples = opts.mc_samples;
    return iterated_integral_In(std::vector<GridFunction>((size_t)n, tau), io).value;
}

double factorial_tail_bound(double tau_l2, int n_terms)
{
    double total = 0.0;
    double log_num = 0.0; // log tau^n
    for (int n = n_terms + 1; n <= 400; ++n) {
        log_num = n * std::log(std::max(tau_l2, 1e-300));
        double log_den = 0.5 * (std::lgamma((double)n) + std::lgamma((double)n + 1));
        const double term = std::exp(log_num - log_den);
        total += term;
        if (term < 1e-18 * std::max(total, 1e-300)) break;
    }
    return total;
}

TauSeries build_series(const GridFunction& tau, int n_terms, const TauSeriesOptions& opts)
{
    if (n_terms < 1 || n_terms > 5)
        throw std::invalid_argument("build_series: n_terms must be in [1,5]");

    TauSeries s;
    s.n_terms = n_terms;
    s.tau_l2 = l2_norm(tau);
    s.tail_bound = factorial_tail_bound(s.tau_l2, n_terms);

    for (int n = 1; n <= n_terms; ++n)
        s.tau_n.push_back(compute_tau_n(tau, n, opts));

    s.tau_plus = s.tau_n[0];
    s.tau_minus = scale(s.tau_n[0], -1.0);
    for (int n = 2; n <= n_terms; ++n) {
        s.tau_plus = add(s.tau_plus, s.tau_n[(size_t)n - 1]);
        s.tau_minus = n % 2 == 0 ? add(s.tau_minus, s.tau_n[(size_t)n - 1])
                                 : sub(s.tau_minus, s.tau_n[(size_t)n - 1]);
    }
    return s;
}

cplx series_char(const TauSeries& series, cplx lambda, BoundaryCondition bc)
{
    const GridFunction& kernel =
        bc == BoundaryCondition::neumann ? series.tau_plus : series.tau_minus;
    const int M = kernel.cells;
    if (std::abs(lambda) > 0.5 * M)
        throw ResolutionError("series_char: |lambda| beyond the sampling guard M/2");

    // real lambda goes through the product-integration rule via
    // cos(l - 2lx) = cos l cos 2lx + sin l sin 2lx; complex or tiny lambda
    // falls back to pointwise quadrature of the series-guarded integrand
    if (std::abs(lambda.imag()) < 1e-14 && std::abs(lambda) >= 1e-4) {
        const double l = lambda.real();
        const auto [C, S] = oscillatory_integrals(kernel, 2.0 * l);
        if (bc == BoundaryCondition::neumann)
            return std::cos(l) * (1.0 + C) + std::sin(l) * S;
        return (std::sin(l) * (1.0 + C) - std::cos(l) * S) / l;
    }
    GridFunction integrand = kernel;
    for (int k = 0; k <= M; ++k) {
        const double u = 1.0 - 2.0 * kernel.node_x(k);
        const cplx w = bc == BoundaryCondition::neumann
                           ? std::cos(lambda * u)
                           : u * sinc_z(lambda * u);
        integrand.values[(size_t)k] *= w;
    }
    integrand.fine.clear();
    integrand.fine_rate = 0;
    const cplx base = bc == BoundaryCondition::neumann ? std::cos(lambda) : sinc_z(lambda);
    return base + quadrature(integrand);
}

std::vector<Mat2> volterra_iterates(const GridFunction& tau, cplx lambda, int N)
{
    if (N < 0 || N > 12)
        throw std::invalid_argument("volterra_iterates: N must be in [0,12]");
    const int M = tau.cells;
    if (std::abs(lambda) > 0.5 * M)
        throw ResolutionError("volterra_iterates: |lambda| beyond the sampling guard M/2");
    const double h = tau.h();

    const Mat2 A{0.0, 1.0, -lambda * lambda, 0.0};
    std::vector<Mat2> expA((size_t)M + 1), expAm((size_t)M + 1);
    for (int k = 0; k <= M; ++k) {
        expA[(size_t)k] = step_exponential(A, k * h);
        expAm[(size_t)k] = step_exponential(A, -(k * h));
    }

    std::vector<Mat2> result;
    result.reserve((size_t)N + 1);
    result.push_back(expA[(size_t)M]); // U_0(1) = e^A

    std::vector<Mat2> Un = expA; // U_n at all nodes, starting with U_0
    std::vector<Mat2> G((size_t)M + 1), P((size_t)M + 1), Unext((size_t)M + 1);

    for (int it = 1; it <= N; ++it) {
        for (int k = 0; k <= M; ++k) {
            const cplx t = tau.value_right(k);
            const Mat2& U = Un[(size_t)k];
            // e^{-tA} tau J U, with J = diag(1,-1)
            const Mat2 JU{t * U.a11, t * U.a12, -t * U.a21, -t * U.a22};
            G[(size_t)k] = expAm[(size_t)k] * JU;
        }
        // running integral of G: Simpson on cell pairs, 3-point rule at odd nodes
        P[0] = Mat2{};
        for (int k = 2; k <= M; k += 2)
            P[(size_t)k] = P[(size_t)k - 2] +
                           (h / 3.0) * (G[(size_t)k - 2] + 4.0 * G[(size_t)k - 1] + G[(size_t)k]);
        for (int k = 1; k <= M; k += 2) {
            if (k == M)
                P[(size_t)k] = P[(size_t)k - 1] + (h / 2.0) * (G[(size_t)k - 1] + G[(size_t)k]);
            else
                P[(size_t)k] = P[(size_t)k - 1] +
                               (h / 12.0) * (5.0 * G[(size_t)k - 1] + 8.0 * G[(size_t)k] -
                                             G[(size_t)k + 1]);
        }
        for (int k = 0; k <= M; ++k) Unext[(size_t)k] = expA[(size_t)k] * P[(size_t)k];
        Un.swap(Unext);
        result.push_back(Un[(size_t)M]);
    }
    return result;
}

} // namespace slspec
