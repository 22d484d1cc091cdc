#ifndef SLSPEC_TAUSERIES_HPP
#define SLSPEC_TAUSERIES_HPP

#include <vector>

#include "slspec/gridfun.hpp"
#include "slspec/propagator.hpp"

namespace slspec {

// Iterated-integral coefficients tau_n and their signed sums tau^+/- that
// form the integral kernels of the characteristic functions; tail_bound is
// the exact factorial remainder sum_{n>N} |tau|^n / sqrt((n-1)! n!).
struct TauSeries {
    std::vector<GridFunction> tau_n; // tau_n[i] holds tau_{i+1}
    GridFunction tau_plus, tau_minus;
    int n_terms = 0;
    double tail_bound = 0.0;
    double tau_l2 = 0.0;
};

struct TauSeriesOptions {
    std::uint64_t seed = 0x51;
    int mc_samples = 200000;
};

// tau_n = I_n(tau, ..., tau); tau_1 is tau itself
GridFunction compute_tau_n(const GridFunction& tau, int n,
                           const TauSeriesOptions& opts = {});

TauSeries build_series(const GridFunction& tau, int n_terms,
                       const TauSeriesOptions& opts = {});

double factorial_tail_bound(double tau_l2, int n_terms);

// cos(lambda) + int tau^+(s) cos(lambda(1-2s)) ds              (Neumann-Dirichlet)
// sinc(lambda) + int tau^-(s) (1-2s) sinc(lambda(1-2s)) ds     (Dirichlet)
cplx series_char(const TauSeries& series, cplx lambda, BoundaryCondition bc);

// successive-approximation iterates U_n(1, lambda) of the Volterra equation;
// returns U_0..U_N
std::vector<Mat2> volterra_iterates(const GridFunction& tau, cplx lambda, int N);

} // namespace slspec

#endif
