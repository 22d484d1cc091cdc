#ifndef SLSPEC_FACTORIZATION_HPP
#define SLSPEC_FACTORIZATION_HPP

#include "slspec/gridfun.hpp"
#include "slspec/propagator.hpp"

namespace slspec {

// Output of the factorization: u is the non-vanishing zero-energy solution,
// phi = u^[1]/u with phi(0) = 0, tau = phi + sigma_hat realizes the
// factorized operator, tilde_phi = phi + int_0^x sigma_hat^2 is the smoother
// combination, and shift_C is the accretivity shift q -> q + C (that is,
// sigma -> sigma + C x) that made u non-vanishing.
struct FactorizationResult {
    GridFunction u;
    GridFunction phi;
    GridFunction tau;
    GridFunction tilde_phi;
    GridFunction shifted_sigma;
    double shift_C = 0.0;
    double riccati_residual = 0.0;
};

// zero-energy solution of the sigma-form system with u(0)=1, u^[1](0)=0
GridFunction solve_neutral(const GridFunction& sigma);

// smallest C in {0,1,2,4,...} such that the shifted potential's neutral
// solution stays away from zero (min |u| >= 1e-3)
std::pair<double, GridFunction> accretive_shift(const GridFunction& sigma);

FactorizationResult factorize(const GridFunction& sigma);

// largest relative tolerance the integral form of the Riccati identity may
// leave behind
constexpr double riccati_tolerance = 1e-6;
constexpr double neutral_min_abs = 1e-3;

} // namespace slspec

#endif
