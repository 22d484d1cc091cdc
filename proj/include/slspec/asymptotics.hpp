#ifndef SLSPEC_ASYMPTOTICS_HPP
#define SLSPEC_ASYMPTOTICS_HPP

#include <map>
#include <string>

#include "slspec/spectrum.hpp"

namespace slspec {

enum class PredictionLevel { leading, refined };
enum class GenericKind { Fc, Fs };

// sigma^pm(x) = +-sigma(x) -+ int_0^x sigma^2 + int_0^{1-x} sigma(x+t) sigma(t) dt
std::pair<GridFunction, GridFunction> sigma_pm(const GridFunction& sigma);

// Predicted eigenvalue square roots.
// leading:  pi n - s_{2n}(sigma)            | pi(n-1/2) + s_{2n-1}(sigma)
// refined:  pi n + s_{2n}(sigma^-)
//                - s_{2n}(sigma) c_{2n}(V sigma)
//           and the sigma^+ analogue at odd indices for Neumann-Dirichlet.
cplx predicted(const GridFunction& sigma, int n, BoundaryCondition bc, PredictionLevel level);

struct BcAsymptotics {
    CoeffSeq predicted_leading, predicted_refined;
    CoeffSeq residual_leading, residual_refined;
    DecayEstimate fit_leading, fit_refined;
};

struct AsymptoticsReport {
    double alpha = 0.0;
    double gamma = 0.0; // min(3 alpha, 1 + alpha)
    BcAsymptotics dirichlet, neumann;
    GridFunction sigma_plus, sigma_minus;
    std::map<std::string, double> fitted_exponents;
};

// residuals of both prediction levels against computed (unshifted) spectra,
// with decay fits over n in [8, n_max]
AsymptoticsReport analyze(const GridFunction& sigma, const SpectralSequence& dir,
                          const SpectralSequence& neu, double alpha);

// zeros of F_c / F_s built from f, their remainders against pi n / 2, and the
// residual after subtracting the two-term prediction s_n(f) - s_n(f) c_n(V f)
struct GenericZeroResult {
    SpectralSequence xi;   // bc tag: neumann for F_c (odd n), dirichlet for F_s (even n)
    CoeffSeq residual;     // indexed by k = 1..n_max; entry k refers to n = 2k-1 or 2k
};

GenericZeroResult generic_zero_asymptotics(const GridFunction& f, GenericKind kind, int n_max);

// left side of the rotated root equation
//   sin(xi~_n) + int_0^1 f(x) sin[xi~_n (1-2x) - pi n x] dx
// evaluated at every located root
CoeffSeq fixed_point_residual(const GridFunction& f, const GenericZeroResult& roots);

} // namespace slspec

#endif
