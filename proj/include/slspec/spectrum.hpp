#ifndef SLSPEC_SPECTRUM_HPP
#define SLSPEC_SPECTRUM_HPP

#include <vector>

#include "slspec/coeffseq.hpp"
#include "slspec/propagator.hpp"

namespace slspec {

// Ordered eigenvalue square roots in the sector Omega = {-pi/2 < arg z <= pi/2} u {0},
// sorted by increasing real part, then imaginary part.  shift_C records a
// pending accretivity shift (undone by `unshift`); residuals hold the
// characteristic-function magnitude at each accepted root.
struct SpectralSequence {
    BoundaryCondition bc = BoundaryCondition::dirichlet;
    std::vector<cplx> values;
    double shift_C = 0.0;
    std::vector<double> residuals;

    int count() const { return (int)values.size(); }
    void validate() const;
};

// maximal per-root characteristic residual, relative to 1 + |lambda|
constexpr double root_residual_tol = 1e-9;

// real-potential localizer: bracketing around pi*n / pi*(n-1/2) plus a coarse
// scan for irregular low-index roots
SpectralSequence locate_real(const GridFunction& coeff, SystemForm form,
                             BoundaryCondition bc, int n_max);

// argument-principle localizer for complex potentials
SpectralSequence locate_complex(const GridFunction& coeff, SystemForm form,
                                BoundaryCondition bc, int n_max);

cplx normalize_to_Omega(cplx z);

// lambda = sqrt(lambda_hat^2 - C) mapped back into Omega; clears shift_C
SpectralSequence unshift(const SpectralSequence& seq);

// lambda_n - pi n (Dirichlet) or mu_n - pi (n - 1/2) (Neumann-Dirichlet)
CoeffSeq remainders(const SpectralSequence& seq);

} // namespace slspec

#endif
