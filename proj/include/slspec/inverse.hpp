#ifndef SLSPEC_INVERSE_HPP
#define SLSPEC_INVERSE_HPP

#include <vector>

#include "slspec/coeffseq.hpp"
#include "slspec/gridfun.hpp"

namespace slspec {

struct Jump {
    double position = 0.0;
    cplx size{};
};

struct SmoothnessGain {
    double value = 0.0;
    bool capped = false; // sigma_star == sigma within rounding
};

struct ReconstructionResult {
    GridFunction sigma_star;
    int n_used = 0;
    std::vector<Jump> detected_jumps;
    SmoothnessGain gain;
};

// sigma*(t) = 2 sum_{n=1}^{N} ( mu~_n sin((2n-1) pi t) - lambda~_n sin(2 pi n t) );
// requires equal remainder lengths N and N <= M/8
GridFunction sigma_star(const CoeffSeq& lambda_rem, const CoeffSeq& mu_rem, int M);

// decay exponent of the sine coefficients of sigma_star - sigma minus that of
// sigma, fitted over indices [8, fit_max_index] (0 picks M/8).  `alpha` is the
// nominal smoothness of sigma; the measured gain should approach it.
SmoothnessGain smoothness_gain(const GridFunction& sigma_star, const GridFunction& sigma,
                               double alpha, int fit_max_index = 0);

// Jump extraction from the reconstructed primitive: Lanczos-smooth the top
// octave of the sine coefficients, flag local maxima of the derivative above
// 5x its median, and size each jump by two-sided windowed means over
// [2/N, 10/N].
std::vector<Jump> detect_jumps(const GridFunction& sigma_star, int n_used);

} // namespace slspec

#endif
