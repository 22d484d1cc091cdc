#ifndef SLSPEC_ROOTFIND_HPP
#define SLSPEC_ROOTFIND_HPP

#include <functional>
#include <vector>

#include "slspec/common.hpp"

namespace slspec {

// Real-axis root scan for an even entire function restricted to lambda >= 0:
// evaluate on a uniform scan grid over [0, scan_max], bisect every sign
// change, polish by Newton (derivative by central difference), and demand
// exactly n_expected roots; the scan step is halved a few times before the
// search gives up with a diagnostic.
struct RealRootOptions {
    double scan_max = 0.0;
    int n_expected = 0;
    double initial_step = pi / 16.0;
    int max_refinements = 3;
    double newton_rel_tol = 1e-12;
    int newton_max_iter = 30;
};

std::vector<double> scan_real_roots(const std::function<double(double)>& F,
                                    const RealRootOptions& opts);

// one bracketed root: bisection to machine width then Newton polish
double polish_real_root(const std::function<double(double)>& F, double a, double b,
                        double rel_tol, int max_iter);

// winding number of F around a rectangle (argument principle for an analytic
// function with no zeros on the contour); throws NumericalError if the
// contour cannot be resolved (zero on or too close to the path)
int winding_number(const std::function<cplx(cplx)>& F, cplx lo, cplx hi);

} // namespace slspec

#endif
