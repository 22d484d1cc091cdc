#ifndef SLSPEC_COMMON_HPP
#define SLSPEC_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <cmath>

namespace slspec {

using cplx = std::complex<double>;

constexpr double pi = 3.14159265358979323846264338327950288;

// Numerical failures at run time (bracketing, residual blow-up, accuracy
// targets missed).  The CLI maps these to exit code 1.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Configuration / input errors.  The CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GridMismatchError : NumericalError {
    explicit GridMismatchError(const std::string& msg) : NumericalError(msg) {}
};

// Requested coefficient or spectral index beyond what the grid resolves;
// the caller must refine the grid.
struct ResolutionError : NumericalError {
    explicit ResolutionError(const std::string& msg) : NumericalError(msg) {}
};

struct BracketingError : NumericalError {
    explicit BracketingError(const std::string& msg) : NumericalError(msg) {}
};

struct AccuracyError : NumericalError {
    explicit AccuracyError(const std::string& msg) : NumericalError(msg) {}
};

// sin(z)/z with a series branch near z = 0 instead of thresholded division.
inline cplx sinc_z(cplx z)
{
    const double a2 = std::norm(z);
    if (a2 < 1e-8) {
        const cplx z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0;
    }
    return std::sin(z) / z;
}

inline double sinc_z(double z)
{
    if (z * z < 1e-8) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

// (1 - cos z)/z^2, series-guarded like sinc_z.
inline cplx cosc_z(cplx z)
{
    const double a2 = std::norm(z);
    if (a2 < 1e-8) {
        const cplx z2 = z * z;
        return 0.5 - z2 / 24.0 + z2 * z2 / 720.0;
    }
    return (1.0 - std::cos(z)) / (z * z);
}

} // namespace slspec

#endif
