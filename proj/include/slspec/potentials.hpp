#ifndef SLSPEC_POTENTIALS_HPP
#define SLSPEC_POTENTIALS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slspec/gridfun.hpp"

namespace slspec {

enum class PotentialVariant {
    zero,
    constant,
    linear,
    step,
    fourier_random,
    log_singularity,
    from_file
};

// Declarative description of the primitive sigma of the potential q = sigma'.
// h_offset is the additive constant of the primitive; it fixes the Robin
// parameter of the Neumann-Dirichlet operator while the Dirichlet operator
// ignores it.
struct PotentialSpec {
    PotentialVariant variant = PotentialVariant::zero;

    cplx constant_value{};            // constant(c): sigma = h + c
    cplx slope{};                     // linear: sigma = h + slope*x
    std::vector<std::pair<double, cplx>> steps; // (position, jump), ascending

    double alpha = 0.5;               // fourier_random smoothness parameter
    int n_modes = 256;
    std::uint64_t seed = 1;
    double amplitude = 1.0;

    double strength = 1.0;            // log_singularity: sigma = h + strength*ln x
    double clip_epsilon = 0.0;        // 0 means 1/M

    std::string path;                 // from_file

    cplx h_offset{};
    double nominal_alpha = -1.0;      // -1 means "derive from variant"

    static PotentialSpec zero();
    static PotentialSpec constant(cplx c);
    static PotentialSpec linear(cplx slope);
    static PotentialSpec step(std::vector<std::pair<double, cplx>> jumps);
    static PotentialSpec fourier_random(double alpha, int n_modes,
                                        std::uint64_t seed, double amplitude);
    static PotentialSpec log_singularity(double strength, double clip_epsilon = 0.0);
    static PotentialSpec from_file(std::string path);

    void validate() const;
    double effective_alpha() const;
};

// sub-sample rate carried by realized potentials; gives the propagator
// near-exact cell averages
constexpr int potential_fine_rate = 32;

// sample sigma on the M-cell grid (deterministic in (spec, M))
GridFunction realize(const PotentialSpec& spec, int M);

struct PotentialInfo {
    std::string variant;
    double nominal_alpha = 0.0;
    bool alpha_relevant = true;
    cplx h_offset{};
    std::map<std::string, std::string> params;
};

PotentialInfo describe(const PotentialSpec& spec);

} // namespace slspec

#endif
