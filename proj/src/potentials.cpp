#include "slspec/potentials.hpp"

#include <cmath>

#include "slspec/io.hpp"
#include "slspec/rng.hpp"

namespace slspec {

PotentialSpec PotentialSpec::zero()
{
    return PotentialSpec{};
}

PotentialSpec PotentialSpec::constant(cplx c)
{
    PotentialSpec s;
    s.variant = PotentialVariant::constant;
    s.constant_value = c;
    return s;
}

PotentialSpec PotentialSpec::linear(cplx slope)
{
    PotentialSpec s;
    s.variant = PotentialVariant::linear;
    s.slope = slope;
    return s;
}

PotentialSpec PotentialSpec::step(std::vector<std::pair<double, cplx>> jumps)
{
    PotentialSpec s;
    s.variant = PotentialVariant::step;
    s.steps = std::move(jumps);
    return s;
}

PotentialSpec PotentialSpec::fourier_random(double alpha, int n_modes,
                                            std::uint64_t seed, double amplitude)
{
    PotentialSpec s;
    s.variant = PotentialVariant::fourier_random;
    s.alpha = alpha;
    s.n_modes = n_modes;
    s.seed = seed;
    s.amplitude = amplitude;
    return s;
}

PotentialSpec PotentialSpec::log_singularity(double strength, double clip_epsilon)
{
    PotentialSpec s;
    s.variant = PotentialVariant::log_singularity;
    s.strength = strength;
    s.clip_epsilon = clip_epsilon;
    return s;
}

PotentialSpec PotentialSpec::from_file(std::string path)
{
    PotentialSpec s;
    s.variant = PotentialVariant::from_file;
    s.path = std::move(path);
    return s;
}

double PotentialSpec::effective_alpha() const
{
    if (nominal_alpha >= 0.0) return nominal_alpha;
    switch (variant) {
    case PotentialVariant::zero:
    case PotentialVariant::constant:
    case PotentialVariant::linear: return 1.0;
    case PotentialVariant::step: return 0.49;
    case PotentialVariant::fourier_random: return alpha;
    case PotentialVariant::log_singularity: return 0.49;
    case PotentialVariant::from_file: return 0.0;
    }
    return 0.0;
}

void PotentialSpec::validate() const
{
    if (variant == PotentialVariant::step) {
        double prev = 0.0;
        for (const auto& [pos, jump] : steps) {
            (void)jump;
            if (pos <= prev || pos >= 1.0)
                throw ConfigError("step potential: positions must be strictly increasing inside (0,1)");
            prev = pos;
        }
        if (nominal_alpha >= 0.5)
            throw ConfigError("step potential: nominal alpha must stay below 1/2");
    }
    if (variant == PotentialVariant::fourier_random) {
        if (alpha < 0.0 || alpha > 1.0)
            throw ConfigError("fourier_random: alpha must lie in [0,1]");
        if (n_modes < 1)
            throw ConfigError("fourier_random: need at least one mode");
        if (nominal_alpha >= 0.0 && std::abs(nominal_alpha - alpha) > 1e-12)
            throw ConfigError("fourier_random: nominal alpha must equal the generator alpha");
    }
}

namespace {

GridFunction realize_step(const PotentialSpec& spec, int M)
{
    std::vector<int> nodes;
    for (const auto& [pos, jump] : spec.steps) {
        (void)jump;
        const int node = (int)std::lround(pos * M);
        if (node <= 0 || node >= M)
            throw ConfigError("step potential: jump at " + std::to_string(pos) +
                              " snaps outside the interior of the grid");
        if (std::abs(pos - (double)node / M) > 0.5 / M + 1e-12)
            throw ConfigError("step potential: jump at " + std::to_string(pos) +
                              " is off-grid beyond the snap tolerance");
        if (!nodes.empty() && node <= nodes.back())
            throw ConfigError("step potential: two jumps snap to the same node");
        nodes.push_back(node);
    }

    std::vector<cplx> v((size_t)M + 1, spec.h_offset);
    std::vector<GridFunction::Breakpoint> bps;
    cplx level = spec.h_offset;
    size_t next = 0;
    for (int k = 0; k <= M; ++k) {
        if (next < nodes.size() && k == nodes[next]) {
            bps.push_back({k, level});
            level += spec.steps[next].second;
            ++next;
        }
        v[(size_t)k] = level;
    }
    GridFunction g(M, std::move(v), std::move(bps));

    const int R = potential_fine_rate;
    g.fine.assign((size_t)M * R + 1, spec.h_offset);
    level = spec.h_offset;
    next = 0;
    for (int j = 0; j <= M * R; ++j) {
        if (next < nodes.size() && j == nodes[next] * R) {
            level += spec.steps[next].second;
            ++next;
        }
        g.fine[(size_t)j] = level;
    }
    g.fine_rate = R;
    return g;
}

} // namespace

GridFunction realize(const PotentialSpec& spec, int M)
{
    spec.validate();
    const int R = potential_fine_rate;

    switch (spec.variant) {
    case PotentialVariant::zero:
        return GridFunction::sample(M, [&](double) { return spec.h_offset; }, R);

    case PotentialVariant::constant:
        return GridFunction::sample(
            M, [&](double) { return spec.h_offset + spec.constant_value; }, R);

    case PotentialVariant::linear:
        return GridFunction::sample(
            M, [&](double x) { return spec.h_offset + spec.slope * x; }, R);

    case PotentialVariant::step:
        return realize_step(spec, M);

    case PotentialVariant::fourier_random: {
        const int N = spec.n_modes;
        std::vector<double> amp((size_t)N + 1), sc((size_t)N + 1), ss((size_t)N + 1);
        for (int n = 1; n <= N; ++n) {
            amp[(size_t)n] = spec.amplitude * std::pow((double)n, -spec.alpha - 0.55);
            sc[(size_t)n] = rng::sign(spec.seed, 0, (std::uint64_t)n);
            ss[(size_t)n] = rng::sign(spec.seed, 1, (std::uint64_t)n);
        }
        return GridFunction::sample(
            M,
            [&](double x) {
                cplx acc = spec.h_offset;
                for (int n = 1; n <= N; ++n) {
                    const double a = 2.0 * pi * n * x;
                    acc += amp[(size_t)n] * (sc[(size_t)n] * std::cos(a) + ss[(size_t)n] * std::sin(a));
                }
                return acc;
            },
            R);
    }

    case PotentialVariant::log_singularity: {
        const double clip = spec.clip_epsilon > 0.0 ? spec.clip_epsilon : 1.0 / M;
        return GridFunction::sample(
            M,
            [&](double x) {
                return spec.h_offset + spec.strength * std::log(std::max(x, clip));
            },
            R);
    }

    case PotentialVariant::from_file: {
        std::string meta;
        GridFunction g = io::gridfun_from_csv(io::read_file(spec.path), &meta);
        if (g.cells != M)
            throw ConfigError("from_file: file holds a " + std::to_string(g.cells) +
                              "-cell grid but M=" + std::to_string(M) + " was requested");
        return g;
    }
    }
    throw ConfigError("realize: unknown potential variant");
}

PotentialInfo describe(const PotentialSpec& spec)
{
    spec.validate();
    PotentialInfo info;
    info.nominal_alpha = spec.effective_alpha();
    info.h_offset = spec.h_offset;
    switch (spec.variant) {
    case PotentialVariant::zero:
        info.variant = "zero";
        info.alpha_relevant = false;
        break;
    case PotentialVariant::constant:
        info.variant = "constant";
        info.params["c"] = io::format_double(spec.constant_value.real());
        break;
    case PotentialVariant::linear:
        info.variant = "linear";
        info.params["slope"] = io::format_double(spec.slope.real());
        break;
    case PotentialVariant::step:
        info.variant = "step";
        info.params["jumps"] = std::to_string(spec.steps.size());
        break;
    case PotentialVariant::fourier_random:
        info.variant = "fourier_random";
        info.params["alpha"] = io::format_double(spec.alpha);
        info.params["n_modes"] = std::to_string(spec.n_modes);
        info.params["seed"] = std::to_string(spec.seed);
        info.params["amplitude"] = io::format_double(spec.amplitude);
        break;
    case PotentialVariant::log_singularity:
        info.variant = "log_singularity";
        info.params["strength"] = io::format_double(spec.strength);
        info.params["clip_epsilon"] = io::format_double(spec.clip_epsilon);
        break;
    case PotentialVariant::from_file: {
        info.variant = "from_file";
        info.params["path"] = spec.path;
        std::string meta;
        try {
            io::gridfun_from_csv(io::read_file(spec.path), &meta);
            info.params["header"] = meta;
        } catch (const std::exception&) {
            info.params["header"] = "<unreadable>";
        }
        break;
    }
    }
    return info;
}

} // namespace slspec
