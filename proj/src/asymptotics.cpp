#include "slspec/asymptotics.hpp"

#include <cmath>

#include "slspec/parallel.hpp"
#include "slspec/rootfind.hpp"

namespace slspec {

std::pair<GridFunction, GridFunction> sigma_pm(const GridFunction& sigma)
{
    const GridFunction cum = cumulative_integral(sigma, sigma);
    const GridFunction corr = correlate(sigma, sigma);
    GridFunction plus = add(sub(sigma, cum), corr);
    GridFunction minus = sub(corr, sub(sigma, cum));
    return {std::move(plus), std::move(minus)};
}

namespace {

// sigma^pm = +-sigma + K^pm with the smooth parts K^+ = -int sigma^2 + corr
// and K^- = int sigma^2 + corr; their coefficients are assembled from the
// pieces so the rough +-sigma term keeps its sub-cell resolution
struct PredictorData {
    const GridFunction* sigma;
    GridFunction k_plus, k_minus, vsigma;
};

PredictorData make_predictor(const GridFunction& sigma, bool refined)
{
    PredictorData d{&sigma, {}, {}, apply_V(sigma)};
    if (refined) {
        const GridFunction cum = cumulative_integral(sigma, sigma);
        const GridFunction corr = correlate(sigma, sigma);
        d.k_plus = sub(corr, cum);
        d.k_minus = add(corr, cum);
    }
    return d;
}

cplx predicted_from(const PredictorData& d, int n, BoundaryCondition bc, PredictionLevel level)
{
    if (bc == BoundaryCondition::dirichlet) {
        if (level == PredictionLevel::leading)
            return pi * n - fourier_coeff(*d.sigma, 2 * n, SeqKind::sine);
        const cplx s_sigma = fourier_coeff(*d.sigma, 2 * n, SeqKind::sine);
        const cplx s_minus = -s_sigma + fourier_coeff(d.k_minus, 2 * n, SeqKind::sine);
        return pi * n + s_minus - s_sigma * fourier_coeff(d.vsigma, 2 * n, SeqKind::cosine);
    }
    if (level == PredictionLevel::leading)
        return pi * (n - 0.5) + fourier_coeff(*d.sigma, 2 * n - 1, SeqKind::sine);
    const cplx s_sigma = fourier_coeff(*d.sigma, 2 * n - 1, SeqKind::sine);
    const cplx s_plus = s_sigma + fourier_coeff(d.k_plus, 2 * n - 1, SeqKind::sine);
    return pi * (n - 0.5) + s_plus -
           s_sigma * fourier_coeff(d.vsigma, 2 * n - 1, SeqKind::cosine);
}

} // namespace

cplx predicted(const GridFunction& sigma, int n, BoundaryCondition bc, PredictionLevel level)
{
    if (n < 1)
        throw std::invalid_argument("predicted: n must be positive");
    const PredictorData d = make_predictor(sigma, level == PredictionLevel::refined);
    return predicted_from(d, n, bc, level);
}

AsymptoticsReport analyze(const GridFunction& sigma, const SpectralSequence& dir,
                          const SpectralSequence& neu, double alpha)
{
    if (dir.bc != BoundaryCondition::dirichlet || neu.bc != BoundaryCondition::neumann)
        throw std::invalid_argument("analyze: expected a (dirichlet, neumann) spectra pair");
    if (dir.shift_C != 0.0 || neu.shift_C != 0.0)
        throw std::invalid_argument("analyze: spectra must be unshifted");
    const int n_max = std::min(dir.count(), neu.count());
    if (n_max < 32)
        throw std::invalid_argument("analyze: need n_max >= 32 for the decay fits");
    if (8 * n_max > sigma.cells)
        throw ResolutionError("analyze: 2*n_max beyond the coefficient guard M/4");

    AsymptoticsReport rep;
    rep.alpha = alpha;
    rep.gamma = std::min(3.0 * alpha, 1.0 + alpha);
    auto [p, m] = sigma_pm(sigma);
    rep.sigma_plus = std::move(p);
    rep.sigma_minus = std::move(m);

    const PredictorData d = make_predictor(sigma, true);

    auto fill = [&](const SpectralSequence& seq, BoundaryCondition bc, BcAsymptotics& out) {
        std::vector<cplx> pl((size_t)n_max), pr((size_t)n_max), rl((size_t)n_max),
            rr((size_t)n_max);
        par::parallel_for(n_max, [&](std::int64_t i) {
            const int n = (int)i + 1;
            pl[(size_t)i] = predicted_from(d, n, bc, PredictionLevel::leading);
            pr[(size_t)i] = predicted_from(d, n, bc, PredictionLevel::refined);
            rl[(size_t)i] = seq.values[(size_t)i] - pl[(size_t)i];
            rr[(size_t)i] = seq.values[(size_t)i] - pr[(size_t)i];
        });
        out.predicted_leading = CoeffSeq(SeqKind::plain, 1, std::move(pl));
        out.predicted_refined = CoeffSeq(SeqKind::plain, 1, std::move(pr));
        out.residual_leading = CoeffSeq(SeqKind::plain, 1, std::move(rl));
        out.residual_refined = CoeffSeq(SeqKind::plain, 1, std::move(rr));
        out.fit_leading = estimate_decay(out.residual_leading, 8, n_max);
        out.fit_refined = estimate_decay(out.residual_refined, 8, n_max);
    };
    fill(dir, BoundaryCondition::dirichlet, rep.dirichlet);
    fill(neu, BoundaryCondition::neumann, rep.neumann);

    rep.fitted_exponents["dirichlet_leading"] = rep.dirichlet.fit_leading.exponent;
    rep.fitted_exponents["dirichlet_refined"] = rep.dirichlet.fit_refined.exponent;
    rep.fitted_exponents["neumann_leading"] = rep.neumann.fit_leading.exponent;
    rep.fitted_exponents["neumann_refined"] = rep.neumann.fit_refined.exponent;
    return rep;
}

namespace {

// F_c(l) = cos l + int f cos[l(1-2x)] and F_s(l) = sin l/l + int f sin[l(1-2x)]/l,
// expanded as cos(l - 2lx) = cos l cos 2lx + sin l sin 2lx so the integrals run
// through the product-integration rule; the small-l Dirichlet branch avoids the
// division by l
double eval_generic(const GridFunction& f, GenericKind kind, double lam)
{
    if (kind == GenericKind::Fs && std::abs(lam) < 1e-4) {
        GridFunction integrand = apply_V(f);
        for (int k = 0; k <= f.cells; ++k) {
            const double u = 1.0 - 2.0 * f.node_x(k);
            integrand.values[(size_t)k] *= sinc_z(lam * u);
        }
        integrand.fine.clear();
        integrand.fine_rate = 0;
        return (sinc_z(cplx(lam)) + quadrature(integrand)).real();
    }
    const auto [C, S] = oscillatory_integrals(f, 2.0 * lam);
    if (kind == GenericKind::Fc)
        return std::cos(lam) * (1.0 + C.real()) + std::sin(lam) * S.real();
    return (std::sin(lam) * (1.0 + C.real()) - std::cos(lam) * S.real()) / lam;
}

} // namespace

GenericZeroResult generic_zero_asymptotics(const GridFunction& f, GenericKind kind, int n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("generic_zero_asymptotics: n_max must be positive");
    if (f.max_abs_imag() > 1e-12 * (1.0 + f.max_abs()))
        throw std::invalid_argument("generic_zero_asymptotics: f must be real-valued");
    // largest zero sits near pi*n_max (Fs) or pi*(n_max - 1/2) (Fc)
    const double top = kind == GenericKind::Fs ? pi * n_max : pi * (n_max - 0.5);
    if (top > 0.5 * f.cells)
        throw ResolutionError("generic_zero_asymptotics: n_max beyond the sampling guard");

    auto F = [&](double lam) { return eval_generic(f, kind, lam); };
    RealRootOptions opts;
    opts.scan_max = top + pi / 2;
    opts.n_expected = n_max;
    std::vector<double> roots = scan_real_roots(F, opts);

    GenericZeroResult res;
    res.xi.bc = kind == GenericKind::Fc ? BoundaryCondition::neumann
                                        : BoundaryCondition::dirichlet;
    res.xi.values.assign(roots.begin(), roots.end());
    res.xi.residuals.resize(roots.size());
    for (size_t i = 0; i < roots.size(); ++i)
        res.xi.residuals[i] = std::abs(F(roots[i]));

    const GridFunction vf = apply_V(f);
    std::vector<cplx> rv((size_t)n_max);
    par::parallel_for(n_max, [&](std::int64_t i) {
        const int k = (int)i + 1;
        const int n = kind == GenericKind::Fc ? 2 * k - 1 : 2 * k;
        const cplx xi_rem = roots[(size_t)i] - 0.5 * pi * n;
        const cplx sn = fourier_coeff(f, n, SeqKind::sine);
        const cplx cn = fourier_coeff(vf, n, SeqKind::cosine);
        rv[(size_t)i] = xi_rem - (sn - sn * cn);
    });
    res.residual = CoeffSeq(SeqKind::plain, 1, std::move(rv));
    return res;
}

CoeffSeq fixed_point_residual(const GridFunction& f, const GenericZeroResult& roots)
{
    const int count = roots.xi.count();
    std::vector<cplx> out((size_t)count);
    par::parallel_for(count, [&](std::int64_t i) {
        const int k = (int)i + 1;
        const int n = roots.xi.bc == BoundaryCondition::neumann ? 2 * k - 1 : 2 * k;
        const double xi_rem = roots.xi.values[(size_t)i].real() - 0.5 * pi * n;
        // sin[xi~(1-2x) - pi n x] = sin(xi~) cos(w x) - cos(xi~) sin(w x)
        // with w = 2 xi~ + pi n
        const auto [C, S] = oscillatory_integrals(f, 2.0 * xi_rem + pi * n);
        out[(size_t)i] =
            std::sin(xi_rem) * (1.0 + C.real()) - std::cos(xi_rem) * S.real();
    });
    return CoeffSeq(SeqKind::plain, 1, std::move(out));
}

} // namespace slspec
