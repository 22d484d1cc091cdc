#include "slspec/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

#include "slspec/asymptotics.hpp"
#include "slspec/cli.hpp"
#include "slspec/factorization.hpp"
#include "slspec/inverse.hpp"
#include "slspec/io.hpp"
#include "slspec/parallel.hpp"
#include "slspec/potentials.hpp"
#include "slspec/rng.hpp"
#include "slspec/rootfind.hpp"
#include "slspec/spectrum.hpp"
#include "slspec/tauseries.hpp"

namespace slspec::acceptance {

namespace {

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// smooth real test function from a handful of low modes
GridFunction random_smooth(int M, std::uint64_t seed, double amplitude)
{
    const int modes = 8;
    std::vector<double> as((size_t)modes + 1), bs((size_t)modes + 1);
    for (int m = 1; m <= modes; ++m) {
        as[(size_t)m] = amplitude * rng::sign(seed, 10, (std::uint64_t)m) *
                        (0.5 + 0.5 * rng::uniform01(seed, 11, (std::uint64_t)m)) / (m * m);
        bs[(size_t)m] = amplitude * rng::sign(seed, 12, (std::uint64_t)m) *
                        (0.5 + 0.5 * rng::uniform01(seed, 13, (std::uint64_t)m)) / (m * m);
    }
    return GridFunction::sample(M, [&](double x) {
        double acc = 0.0;
        for (int m = 1; m <= modes; ++m)
            acc += as[(size_t)m] * std::sin(pi * m * x) + bs[(size_t)m] * std::cos(pi * m * x);
        return cplx(acc, 0.0);
    });
}

GridFunction downsample_by_two(const GridFunction& f)
{
    const int M = f.cells / 2;
    std::vector<cplx> v((size_t)M + 1);
    for (int k = 0; k <= M; ++k) v[(size_t)k] = f.values[(size_t)2 * k];
    std::vector<GridFunction::Breakpoint> bps;
    for (const auto& b : f.breakpoints)
        if (b.node % 2 == 0) bps.push_back({b.node / 2, b.left});
    GridFunction out(M, std::move(v), std::move(bps));
    if (f.fine_rate > 0) {
        out.fine.resize((size_t)M * f.fine_rate + 1);
        for (size_t j = 0; j < out.fine.size(); ++j) out.fine[j] = f.fine[2 * j];
        out.fine_rate = f.fine_rate;
    }
    return out;
}

double l1_norm(const GridFunction& f)
{
    GridFunction a = f;
    for (auto& v : a.values) v = std::abs(v);
    for (auto& b : a.breakpoints) b.left = std::abs(b.left);
    a.fine.clear();
    a.fine_rate = 0;
    return quadrature(a).real();
}

double mat_norm(const Mat2& m)
{
    return std::sqrt(std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22));
}

// ------------------------------------------------------------------ criteria

CriterionResult criterion_free_case()
{
    CriterionResult r{1, "free-case exactness (sigma = 0, n <= 100)", false, ""};
    const GridFunction sigma = realize(PotentialSpec::zero(), 2048);
    double worst = 0.0;
    const auto dir = locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, 100);
    const auto neu = locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::neumann, 100);
    for (int n = 1; n <= 100; ++n) {
        worst = std::max(worst, std::abs(dir.values[(size_t)n - 1] - pi * n));
        worst = std::max(worst, std::abs(neu.values[(size_t)n - 1] - pi * (n - 0.5)));
    }
    r.pass = worst <= 1e-9;
    r.detail = "max |error| = " + fmt(worst) + " (tol 1e-9)";
    return r;
}

CriterionResult criterion_constant_potential()
{
    CriterionResult r{2, "constant-potential oracle (q = 1, n <= 50)", false, ""};
    const GridFunction sigma = realize(PotentialSpec::linear(1.0), 2048);
    const auto dir = locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, 50);
    const auto neu = locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::neumann, 50);
    double worst = 0.0;
    for (int n = 1; n <= 50; ++n) {
        worst = std::max(worst, std::abs(dir.values[(size_t)n - 1] -
                                         std::sqrt(pi * pi * n * n + 1.0)));
        // Neumann closed form: cos(sqrt(mu^2 - 1)) = 0
        const double mu = std::sqrt(pi * pi * (n - 0.5) * (n - 0.5) + 1.0);
        worst = std::max(worst, std::abs(neu.values[(size_t)n - 1] - mu));
    }
    r.pass = worst <= 1e-8;
    r.detail = "max |error| = " + fmt(worst) + " (tol 1e-8)";
    return r;
}

CriterionResult criterion_delta_potential()
{
    CriterionResult r{3, "delta-potential oracle (jump 1 at 0.4, n <= 50)", false, ""};
    const int M = 2560; // 0.4*M is a node
    const GridFunction sigma = realize(PotentialSpec::step({{0.4, 1.0}}), M);
    const auto dir = locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, 50);

    auto oracle = [](double lam) {
        return std::sin(lam) + 0.4 * sinc_z(0.4 * lam) * std::sin(0.6 * lam);
    };
    RealRootOptions opts;
    opts.scan_max = pi * 50 + pi / 2;
    opts.n_expected = 50;
    const auto roots = scan_real_roots(oracle, opts);

    double worst = 0.0;
    for (int n = 0; n < 50; ++n)
        worst = std::max(worst, std::abs(dir.values[(size_t)n] - roots[(size_t)n]));
    r.pass = worst <= 1e-8;
    r.detail = "max |error| = " + fmt(worst) + " (tol 1e-8)";
    return r;
}

CriterionResult criterion_factorization_equivalence()
{
    CriterionResult r{4, "factorization equivalence (5 seeded potentials)", false, ""};
    const double alphas[5] = {0.0, 0.5, 1.0, 0.0, 0.5};
    double worst = 0.0, worst_res = 0.0;
    const int n_max = 32;
    for (int i = 0; i < 5; ++i) {
        const GridFunction sigma =
            realize(PotentialSpec::fourier_random(alphas[i], 256, 100 + (std::uint64_t)i, 0.5),
                    2048);
        const FactorizationResult fac = factorize(sigma);
        worst_res = std::max(worst_res, fac.riccati_residual);
        for (BoundaryCondition bc :
             {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
            SpectralSequence via_sigma =
                locate_real(fac.shifted_sigma, SystemForm::sigma_form, bc, n_max);
            via_sigma.shift_C = fac.shift_C;
            SpectralSequence via_tau = locate_real(fac.tau, SystemForm::tau_form, bc, n_max);
            via_tau.shift_C = fac.shift_C;
            const SpectralSequence a = unshift(via_sigma), b = unshift(via_tau);
            for (int n = 0; n < n_max; ++n)
                worst = std::max(worst,
                                 std::abs(a.values[(size_t)n] - b.values[(size_t)n]));
        }
    }
    r.pass = worst <= 1e-7 && worst_res <= 1e-6;
    r.detail = "max spectral gap = " + fmt(worst) + " (tol 1e-7), max Riccati residual = " +
               fmt(worst_res) + " (tol 1e-6)";
    return r;
}

CriterionResult criterion_series_char()
{
    CriterionResult r{5, "series characteristic function + Volterra decay", false, ""};
    double worst_gap = 0.0, worst_ratio = 0.0, worst_tail = 0.0;

    struct Case {
        std::uint64_t seed;
        double alpha;
        int mc;
    };
    for (const Case c : {Case{210, 0.5, 200000}, Case{211, 0.25, 60000}}) {
        const GridFunction sigma =
            realize(PotentialSpec::fourier_random(c.alpha, 256, c.seed, 0.5), 2048);
        const FactorizationResult fac = factorize(sigma);
        const GridFunction tau = downsample_by_two(fac.tau); // M = 1024

        TauSeriesOptions topts;
        topts.seed = 0x5eed;
        topts.mc_samples = c.mc;
        const TauSeries series = build_series(tau, 5, topts);
        if (series.tau_l2 > 1.5) {
            r.detail = "test potential has |tau| = " + fmt(series.tau_l2) + " > 1.5";
            return r;
        }
        worst_tail = std::max(worst_tail, series.tail_bound);

        const PreparedCoeff pc = prepare_coefficient(tau);
        for (int i = 0; i <= 80; ++i) {
            const double lam = 40.0 * i / 80.0;
            for (BoundaryCondition bc :
                 {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
                const cplx a = series_char(series, lam, bc);
                const cplx b = char_value(pc, lam, SystemForm::tau_form, bc);
                worst_gap = std::max(worst_gap, std::abs(a - b) - series.tail_bound);
            }
        }

        // factorial envelope: iterate norms under the cumulative ratio bound
        // |U_1| * prod_{k=2..n} |tau|_L1/(k-1)
        const double tau_l1 = l1_norm(tau);
        for (double lam : {1.0, pi, 10.0}) {
            const auto iters = volterra_iterates(tau, lam, 8);
            double envelope = mat_norm(iters[1]);
            for (int n = 2; n <= 8; ++n) {
                envelope *= tau_l1 / (n - 1);
                worst_ratio = std::max(worst_ratio, mat_norm(iters[(size_t)n]) / envelope);
            }
        }
    }

    r.pass = worst_gap <= 1e-5 && worst_ratio <= 3.0;
    r.detail = "max |series-shooting| - tail = " + fmt(worst_gap) +
               " (tol 1e-5, worst tail " + fmt(worst_tail) + "), worst ratio/envelope = " +
               fmt(worst_ratio) + " (tol 3)";
    return r;
}

CriterionResult criterion_tau_norm_ladder()
{
    CriterionResult r{6, "tau_n norm ladder (factorial bound, n <= 5)", false, ""};
    const double targets[5] = {0.5, 1.0, 2.0, 0.5, 1.0};
    double worst_excess = 0.0;
    for (int i = 0; i < 5; ++i) {
        GridFunction tau = random_smooth(256, 300 + (std::uint64_t)i, 1.0);
        const double norm0 = l2_norm(tau);
        tau = scale(tau, targets[i] / norm0);
        const double t = l2_norm(tau);
        TauSeriesOptions topts;
        topts.seed = 0x6eed + (std::uint64_t)i;
        for (int n = 1; n <= 5; ++n) {
            const GridFunction tn = compute_tau_n(tau, n, topts);
            const double bound = std::pow(t, n) /
                                 std::sqrt(std::tgamma((double)n) * std::tgamma((double)n + 1));
            worst_excess = std::max(worst_excess, l2_norm(tn) / (bound * 1.05));
        }
    }
    r.pass = worst_excess <= 1.0;
    r.detail = "max |tau_n| / (1.05 * bound) = " + fmt(worst_excess);
    return r;
}

CriterionResult criterion_asymptotic_decay()
{
    CriterionResult r{7, "asymptotic decay of the remainder sequences", false, ""};
    std::ostringstream detail;
    bool ok = true;
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
        const GridFunction sigma = realize(
            PotentialSpec::fourier_random(alpha, 256, 400 + (std::uint64_t)(alpha * 100), 0.5),
            2048);
        const auto dir =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, 128);
        const auto neu =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::neumann, 128);
        const AsymptoticsReport rep = analyze(sigma, dir, neu, alpha);
        const double gamma = rep.gamma;
        const double want_refined = gamma - 0.2;
        const double want_leading = std::min(2.0 * alpha, gamma) - 0.2;
        const double got_refined =
            std::min(rep.dirichlet.fit_refined.exponent, rep.neumann.fit_refined.exponent);
        const double got_leading =
            std::min(rep.dirichlet.fit_leading.exponent, rep.neumann.fit_leading.exponent);
        const bool pass = got_refined >= want_refined && got_leading >= want_leading;
        ok = ok && pass;
        detail << "a=" << alpha << ": refined " << fmt(got_refined) << ">=" << fmt(want_refined)
               << ", leading " << fmt(got_leading) << ">=" << fmt(want_leading) << "; ";
    }
    {
        // alpha = 0: the l2 claim, remainder norm stable under doubling
        const GridFunction sigma =
            realize(PotentialSpec::fourier_random(0.0, 256, 404, 0.5), 2048);
        const auto dir =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, 128);
        std::vector<cplx> res((size_t)128);
        for (int n = 1; n <= 128; ++n)
            res[(size_t)n - 1] = dir.values[(size_t)n - 1] - pi * n +
                                 fourier_coeff(sigma, 2 * n, SeqKind::sine);
        const CoeffSeq all(SeqKind::plain, 1, res);
        const CoeffSeq half(SeqKind::plain, 1,
                            std::vector<cplx>(res.begin(), res.begin() + 64));
        const double n128 = weighted_norm(all, 2.0, 0.0);
        const double n64 = weighted_norm(half, 2.0, 0.0);
        const double growth = (n128 - n64) / n64;
        ok = ok && growth >= 0.0 && growth <= 0.05;
        detail << "a=0: l2 growth 64->128 = " << fmt(growth) << " (tol 0.05)";
    }
    r.pass = ok;
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_generic_zeros()
{
    CriterionResult r{8, "generic entire-function zero asymptotics", false, ""};
    const GridFunction f = realize(PotentialSpec::fourier_random(0.5, 256, 500, 0.5), 2048);
    bool ok = true;
    std::ostringstream detail;
    for (GenericKind kind : {GenericKind::Fc, GenericKind::Fs}) {
        const GenericZeroResult res = generic_zero_asymptotics(f, kind, 128);
        const DecayEstimate fit = estimate_decay(res.residual, 8, 128);
        const CoeffSeq fres = fixed_point_residual(f, res);
        double worst_fp = 0.0;
        for (int k = 1; k <= 128; ++k)
            worst_fp = std::max(worst_fp, std::abs(fres.at(k)) /
                                              (1.0 + std::abs(res.xi.values[(size_t)k - 1])));
        ok = ok && fit.exponent >= 1.3 && worst_fp <= 1e-8;
        detail << (kind == GenericKind::Fc ? "Fc" : "Fs") << ": fit " << fmt(fit.exponent)
               << " (>=1.3), fixed-point residual " << fmt(worst_fp) << " (<=1e-8); ";
    }
    r.pass = ok;
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_structural()
{
    CriterionResult r{9, "structural invariants (Wronskian, evenness, interlacing, ...)",
                      false, ""};
    std::ostringstream detail;
    bool ok = true;

    // Wronskian and evenness over potentials and lambdas
    {
        double worst_det = 0.0, worst_even = 0.0;
        std::vector<GridFunction> pots;
        pots.push_back(realize(PotentialSpec::zero(), 2048));
        pots.push_back(realize(PotentialSpec::linear(1.0), 2048));
        pots.push_back(realize(PotentialSpec::step({{0.5, 1.0}}), 2048));
        pots.push_back(realize(PotentialSpec::fourier_random(0.5, 128, 600, 0.5), 2048));
        for (const auto& p : pots) {
            const PreparedCoeff pc = prepare_coefficient(p);
            for (int i = 0; i <= 20; ++i) {
                const double lam = 100.0 * i / 20.0;
                const CauchyMatrix cm = propagate(pc, lam, SystemForm::sigma_form);
                worst_det = std::max(worst_det, std::abs(cm.U.det() - 1.0));
                for (BoundaryCondition bc :
                     {BoundaryCondition::dirichlet, BoundaryCondition::neumann})
                    worst_even = std::max(
                        worst_even, std::abs(char_value(pc, lam, SystemForm::sigma_form, bc) -
                                             char_value(pc, -lam, SystemForm::sigma_form, bc)));
            }
        }
        ok = ok && worst_det <= 1e-9 && worst_even <= 1e-10;
        detail << "|det U - 1| " << fmt(worst_det) << " (<=1e-9), evenness " << fmt(worst_even)
               << " (<=1e-10); ";
    }

    // interlacing for a real potential
    {
        const GridFunction sigma =
            realize(PotentialSpec::fourier_random(0.5, 128, 601, 0.5), 2048);
        const auto dir =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, 64);
        const auto neu =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::neumann, 64);
        bool inter = true;
        for (int n = 0; n < 63; ++n) {
            const double l2 = std::norm(dir.values[(size_t)n]);
            const double m2 = std::norm(neu.values[(size_t)n]);
            const double m2next = std::norm(neu.values[(size_t)n + 1]);
            inter = inter && m2 < l2 && l2 < m2next;
        }
        ok = ok && inter;
        detail << "interlacing " << (inter ? "holds" : "BROKEN") << "; ";
    }

    // Dirichlet invariance under sigma -> sigma + 1, Robin sensitivity of mu_1
    {
        PotentialSpec spec = PotentialSpec::fourier_random(0.5, 128, 602, 0.4);
        const GridFunction sigma = realize(spec, 2048);
        spec.h_offset = 1.0;
        const GridFunction shifted = realize(spec, 2048);
        const auto d1 =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, 32);
        const auto d2 =
            locate_real(shifted, SystemForm::sigma_form, BoundaryCondition::dirichlet, 32);
        double worst = 0.0;
        for (int n = 0; n < 32; ++n)
            worst = std::max(worst, std::abs(d1.values[(size_t)n] - d2.values[(size_t)n]));
        const auto n1 =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::neumann, 1);
        const auto n2 =
            locate_real(shifted, SystemForm::sigma_form, BoundaryCondition::neumann, 1);
        const double mu_shift = std::abs(n1.values[0] - n2.values[0]);
        ok = ok && worst <= 1e-8 && mu_shift > 1e-3;
        detail << "Dirichlet shift-invariance " << fmt(worst) << " (<=1e-8), mu_1 moved "
               << fmt(mu_shift) << " (>1e-3); ";
    }

    // coefficient product identity suite
    {
        double worst = 0.0;
        const int M = 1024;
        for (int pair = 0; pair < 20; ++pair) {
            const GridFunction f = random_smooth(M, 700 + (std::uint64_t)pair, 0.7);
            const GridFunction g = random_smooth(M, 800 + (std::uint64_t)pair, 0.7);
            const GridFunction h1 = product_identity_h(f, g, ProductIdentity::h1);
            const GridFunction h2 = product_identity_h(f, g, ProductIdentity::h2);
            const GridFunction h3 = product_identity_h(f, g, ProductIdentity::h3);
            std::vector<int> ns;
            for (int n = 1; n <= 32; ++n) ns.push_back(n);
            ns.push_back(64);
            ns.push_back(128);
            for (int n : ns) {
                const cplx cf = fourier_coeff(f, n, SeqKind::cosine);
                const cplx cg = fourier_coeff(g, n, SeqKind::cosine);
                const cplx sf = fourier_coeff(f, n, SeqKind::sine);
                const cplx sg = fourier_coeff(g, n, SeqKind::sine);
                worst = std::max(worst,
                                 std::abs(cf * cg - fourier_coeff(h1, n, SeqKind::cosine)));
                worst = std::max(worst,
                                 std::abs(sf * sg - fourier_coeff(h2, n, SeqKind::cosine)));
                worst = std::max(worst,
                                 std::abs(sf * cg - fourier_coeff(h3, n, SeqKind::sine)));
            }
        }
        ok = ok && worst <= 1e-7;
        detail << "product identity suite worst gap " << fmt(worst) << " (<=1e-7)";
    }

    r.pass = ok;
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_inverse()
{
    CriterionResult r{10, "inverse reconstruction (jump recovery, smoothness gain)", false, ""};
    std::ostringstream detail;
    bool ok = true;

    {
        const int M = 2560, n_max = 200;
        const GridFunction sigma = realize(PotentialSpec::step({{0.4, 1.0}}), M);
        const auto dir =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, n_max);
        const auto neu =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::neumann, n_max);
        const GridFunction star = sigma_star(remainders(dir), remainders(neu), M);
        const auto jumps = detect_jumps(star, n_max);
        bool found = false;
        double pos_err = 1.0, size_err = 1.0;
        for (const auto& j : jumps) {
            if (std::abs(j.position - 0.4) <= 0.005) {
                found = true;
                pos_err = std::abs(j.position - 0.4);
                size_err = std::abs(j.size - cplx(1.0));
            }
        }
        const bool pass = found && jumps.size() == 1 && size_err <= 0.05;
        ok = ok && pass;
        detail << "jumps found " << jumps.size() << ", position error " << fmt(pos_err)
               << " (<=0.005), size error " << fmt(size_err) << " (<=0.05); ";
    }

    {
        const GridFunction sigma =
            realize(PotentialSpec::fourier_random(0.5, 256, 900, 0.5), 2048);
        const auto dir =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::dirichlet, 128);
        const auto neu =
            locate_real(sigma, SystemForm::sigma_form, BoundaryCondition::neumann, 128);
        const GridFunction star = sigma_star(remainders(dir), remainders(neu), 2048);
        const SmoothnessGain gain = smoothness_gain(star, sigma, 0.5, 256);
        const bool pass = gain.capped || gain.value >= 0.3;
        ok = ok && pass;
        detail << "smoothness gain " << fmt(gain.value) << " (>=0.3)";
    }

    r.pass = ok;
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_reproducibility()
{
    CriterionResult r{11, "byte-identical outputs across 1/4/8 worker threads", false, ""};
    namespace fs = std::filesystem;
    const int saved = par::max_threads();

    std::vector<std::map<std::string, std::string>> runs;
    for (int threads : {1, 4, 8}) {
        const std::string dir =
            (fs::temp_directory_path() / ("slspec_repro_t" + std::to_string(threads))).string();
        fs::remove_all(dir);
        cli::RunConfig cfg;
        cfg.command = "spectrum";
        cfg.potential = PotentialSpec::fourier_random(0.5, 64, 7, 0.5);
        cfg.M = 512;
        cfg.n_max = 24;
        cfg.form = SystemForm::tau_form;
        cfg.seed = 7;
        cfg.threads = threads;
        cfg.output_dir = dir;
        if (cli::run(cfg) != 0) {
            r.detail = "pipeline run failed at threads=" + std::to_string(threads);
            par::set_max_threads(saved);
            return r;
        }
        std::map<std::string, std::string> files;
        for (const auto& entry : fs::directory_iterator(dir))
            files[entry.path().filename().string()] = io::read_file(entry.path().string());
        runs.push_back(std::move(files));
    }
    par::set_max_threads(saved);

    bool same = runs[0].size() == runs[1].size() && runs[1].size() == runs[2].size();
    for (const auto& [name, content] : runs[0]) {
        same = same && runs[1].count(name) && runs[1].at(name) == content;
        same = same && runs[2].count(name) && runs[2].at(name) == content;
    }
    r.pass = same;
    r.detail = same ? std::to_string(runs[0].size()) + " files byte-identical"
                    : "outputs differ between thread counts";
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out)
{
    using Fn = std::function<CriterionResult()>;
    const Fn criteria[] = {
        criterion_free_case,       criterion_constant_potential,
        criterion_delta_potential, criterion_factorization_equivalence,
        criterion_series_char,     criterion_tau_norm_ladder,
        criterion_asymptotic_decay, criterion_generic_zeros,
        criterion_structural,      criterion_inverse,
        criterion_reproducibility,
    };

    std::vector<CriterionResult> results;
    for (const Fn& fn : criteria) {
        CriterionResult res;
        try {
            res = fn();
        } catch (const std::exception& e) {
            res.id = (int)results.size() + 1;
            res.name = "criterion " + std::to_string(res.id);
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        out << (res.pass ? "[PASS] " : "[FAIL] ") << res.id << ". " << res.name << " - "
            << res.detail << "\n";
        out.flush();
        results.push_back(std::move(res));
    }
    return results;
}

} // namespace slspec::acceptance
