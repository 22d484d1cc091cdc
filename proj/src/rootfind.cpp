#include "slspec/rootfind.hpp"

#include <algorithm>
#include <cmath>

#include "slspec/parallel.hpp"

namespace slspec {

double polish_real_root(const std::function<double(double)>& F, double a, double b,
                        double rel_tol, int max_iter)
{
    double fa = F(a), fb = F(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw BracketingError("polish_real_root: no sign change on bracket");

    // bisection to a tight interval
    for (int i = 0; i < 80 && (b - a) > 1e-14 * (1.0 + std::abs(a)); ++i) {
        const double m = 0.5 * (a + b);
        const double fm = F(m);
        if (fm == 0.0) return m;
        if (fa * fm < 0.0) { b = m; fb = fm; }
        else { a = m; fa = fm; }
    }

    // Newton polish with a central-difference derivative
    double x = 0.5 * (a + b);
    for (int i = 0; i < max_iter; ++i) {
        const double d = 1e-6 * std::max(1.0, std::abs(x));
        const double der = (F(x + d) - F(x - d)) / (2.0 * d);
        if (der == 0.0) break;
        const double step = F(x) / der;
        x -= step;
        if (std::abs(step) <= rel_tol * (1.0 + std::abs(x))) break;
    }
    if (!(x >= a - 1e-6 && x <= b + 1e-6))
        x = 0.5 * (a + b);
    return x;
}

std::vector<double> scan_real_roots(const std::function<double(double)>& F,
                                    const RealRootOptions& opts)
{
    double step = opts.initial_step;
    std::string diag;
    for (int attempt = 0; attempt <= opts.max_refinements; ++attempt, step *= 0.5) {
        const int npts = (int)std::ceil(opts.scan_max / step) + 1;
        std::vector<double> xs((size_t)npts), fs((size_t)npts);
        for (int i = 0; i < npts; ++i) xs[(size_t)i] = std::min(opts.scan_max, i * step);
        par::parallel_for(npts, [&](std::int64_t i) { fs[(size_t)i] = F(xs[(size_t)i]); });

        std::vector<std::pair<double, double>> brackets;
        for (int i = 0; i + 1 < npts; ++i) {
            if (fs[(size_t)i] == 0.0) {
                if (xs[(size_t)i] > 0.0) brackets.emplace_back(xs[(size_t)i], xs[(size_t)i]);
                continue;
            }
            if (fs[(size_t)i] * fs[(size_t)i + 1] < 0.0)
                brackets.emplace_back(xs[(size_t)i], xs[(size_t)i + 1]);
        }
        if (fs[(size_t)npts - 1] == 0.0) brackets.emplace_back(opts.scan_max, opts.scan_max);

        if ((int)brackets.size() == opts.n_expected) {
            std::vector<double> roots((size_t)brackets.size());
            par::parallel_for((std::int64_t)brackets.size(), [&](std::int64_t i) {
                const auto& [a, b] = brackets[(size_t)i];
                roots[(size_t)i] = (a == b) ? a
                                            : polish_real_root(F, a, b, opts.newton_rel_tol,
                                                               opts.newton_max_iter);
            });
            std::sort(roots.begin(), roots.end());
            return roots;
        }
        diag = "found " + std::to_string(brackets.size()) + " sign changes at step " +
               std::to_string(step);
    }
    throw BracketingError("scan_real_roots: root count never matched " +
                          std::to_string(opts.n_expected) + " (" + diag +
                          ", scan up to " + std::to_string(opts.scan_max) + ")");
}

namespace {

struct ContourPoint {
    cplx z;
    cplx f;
};

} // namespace

int winding_number(const std::function<cplx(cplx)>& F, cplx lo, cplx hi)
{
    const cplx c1 = lo, c2 = cplx(hi.real(), lo.imag());
    const cplx c3 = hi, c4 = cplx(lo.real(), hi.imag());
    const cplx corners[5] = {c1, c2, c3, c4, c1};

    double floor_scale = 0.0;
    std::vector<ContourPoint> pts;
    for (int e = 0; e < 4; ++e) {
        const int seed = 8;
        for (int i = 0; i < seed; ++i) {
            const cplx z = corners[e] + (corners[e + 1] - corners[e]) * ((double)i / seed);
            pts.push_back({z, F(z)});
            floor_scale = std::max(floor_scale, std::abs(pts.back().f));
        }
    }
    pts.push_back(pts.front());
    const double floor = 1e-12 * std::max(1e-300, floor_scale);

    double total = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        // refine the segment until each argument step is small
        std::vector<ContourPoint> stack{pts[i + 1]};
        ContourPoint cur = pts[i];
        int depth = 0;
        while (!stack.empty()) {
            const ContourPoint nxt = stack.back();
            if (std::abs(cur.f) < floor || std::abs(nxt.f) < floor)
                throw NumericalError("winding_number: contour passes too close to a zero");
            const double dphi = std::arg(nxt.f / cur.f);
            const double dz = std::abs(nxt.z - cur.z);
            if (std::abs(dphi) <= 1.0 || dz < 1e-13) {
                total += dphi;
                cur = nxt;
                stack.pop_back();
                depth = std::max(0, depth - 1);
            } else {
                if (++depth > 48)
                    throw NumericalError("winding_number: cannot resolve contour argument");
                const cplx mid = 0.5 * (cur.z + nxt.z);
                stack.push_back({mid, F(mid)});
            }
        }
    }
    const double w = total / (2.0 * pi);
    const int iw = (int)std::lround(w);
    if (std::abs(w - iw) > 0.05)
        throw NumericalError("winding_number: non-integer winding " + std::to_string(w));
    return iw;
}

} // namespace slspec
