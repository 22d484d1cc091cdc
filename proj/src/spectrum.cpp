#include "slspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "slspec/parallel.hpp"
#include "slspec/rootfind.hpp"

namespace slspec {

void SpectralSequence::validate() const
{
    cplx prev(-1e300, 0.0);
    for (size_t i = 0; i < values.size(); ++i) {
        const cplx z = values[i];
        if (!(z == cplx(0.0) || (std::arg(z) > -pi / 2 - 1e-12 && std::arg(z) <= pi / 2 + 1e-12)))
            throw NumericalError("SpectralSequence: value outside the sector Omega");
        if (i > 0) {
            const bool tie = std::abs(z.real() - prev.real()) <= 1e-9;
            if (!tie && z.real() < prev.real())
                throw NumericalError("SpectralSequence: ordering by real part violated");
            if (tie && z.imag() + 1e-12 < prev.imag())
                throw NumericalError("SpectralSequence: ordering by imaginary part violated");
        }
        prev = z;
    }
}

namespace {

double bracket_center(BoundaryCondition bc, int n)
{
    return bc == BoundaryCondition::dirichlet ? pi * n : pi * (n - 0.5);
}

void order_in_Omega(std::vector<cplx>& v)
{
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

} // namespace

SpectralSequence locate_real(const GridFunction& coeff, SystemForm form,
                             BoundaryCondition bc, int n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("locate_real: n_max must be positive");
    if (coeff.max_abs_imag() > 1e-12 * (1.0 + coeff.max_abs()))
        throw std::invalid_argument("locate_real: potential must be real-valued");

    const PreparedCoeff pc = prepare_coefficient(coeff);
    auto F = [&](double lam) { return char_value(pc, lam, form, bc).real(); };

    RealRootOptions opts;
    // half a spacing past the last expected root, so the (n_max+1)-th root
    // stays clear of the scan edge for either boundary condition
    opts.scan_max = bracket_center(bc, n_max) + pi / 2;
    opts.n_expected = n_max;
    std::vector<double> roots = scan_real_roots(F, opts);

    SpectralSequence seq;
    seq.bc = bc;
    seq.values.assign(roots.begin(), roots.end());
    seq.residuals.resize(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) {
        seq.residuals[i] = std::abs(char_value(pc, roots[i], form, bc));
        if (seq.residuals[i] > root_residual_tol * (1.0 + roots[i]))
            throw NumericalError("locate_real: residual " + std::to_string(seq.residuals[i]) +
                                 " at root " + std::to_string(roots[i]) +
                                 " exceeds the per-root tolerance");
    }
    seq.validate();
    return seq;
}

namespace {

struct Box {
    double re_lo, re_hi, im_lo, im_hi;
    int winding = 0;
};

cplx newton_complex(const std::function<cplx(cplx)>& F, cplx z0, const Box& box)
{
    cplx z = z0;
    for (int i = 0; i < 50; ++i) {
        const double d = 1e-7 * std::max(1.0, std::abs(z));
        const cplx der = (F(z + d) - F(z - d)) / (2.0 * d);
        if (der == cplx(0.0)) break;
        const cplx step = F(z) / der;
        z -= step;
        if (std::abs(step) <= 1e-13 * (1.0 + std::abs(z))) break;
    }
    if (z.real() < box.re_lo - 0.5 || z.real() > box.re_hi + 0.5 ||
        std::abs(z.imag()) > std::abs(box.im_hi) + 0.5)
        throw NumericalError("locate_complex: Newton left its isolation box");
    return z;
}

// roots (with multiplicity) inside one box via recursive bisection of the
// argument-principle count
void isolate_roots(const std::function<cplx(cplx)>& F, Box box, int expected,
                   std::vector<cplx>& out, int depth = 0)
{
    if (expected <= 0) return;
    const double diam = std::hypot(box.re_hi - box.re_lo, box.im_hi - box.im_lo);
    if (expected == 1) {
        out.push_back(newton_complex(
            F, cplx(0.5 * (box.re_lo + box.re_hi), 0.5 * (box.im_lo + box.im_hi)), box));
        return;
    }
    if (diam < 1e-6 || depth > 60) {
        // unresolvable cluster: report the centroid with multiplicity
        const cplx c(0.5 * (box.re_lo + box.re_hi), 0.5 * (box.im_lo + box.im_hi));
        for (int i = 0; i < expected; ++i) out.push_back(c);
        return;
    }
    // split the longer side; nudge the cut if it lands on a zero
    const bool split_re = (box.re_hi - box.re_lo) >= (box.im_hi - box.im_lo);
    for (double shift : {0.0, 0.017, -0.023, 0.041}) {
        Box a = box, b = box;
        if (split_re) {
            const double cut = 0.5 * (box.re_lo + box.re_hi) + shift * (box.re_hi - box.re_lo);
            a.re_hi = cut;
            b.re_lo = cut;
        } else {
            const double cut = 0.5 * (box.im_lo + box.im_hi) + shift * (box.im_hi - box.im_lo);
            a.im_hi = cut;
            b.im_lo = cut;
        }
        try {
            const int wa = winding_number(F, cplx(a.re_lo, a.im_lo), cplx(a.re_hi, a.im_hi));
            const int wb = winding_number(F, cplx(b.re_lo, b.im_lo), cplx(b.re_hi, b.im_hi));
            if (wa + wb != expected) continue; // a zero sat on the cut
            isolate_roots(F, a, wa, out, depth + 1);
            isolate_roots(F, b, wb, out, depth + 1);
            return;
        } catch (const NumericalError&) {
            continue;
        }
    }
    throw NumericalError("locate_complex: could not split a multi-root box");
}

} // namespace

SpectralSequence locate_complex(const GridFunction& coeff, SystemForm form,
                                BoundaryCondition bc, int n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("locate_complex: n_max must be positive");
    const PreparedCoeff pc = prepare_coefficient(coeff);
    auto F = [&](cplx lam) { return char_value(pc, lam, form, bc); };

    // per-box winding counts, growing H until the counts stabilize
    std::vector<int> counts((size_t)n_max, -1);
    double H = 1.0;
    std::vector<int> prev;
    for (int grow = 0; grow < 8; ++grow, H *= 2.0) {
        std::vector<int> cur((size_t)n_max, 0);
        bool ok = true;
        for (int n = 1; n <= n_max && ok; ++n) {
            const double c = bracket_center(bc, n);
            double wl = pi / 2, wr = pi / 2, hh = H;
            bool done = false;
            for (int attempt = 0; attempt < 5 && !done; ++attempt) {
                try {
                    cur[(size_t)n - 1] = winding_number(
                        F, cplx(std::max(1e-6, c - wl), -hh), cplx(c + wr, hh));
                    done = true;
                } catch (const NumericalError&) {
                    // contour too close to a root: dilate and retry
                    wl *= 1.031; wr *= 1.043; hh *= 1.05;
                }
            }
            if (!done) ok = false;
        }
        if (!ok) continue;
        if (cur == prev) { counts = cur; break; }
        prev = cur;
        counts = cur;
    }

    int total = 0;
    for (int w : counts) total += std::max(0, w);
    if (total != n_max)
        throw BracketingError("locate_complex: winding counts sum to " + std::to_string(total) +
                              " over the scanned rectangles, expected " + std::to_string(n_max));

    std::vector<std::vector<cplx>> per_box((size_t)n_max);
    par::parallel_for(n_max, [&](std::int64_t i) {
        const int n = (int)i + 1;
        const int expected = counts[(size_t)i];
        if (expected <= 0) return;
        const double c = bracket_center(bc, n);
        Box box{std::max(1e-6, c - pi / 2), c + pi / 2, -H, H, expected};
        isolate_roots(F, box, expected, per_box[(size_t)i]);
    });

    SpectralSequence seq;
    seq.bc = bc;
    for (auto& v : per_box)
        for (cplx z : v) seq.values.push_back(normalize_to_Omega(z));
    order_in_Omega(seq.values);
    seq.residuals.resize(seq.values.size());
    for (size_t i = 0; i < seq.values.size(); ++i) {
        seq.residuals[i] = std::abs(F(seq.values[i]));
        if (seq.residuals[i] > root_residual_tol * (1.0 + std::abs(seq.values[i])))
            throw NumericalError("locate_complex: residual above the per-root tolerance");
    }
    seq.validate();
    return seq;
}

cplx normalize_to_Omega(cplx z)
{
    if (z == cplx(0.0)) return z;
    const double a = std::arg(z);
    if (a > -pi / 2 && a <= pi / 2) return z;
    return -z;
}

SpectralSequence unshift(const SpectralSequence& seq)
{
    SpectralSequence out = seq;
    if (seq.shift_C == 0.0) return out;
    for (auto& z : out.values)
        z = normalize_to_Omega(std::sqrt(z * z - seq.shift_C));
    out.shift_C = 0.0;
    order_in_Omega(out.values);
    return out;
}

CoeffSeq remainders(const SpectralSequence& seq)
{
    if (seq.shift_C != 0.0)
        throw std::invalid_argument("remainders: sequence still carries an accretivity shift");
    std::vector<cplx> v(seq.values.size());
    for (size_t i = 0; i < v.size(); ++i) {
        const int n = (int)i + 1;
        v[i] = seq.values[i] - bracket_center(seq.bc, n);
    }
    return CoeffSeq(SeqKind::plain, 1, std::move(v));
}

} // namespace slspec
