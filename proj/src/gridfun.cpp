#include "slspec/gridfun.hpp"

#include <algorithm>
#include <cmath>

#include "slspec/parallel.hpp"
#include "slspec/rng.hpp"

namespace slspec {

namespace {

// integrand sampled on nodes 0..K with one-sided limits and interior
// discontinuity nodes; the basic unit all quadratures reduce to
struct NodeTrace {
    std::vector<cplx> left, right;
    std::vector<int> bps; // sorted, strictly inside (0, K)

    int K() const { return (int)right.size() - 1; }
};

// composite Simpson over one smooth piece [p, q] (node indices); odd cell
// counts fall back to a trapezoid on the final cell
cplx integrate_piece(const NodeTrace& tr, int p, int q, double h)
{
    const int nc = q - p;
    if (nc <= 0) return 0.0;
    auto val = [&](int j) -> cplx {
        if (j == p) return tr.right[(size_t)j];
        if (j == q) return tr.left[(size_t)j];
        return tr.right[(size_t)j];
    };
    if (nc == 1)
        return 0.5 * h * (val(p) + val(q));

    const int q_even = (nc % 2 == 0) ? q : q - 1;
    cplx sum = val(p) + val(q_even);
    for (int j = p + 1; j < q_even; ++j)
        sum += ((j - p) % 2 == 1 ? 4.0 : 2.0) * val(j);
    cplx result = sum * (h / 3.0);
    if (q_even != q)
        result += 0.5 * h * (val(q_even) + val(q));
    return result;
}

cplx integrate_trace(const NodeTrace& tr, double h)
{
    cplx total = 0.0;
    int p = 0;
    for (int b : tr.bps) {
        total += integrate_piece(tr, p, b, h);
        p = b;
    }
    total += integrate_piece(tr, p, tr.K(), h);
    return total;
}

void merge_sorted_unique(std::vector<int>& dst, int lo, int hi)
{
    std::sort(dst.begin(), dst.end());
    dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
    dst.erase(std::remove_if(dst.begin(), dst.end(),
                             [&](int b) { return b <= lo || b >= hi; }),
              dst.end());
}

std::vector<GridFunction::Breakpoint> merged_breakpoints(
    const GridFunction& f, const GridFunction& g,
    const std::function<cplx(cplx, cplx)>& op)
{
    std::vector<int> nodes;
    for (const auto& b : f.breakpoints) nodes.push_back(b.node);
    for (const auto& b : g.breakpoints) nodes.push_back(b.node);
    merge_sorted_unique(nodes, 0, f.cells);
    std::vector<GridFunction::Breakpoint> out;
    out.reserve(nodes.size());
    for (int n : nodes)
        out.push_back({n, op(f.value_left(n), g.value_left(n))});
    return out;
}

void require_same_grid(const GridFunction& f, const GridFunction& g, const char* who)
{
    if (f.cells != g.cells)
        throw GridMismatchError(std::string(who) + ": grids of " +
                                std::to_string(f.cells) + " and " +
                                std::to_string(g.cells) + " cells");
}

// Simpson weight vector (without the h factor) for K cells, trapezoid
// fallback on the last cell when K is odd
std::vector<double> simpson_weights(int K)
{
    std::vector<double> w((size_t)K + 1, 0.0);
    if (K <= 0) return w;
    if (K == 1) { w[0] = w[1] = 0.5; return w; }
    const int Ke = (K % 2 == 0) ? K : K - 1;
    w[0] += 1.0 / 3.0;
    w[(size_t)Ke] += 1.0 / 3.0;
    for (int j = 1; j < Ke; ++j) w[(size_t)j] += (j % 2 == 1 ? 4.0 : 2.0) / 3.0;
    if (Ke != K) { w[(size_t)Ke] += 0.5; w[(size_t)K] += 0.5; }
    return w;
}

} // namespace

GridFunction::GridFunction(int M, std::vector<cplx> node_values,
                           std::vector<Breakpoint> bps)
    : cells(M), values(std::move(node_values)), breakpoints(std::move(bps))
{
    validate();
}

void GridFunction::validate() const
{
    if (cells < 16)
        throw std::invalid_argument("GridFunction: need at least 16 cells");
    if ((int)values.size() != cells + 1)
        throw std::invalid_argument("GridFunction: values size must be M+1");
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("GridFunction: non-finite sample");
    int prev = 0;
    for (const auto& b : breakpoints) {
        if (b.node <= prev || b.node >= cells)
            throw std::invalid_argument("GridFunction: breakpoints must be sorted interior nodes");
        prev = b.node;
    }
    if (fine_rate > 0 && (int)fine.size() != cells * fine_rate + 1)
        throw std::invalid_argument("GridFunction: fine sample size mismatch");
}

GridFunction GridFunction::constant(int M, cplx c)
{
    return GridFunction(M, std::vector<cplx>((size_t)M + 1, c));
}

bool GridFunction::is_breakpoint(int node) const
{
    for (const auto& b : breakpoints)
        if (b.node == node) return true;
    return false;
}

cplx GridFunction::value_left(int node) const
{
    for (const auto& b : breakpoints)
        if (b.node == node) return b.left;
    return values[(size_t)node];
}

cplx GridFunction::value_at(double x) const
{
    if (x <= 0.0) return values[0];
    if (x >= 1.0) return value_left(cells);
    const double t = x * cells;
    int j = (int)t;
    if (j >= cells) j = cells - 1;
    const double frac = t - j;
    const cplx a = value_right(j);
    const cplx b = value_left(j + 1);
    return a + frac * (b - a);
}

double GridFunction::max_abs() const
{
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    for (const auto& b : breakpoints) m = std::max(m, std::abs(b.left));
    return m;
}

double GridFunction::max_abs_imag() const
{
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v.imag()));
    for (const auto& b : breakpoints) m = std::max(m, std::abs(b.left.imag()));
    return m;
}

namespace {

GridFunction pointwise(const GridFunction& f, const GridFunction& g,
                       const std::function<cplx(cplx, cplx)>& op)
{
    require_same_grid(f, g, "pointwise");
    std::vector<cplx> v((size_t)f.cells + 1);
    for (int k = 0; k <= f.cells; ++k)
        v[(size_t)k] = op(f.value_right(k), g.value_right(k));
    GridFunction out(f.cells, std::move(v), merged_breakpoints(f, g, op));
    if (f.fine_rate > 0 && f.fine_rate == g.fine_rate) {
        out.fine.resize(f.fine.size());
        for (size_t j = 0; j < f.fine.size(); ++j)
            out.fine[j] = op(f.fine[j], g.fine[j]);
        out.fine_rate = f.fine_rate;
    }
    return out;
}

} // namespace

GridFunction add(const GridFunction& f, const GridFunction& g)
{
    return pointwise(f, g, [](cplx a, cplx b) { return a + b; });
}

GridFunction sub(const GridFunction& f, const GridFunction& g)
{
    return pointwise(f, g, [](cplx a, cplx b) { return a - b; });
}

GridFunction multiply(const GridFunction& f, const GridFunction& g)
{
    return pointwise(f, g, [](cplx a, cplx b) { return a * b; });
}

GridFunction scale(const GridFunction& f, cplx c)
{
    GridFunction out = f;
    for (auto& v : out.values) v *= c;
    for (auto& b : out.breakpoints) b.left *= c;
    for (auto& v : out.fine) v *= c;
    return out;
}

GridFunction add_linear(const GridFunction& f, cplx c)
{
    GridFunction out = f;
    for (int k = 0; k <= f.cells; ++k) out.values[(size_t)k] += c * f.node_x(k);
    for (auto& b : out.breakpoints) b.left += c * f.node_x(b.node);
    if (out.fine_rate > 0) {
        const int K = f.cells * f.fine_rate;
        for (int j = 0; j <= K; ++j) out.fine[(size_t)j] += c * ((double)j / K);
    }
    return out;
}

namespace {

NodeTrace trace_of(const GridFunction& f)
{
    NodeTrace tr;
    tr.right = f.values;
    tr.left = f.values;
    for (const auto& b : f.breakpoints) {
        tr.left[(size_t)b.node] = b.left;
        tr.bps.push_back(b.node);
    }
    return tr;
}

} // namespace

cplx quadrature(const GridFunction& f)
{
    return integrate_trace(trace_of(f), f.h());
}

double l2_norm(const GridFunction& f)
{
    NodeTrace tr = trace_of(f);
    for (auto& v : tr.right) v = std::norm(v);
    for (auto& v : tr.left) v = std::norm(v);
    return std::sqrt(std::abs(integrate_trace(tr, f.h())));
}

namespace {

// moments int_{-1}^{1} t^m e^{i theta t} dt, series-guarded near theta = 0
void trig_moments(double theta, cplx& I0, cplx& I1, cplx& I2)
{
    if (std::abs(theta) < 0.05) {
        const double t2 = theta * theta;
        I0 = 2.0 * (1.0 - t2 / 6.0 + t2 * t2 / 120.0 - t2 * t2 * t2 / 5040.0);
        I1 = cplx(0.0, 2.0 * theta *
                           (1.0 / 3.0 - t2 / 30.0 + t2 * t2 / 840.0 - t2 * t2 * t2 / 45360.0));
        I2 = 2.0 * (1.0 / 3.0 - t2 / 10.0 + t2 * t2 / 168.0 - t2 * t2 * t2 / 6480.0);
        return;
    }
    const double s = std::sin(theta), c = std::cos(theta);
    I0 = 2.0 * s / theta;
    I1 = cplx(0.0, 2.0 * (s - theta * c) / (theta * theta));
    I2 = 2.0 * ((theta * theta - 2.0) * s + 2.0 * theta * c) / (theta * theta * theta);
}

struct FilonSums {
    cplx cos_part{}; // int f cos(omega x)
    cplx sin_part{}; // int f sin(omega x)
};

// product integration of f against sin/cos(omega x) over one smooth piece:
// quadratic interpolation on cell pairs, linear on an odd trailing cell,
// trigonometric moments integrated exactly.  Keeps the coefficient error
// decaying with the index instead of growing like (omega h)^3, and is valid
// for complex-valued samples.
FilonSums filon_piece(const NodeTrace& tr, int p, int q, double h, double omega)
{
    auto val = [&](int j) -> cplx {
        if (j == p) return tr.right[(size_t)j];
        if (j == q) return tr.left[(size_t)j];
        return tr.right[(size_t)j];
    };
    FilonSums total;
    int j = p;
    cplx I0, I1, I2;
    const int q_pair = p + ((q - p) / 2) * 2;
    trig_moments(omega * h, I0, I1, I2);
    for (; j + 2 <= q_pair; j += 2) {
        const cplx f0 = val(j), f1 = val(j + 1), f2 = val(j + 2);
        const cplx A = f1 * I0.real() + 0.5 * (f2 - 2.0 * f1 + f0) * I2.real();
        const cplx B = 0.5 * (f2 - f0) * I1.imag();
        const double xc = (j + 1) * h;
        const double cw = std::cos(omega * xc), sw = std::sin(omega * xc);
        total.cos_part += h * (cw * A - sw * B);
        total.sin_part += h * (sw * A + cw * B);
    }
    if (j < q) { // single trailing cell, linear interpolation
        trig_moments(omega * h * 0.5, I0, I1, I2);
        const cplx f0 = val(j), f1 = val(j + 1);
        const cplx A = 0.5 * (f0 + f1) * I0.real();
        const cplx B = 0.5 * (f1 - f0) * I1.imag();
        const double xc = (j + 0.5) * h;
        const double cw = std::cos(omega * xc), sw = std::sin(omega * xc);
        total.cos_part += 0.5 * h * (cw * A - sw * B);
        total.sin_part += 0.5 * h * (sw * A + cw * B);
    }
    return total;
}

} // namespace

namespace {

// sub-cell samples as a trace of their own, so coefficient integrals see the
// full resolution the potential carries
NodeTrace fine_trace_of(const GridFunction& f)
{
    NodeTrace tr;
    tr.right = f.fine;
    tr.left = f.fine;
    for (const auto& b : f.breakpoints) {
        tr.left[(size_t)b.node * f.fine_rate] = b.left;
        tr.bps.push_back(b.node * f.fine_rate);
    }
    return tr;
}

} // namespace

std::pair<cplx, cplx> oscillatory_integrals(const GridFunction& f, double omega)
{
    const bool use_fine = f.fine_rate >= 2;
    const NodeTrace tr = use_fine ? fine_trace_of(f) : trace_of(f);
    const double h = use_fine ? f.h() / f.fine_rate : f.h();
    FilonSums acc;
    int p = 0;
    for (int b : tr.bps) {
        const FilonSums part = filon_piece(tr, p, b, h, omega);
        acc.cos_part += part.cos_part;
        acc.sin_part += part.sin_part;
        p = b;
    }
    const FilonSums part = filon_piece(tr, p, tr.K(), h, omega);
    acc.cos_part += part.cos_part;
    acc.sin_part += part.sin_part;
    return {acc.cos_part, acc.sin_part};
}

cplx fourier_coeff(const GridFunction& f, int n, SeqKind kind)
{
    if (kind == SeqKind::plain)
        throw std::invalid_argument("fourier_coeff: kind must be sine or cosine");
    if (kind == SeqKind::sine && n < 1)
        throw std::invalid_argument("fourier_coeff: sine index starts at 1");
    if (kind == SeqKind::cosine && n < 0)
        throw std::invalid_argument("fourier_coeff: negative index");
    if (4 * n > f.cells)
        throw ResolutionError("fourier_coeff: n = " + std::to_string(n) +
                              " beyond resolution guard M/4 = " + std::to_string(f.cells / 4));

    const auto [cos_part, sin_part] = oscillatory_integrals(f, pi * n);
    return kind == SeqKind::sine ? sin_part : cos_part;
}

CoeffSeq fourier_coeffs(const GridFunction& f, int n_lo, int n_hi, SeqKind kind)
{
    std::vector<cplx> v((size_t)(n_hi - n_lo + 1));
    par::parallel_for(n_hi - n_lo + 1, [&](std::int64_t i) {
        v[(size_t)i] = fourier_coeff(f, n_lo + (int)i, kind);
    });
    return CoeffSeq(kind, n_lo, std::move(v));
}

GridFunction apply_V(const GridFunction& f)
{
    GridFunction out = f;
    for (int k = 0; k <= f.cells; ++k) out.values[(size_t)k] *= (1.0 - 2.0 * f.node_x(k));
    for (auto& b : out.breakpoints) b.left *= (1.0 - 2.0 * f.node_x(b.node));
    if (out.fine_rate > 0) {
        const int K = f.cells * f.fine_rate;
        for (int j = 0; j <= K; ++j) out.fine[(size_t)j] *= (1.0 - 2.0 * (double)j / K);
    }
    return out;
}

GridFunction apply_R(const GridFunction& f)
{
    const int M = f.cells;
    std::vector<cplx> v((size_t)M + 1);
    std::vector<GridFunction::Breakpoint> bps;
    for (int k = 0; k <= M; ++k) v[(size_t)k] = f.value_left(M - k);
    for (auto it = f.breakpoints.rbegin(); it != f.breakpoints.rend(); ++it)
        bps.push_back({M - it->node, f.value_right(it->node)});
    GridFunction out(M, std::move(v), std::move(bps));
    if (f.fine_rate > 0) {
        out.fine.assign(f.fine.rbegin(), f.fine.rend());
        out.fine_rate = f.fine_rate;
        // fine shares the coarse-node side convention: patch reflected sides
        for (const auto& b : f.breakpoints)
            out.fine[(size_t)(M - b.node) * f.fine_rate] = b.left;
    }
    return out;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g)
{
    require_same_grid(f, g, "convolve");
    const int M = f.cells;
    const NodeTrace tf = trace_of(f), tg = trace_of(g);
    std::vector<cplx> out((size_t)M + 1);

    par::parallel_for(M + 1, [&](std::int64_t kk) {
        const int k = (int)kk;
        if (k == 0) { out[0] = 0.0; return; }
        NodeTrace tr;
        tr.right.resize((size_t)k + 1);
        tr.left.resize((size_t)k + 1);
        for (int j = 0; j <= k; ++j) {
            tr.right[(size_t)j] = tf.left[(size_t)(k - j)] * tg.right[(size_t)j];
            tr.left[(size_t)j] = tf.right[(size_t)(k - j)] * tg.left[(size_t)j];
        }
        tr.bps = tg.bps;
        for (int b : tf.bps) tr.bps.push_back(k - b);
        merge_sorted_unique(tr.bps, 0, k);
        out[(size_t)k] = integrate_trace(tr, f.h());
    });
    return GridFunction(M, std::move(out));
}

GridFunction cumulative_integral(const GridFunction& f, const GridFunction& g)
{
    require_same_grid(f, g, "cumulative_integral");
    const int M = f.cells;
    NodeTrace prod;
    {
        const NodeTrace tf = trace_of(f), tg = trace_of(g);
        prod.right.resize((size_t)M + 1);
        prod.left.resize((size_t)M + 1);
        for (int j = 0; j <= M; ++j) {
            prod.right[(size_t)j] = tf.right[(size_t)j] * tg.right[(size_t)j];
            prod.left[(size_t)j] = tf.left[(size_t)j] * tg.left[(size_t)j];
        }
        prod.bps = tf.bps;
        for (int b : tg.bps) prod.bps.push_back(b);
        merge_sorted_unique(prod.bps, 0, M);
    }
    std::vector<cplx> out((size_t)M + 1);
    par::parallel_for(M + 1, [&](std::int64_t kk) {
        const int k = (int)kk;
        if (k == 0) { out[0] = 0.0; return; }
        NodeTrace tr;
        tr.right.assign(prod.right.begin(), prod.right.begin() + k + 1);
        tr.left.assign(prod.left.begin(), prod.left.begin() + k + 1);
        for (int b : prod.bps)
            if (b < k) tr.bps.push_back(b);
        out[(size_t)k] = integrate_trace(tr, f.h());
    });
    return GridFunction(M, std::move(out));
}

GridFunction correlate(const GridFunction& f, const GridFunction& g)
{
    require_same_grid(f, g, "correlate");
    const int M = f.cells;
    const NodeTrace tf = trace_of(f), tg = trace_of(g);
    std::vector<cplx> out((size_t)M + 1);

    par::parallel_for(M + 1, [&](std::int64_t kk) {
        const int k = (int)kk;
        const int K = M - k;
        if (K == 0) { out[(size_t)k] = 0.0; return; }
        NodeTrace tr;
        tr.right.resize((size_t)K + 1);
        tr.left.resize((size_t)K + 1);
        for (int j = 0; j <= K; ++j) {
            tr.right[(size_t)j] = tf.right[(size_t)(k + j)] * tg.right[(size_t)j];
            tr.left[(size_t)j] = tf.left[(size_t)(k + j)] * tg.left[(size_t)j];
        }
        tr.bps = tg.bps;
        for (int b : tf.bps) tr.bps.push_back(b - k);
        merge_sorted_unique(tr.bps, 0, K);
        out[(size_t)k] = integrate_trace(tr, f.h());
    });
    return GridFunction(M, std::move(out));
}

GridFunction product_identity_h(const GridFunction& f, const GridFunction& g,
                                ProductIdentity which)
{
    require_same_grid(f, g, "product_identity_h");
    const GridFunction Rf = apply_R(f), Rg = apply_R(g);
    const GridFunction a = convolve(Rf, g);   // Rf * g
    const GridFunction b = convolve(f, Rg);   // f * Rg
    const GridFunction c = convolve(f, g);    // f * g
    const GridFunction d = convolve(Rf, Rg);  // Rf * Rg

    GridFunction out(f.cells, std::vector<cplx>((size_t)f.cells + 1, 0.0));
    switch (which) {
    case ProductIdentity::h1:
        out = scale(add(apply_R(add(a, b)), add(c, d)), 0.5);
        break;
    case ProductIdentity::h2:
        out = scale(sub(apply_R(add(a, b)), add(c, d)), 0.5);
        break;
    case ProductIdentity::h3:
        out = scale(add(apply_R(sub(a, b)), sub(c, d)), 0.5);
        break;
    }
    return out;
}

namespace {

GridFunction iterated_n3(const GridFunction& f1, const GridFunction& f2,
                         const GridFunction& f3)
{
    const int M = f1.cells;
    const double h = f1.h();
    std::vector<cplx> out((size_t)M + 1);

    // g(s) = int_0^s dt2 f3(t2) int_0^{1-s} f1(s+t1) f2(t1+t2) dt1
    par::parallel_for(M + 1, [&](std::int64_t ii) {
        const int i = (int)ii;
        const int Ko = i, Ki = M - i;
        if (Ko == 0 || Ki == 0) { out[(size_t)i] = 0.0; return; }
        const auto wo = simpson_weights(Ko);
        const auto wi = simpson_weights(Ki);
        cplx acc = 0.0;
        for (int m = 0; m <= Ko; ++m) {
            cplx inner = 0.0;
            for (int j = 0; j <= Ki; ++j)
                inner += wi[(size_t)j] * f1.values[(size_t)(i + j)] * f2.values[(size_t)(j + m)];
            acc += wo[(size_t)m] * f3.values[(size_t)m] * inner;
        }
        out[(size_t)i] = acc * h * h;
    });
    return GridFunction(M, std::move(out));
}

void iterated_mc(const std::vector<GridFunction>& fs,
                 const IteratedIntegralOptions& opts,
                 std::vector<cplx>& value, std::vector<double>& se)
{
    const int n = (int)fs.size();
    const int dims = n - 1;
    const int M = fs[0].cells;
    const int N = opts.mc_samples;
    double vol = 1.0;
    for (int d = 2; d <= dims; ++d) vol /= d;

    value.assign((size_t)M + 1, 0.0);
    se.assign((size_t)M + 1, 0.0);

    par::parallel_for(M + 1, [&](std::int64_t ii) {
        const int i = (int)ii;
        const double s = (double)i / M;
        cplx sum = 0.0;
        double sum2 = 0.0;
        double y[4];
        for (int c = 0; c < N; ++c) {
            // first coordinate stratified over the sample index
            y[0] = ((double)c + rng::uniform01(opts.seed, (std::uint64_t)i, 4ull * c)) / N;
            for (int d = 1; d < dims; ++d)
                y[d] = rng::uniform01(opts.seed, (std::uint64_t)i, 4ull * c + d);
            std::sort(y, y + dims, std::greater<double>());
            double xi = 0.0;
            for (int d = 0; d < dims; ++d) xi += (d % 2 == 0 ? y[d] : -y[d]);
            const double top = s + xi;
            if (y[0] <= top && top <= 1.0) {
                cplx w = fs[0].value_at(top);
                for (int d = 0; d < dims; ++d) w *= fs[(size_t)d + 1].value_at(y[d]);
                sum += w;
                sum2 += std::norm(w);
            }
        }
        const cplx mean = sum / (double)N;
        value[(size_t)i] = vol * mean;
        const double var = std::max(0.0, sum2 / N - std::norm(mean));
        se[(size_t)i] = vol * std::sqrt(var / std::max(1, N - 1));
    });
}

} // namespace

IteratedIntegralResult iterated_integral_In(const std::vector<GridFunction>& fs,
                                            const IteratedIntegralOptions& opts)
{
    const int n = (int)fs.size();
    if (n < 2 || n > 5)
        throw std::invalid_argument("iterated_integral_In: n must be in [2,5]");
    for (const auto& f : fs) require_same_grid(fs[0], f, "iterated_integral_In");

    IteratedIntegralResult res;
    res.std_error.assign((size_t)fs[0].cells + 1, 0.0);
    if (n == 2) {
        res.value = correlate(fs[0], fs[1]);
        return res;
    }
    if (n == 3) {
        res.value = iterated_n3(fs[0], fs[1], fs[2]);
        return res;
    }

    std::vector<cplx> v;
    iterated_mc(fs, opts, v, res.std_error);
    res.value = GridFunction(fs[0].cells, std::move(v));
    if (opts.tolerance > 0.0) {
        const double worst = *std::max_element(res.std_error.begin(), res.std_error.end());
        if (worst > opts.tolerance)
            throw AccuracyError("iterated_integral_In: Monte Carlo standard error " +
                                std::to_string(worst) + " above requested tolerance");
    }
    return res;
}

GridFunction synthesize(const CoeffSeq& coeffs, int M, int fine_rate)
{
    if (coeffs.kind == SeqKind::plain)
        throw std::invalid_argument("synthesize: need a sine or cosine sequence");
    if (4 * coeffs.max_index() > M)
        throw ResolutionError("synthesize: max coefficient index " +
                              std::to_string(coeffs.max_index()) +
                              " beyond resolution guard M/4");

    auto eval = [&](double x) {
        cplx acc = 0.0;
        for (int n = coeffs.start_index; n <= coeffs.max_index(); ++n) {
            const double arg = pi * n * x;
            acc += coeffs.at(n) * (coeffs.kind == SeqKind::sine ? std::sin(arg) : std::cos(arg));
        }
        return acc;
    };

    std::vector<cplx> v((size_t)M + 1);
    par::parallel_for(M + 1, [&](std::int64_t k) { v[(size_t)k] = eval((double)k / M); });
    GridFunction out(M, std::move(v));
    if (fine_rate > 1) {
        const int K = M * fine_rate;
        out.fine.resize((size_t)K + 1);
        par::parallel_for(K + 1, [&](std::int64_t j) {
            out.fine[(size_t)j] = eval((double)j / K);
        });
        out.fine_rate = fine_rate;
    }
    return out;
}

} // namespace slspec
