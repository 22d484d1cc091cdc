#ifndef SLSPEC_GRIDFUN_HPP
#define SLSPEC_GRIDFUN_HPP

#include <cstdint>
#include <vector>

#include "slspec/coeffseq.hpp"
#include "slspec/common.hpp"

namespace slspec {

// Complex-valued function sampled at the nodes x_k = k/M of a uniform grid
// on [0,1].  values[k] holds the limit from the right at node k; a declared
// discontinuity at an interior node stores the limit from the left in
// `breakpoints`.  `fine`, when present, holds sub-cell samples at rate
// fine_rate per cell (used for near-exact cell averages in the propagator);
// it shares the breakpoint convention at the coarse nodes.
struct GridFunction {
    struct Breakpoint {
        int node = 0;
        cplx left{};
    };

    int cells = 0;                     // M
    std::vector<cplx> values;          // M+1 node samples
    std::vector<Breakpoint> breakpoints; // sorted, strictly interior
    std::vector<cplx> fine;            // optional, M*fine_rate + 1 samples
    int fine_rate = 0;                 // 0 when fine is absent

    GridFunction() = default;
    GridFunction(int M, std::vector<cplx> node_values,
                 std::vector<Breakpoint> bps = {});

    static GridFunction constant(int M, cplx c);
    template <typename F> static GridFunction sample(int M, F&& fn, int fine_rate = 0)
    {
        std::vector<cplx> v((size_t)M + 1);
        for (int k = 0; k <= M; ++k) v[(size_t)k] = fn((double)k / M);
        GridFunction g(M, std::move(v));
        if (fine_rate > 1) {
            const int K = M * fine_rate;
            g.fine.resize((size_t)K + 1);
            for (int j = 0; j <= K; ++j) g.fine[(size_t)j] = fn((double)j / K);
            g.fine_rate = fine_rate;
        }
        return g;
    }

    double h() const { return 1.0 / cells; }
    double node_x(int k) const { return (double)k / cells; }

    bool is_breakpoint(int node) const;
    cplx value_right(int node) const { return values[(size_t)node]; }
    cplx value_left(int node) const;

    // linear interpolation inside a cell (breakpoint-aware at cell edges)
    cplx value_at(double x) const;

    double max_abs() const;
    double max_abs_imag() const;

    void validate() const;
};

// pointwise algebra (breakpoint sets merge; fine data kept when compatible)
GridFunction add(const GridFunction& f, const GridFunction& g);
GridFunction sub(const GridFunction& f, const GridFunction& g);
GridFunction multiply(const GridFunction& f, const GridFunction& g);
GridFunction scale(const GridFunction& f, cplx c);
// f + c*x
GridFunction add_linear(const GridFunction& f, cplx c);

// integral over [0,1]: composite Simpson applied piecewise between
// breakpoints, trapezoid fallback on the odd cell of a piece
cplx quadrature(const GridFunction& f);
// L2 norm sqrt(int |f|^2)
double l2_norm(const GridFunction& f);

// int f cos(omega x) dx and int f sin(omega x) dx for arbitrary real omega,
// by product integration (piecewise-quadratic interpolation against exact
// trigonometric moments); the error decays with omega instead of growing
std::pair<cplx, cplx> oscillatory_integrals(const GridFunction& f, double omega);

// int f(x) sin(pi n x) dx  /  int f(x) cos(pi n x) dx; guard n <= M/4
cplx fourier_coeff(const GridFunction& f, int n, SeqKind kind);
// coefficients n = n_lo..n_hi packed into a CoeffSeq
CoeffSeq fourier_coeffs(const GridFunction& f, int n_lo, int n_hi, SeqKind kind);

// (Vf)(x) = (1-2x) f(x);  (Rf)(x) = f(1-x)
GridFunction apply_V(const GridFunction& f);
GridFunction apply_R(const GridFunction& f);

// (f*g)(x) = int_0^x f(x-t) g(t) dt
GridFunction convolve(const GridFunction& f, const GridFunction& g);
// h(x) = int_0^x f g
GridFunction cumulative_integral(const GridFunction& f, const GridFunction& g);
// h(x) = int_0^{1-x} f(x+t) g(t) dt
GridFunction correlate(const GridFunction& f, const GridFunction& g);

enum class ProductIdentity { h1, h2, h3 };
// the combinations of *, R with c_n(f)c_n(g) = c_n(h1), s_n(f)s_n(g) = c_n(h2),
// s_n(f)c_n(g) = s_n(h3)
GridFunction product_identity_h(const GridFunction& f, const GridFunction& g,
                                ProductIdentity which);

struct IteratedIntegralOptions {
    std::uint64_t seed = 0x51;
    int mc_samples = 200000;       // per node, n >= 4 only
    double tolerance = 0.0;        // 0 = no standard-error gate
};

struct IteratedIntegralResult {
    GridFunction value;
    std::vector<double> std_error; // per node; zeros for n <= 3
};

// I_n(f_1,...,f_n): n = 2 delegates to correlate, n = 3 uses exact nested
// Simpson over the reduced 2-d region, n = 4,5 use stratified Monte Carlo
// over the ordered simplex with counter-based per-node seeds.
IteratedIntegralResult iterated_integral_In(const std::vector<GridFunction>& fs,
                                            const IteratedIntegralOptions& opts = {});

// partial-sum synthesis of a sine or cosine coefficient sequence at M+1 nodes
GridFunction synthesize(const CoeffSeq& coeffs, int M, int fine_rate = 0);

} // namespace slspec

#endif
