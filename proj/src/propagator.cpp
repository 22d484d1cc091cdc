#include "slspec/propagator.hpp"

#include <cmath>

namespace slspec {

double Mat2::max_abs() const
{
    return std::max(std::max(std::abs(a11), std::abs(a12)),
                    std::max(std::abs(a21), std::abs(a22)));
}

Mat2 step_exponential(const Mat2& B, double h)
{
    const double scale = B.max_abs();
    if (std::abs(B.trace()) > 1e-12 * std::max(1.0, scale))
        throw std::invalid_argument("step_exponential: generator must be trace-free");

    const cplx w2 = -B.det();
    const cplx z = w2 * (h * h); // (w h)^2
    cplx C, S;                   // cosh(wh), h*sinh(wh)/(wh)
    if (std::norm(z) < 1e-16) {  // |z| < 1e-8
        C = 1.0 + z * (0.5 + z * (1.0 / 24.0 + z / 720.0));
        S = h * (1.0 + z * (1.0 / 6.0 + z * (1.0 / 120.0 + z / 5040.0)));
    } else {
        const cplx w = std::sqrt(w2);
        C = std::cosh(w * h);
        S = std::sinh(w * h) / w;
    }
    return {C + S * B.a11, S * B.a12, S * B.a21, C + S * B.a22};
}

namespace {

// per-cell averages and centered moments from the R+1 sub-samples (R even):
// Simpson for the averages and first moments, trapezoid running sums for the
// antisymmetric cross moment
void cell_data_from_fine(const GridFunction& f, int k, PreparedCoeff& pc)
{
    const int R = f.fine_rate;
    const double hs = f.h() / R;
    const size_t base = (size_t)k * R;

    auto sample = [&](int j) -> cplx {
        if (j == R) {
            for (const auto& b : f.breakpoints)
                if (b.node == k + 1) return b.left; // cell ends with the left limit
        }
        return f.fine[base + (size_t)j];
    };

    cplx s1 = 0, s2 = 0, t1 = 0, t2 = 0;
    for (int j = 0; j <= R; ++j) {
        const cplx u = sample(j);
        const double w = (j == 0 || j == R) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        const double tc = (j - 0.5 * R) * hs; // t minus the cell center
        s1 += w * u;
        s2 += w * u * u;
        t1 += w * tc * u;
        t2 += w * tc * u * u;
    }
    pc.avg[(size_t)k] = s1 / (3.0 * R);
    pc.avg_sq[(size_t)k] = s2 / (3.0 * R);
    pc.m1[(size_t)k] = t1 * (hs / 3.0);
    pc.m1_sq[(size_t)k] = t2 * (hs / 3.0);

    // cross = (int f Q_{f^2} - int f^2 Q_f)/2 with Q the running integral
    cplx Qf = 0, Qf2 = 0, acc = 0;
    cplx prev = sample(0), prev2 = prev * prev;
    for (int j = 1; j <= R; ++j) {
        const cplx u = sample(j);
        const cplx u2 = u * u;
        const cplx Qf_mid = Qf + 0.25 * hs * (prev + u);
        const cplx Qf2_mid = Qf2 + 0.25 * hs * (prev2 + u2);
        acc += 0.5 * hs * ((prev + u) * Qf2_mid - (prev2 + u2) * Qf_mid);
        Qf += 0.5 * hs * (prev + u);
        Qf2 += 0.5 * hs * (prev2 + u2);
        prev = u;
        prev2 = u2;
    }
    pc.cross[(size_t)k] = 0.5 * acc;
}

// two-point fallback: linear model for f and f^2 across the cell
void cell_data_from_nodes(const GridFunction& f, int k, PreparedCoeff& pc)
{
    const double h = f.h();
    const cplx a = f.value_right(k);
    const cplx b = f.value_left(k + 1);
    const cplx a2 = a * a, b2 = b * b;
    pc.avg[(size_t)k] = 0.5 * (a + b);
    pc.avg_sq[(size_t)k] = 0.5 * (a2 + b2);
    pc.m1[(size_t)k] = h * h * (b - a) / 12.0;
    pc.m1_sq[(size_t)k] = h * h * (b2 - a2) / 12.0;
    const cplx p = (b - a) / h, q = (b2 - a2) / h;
    pc.cross[(size_t)k] =
        (p * pc.avg_sq[(size_t)k] - pc.avg[(size_t)k] * q) * (h * h * h) / 12.0;
}

} // namespace

PreparedCoeff prepare_coefficient(const GridFunction& coeff)
{
    PreparedCoeff pc;
    pc.cells = coeff.cells;
    pc.avg.resize((size_t)coeff.cells);
    pc.avg_sq.resize((size_t)coeff.cells);
    pc.m1.resize((size_t)coeff.cells);
    pc.m1_sq.resize((size_t)coeff.cells);
    pc.cross.resize((size_t)coeff.cells);
    pc.max_abs = coeff.max_abs();

    const bool use_fine = coeff.fine_rate >= 2 && coeff.fine_rate % 2 == 0;
    for (int k = 0; k < coeff.cells; ++k) {
        if (use_fine)
            cell_data_from_fine(coeff, k, pc);
        else
            cell_data_from_nodes(coeff, k, pc);
    }
    return pc;
}

// The cell transfer is exp(Omega_1 + Omega_2) with
//   Omega_1 = h (A + fbar D + gbar N),
//   Omega_2 = m1(f) [D,A] + m1(g) [N,A] + x(f,g) [D,N],
// where D = diag(1,-1), N = -e21, [D,A] = [[0,2],[2 l^2,0]], [N,A] = D and
// [D,N] = -2N; the sigma form carries g = f^2, the tau form g = 0.  The
// moments vanish on constant cells, so aligned steps stay exact.  Returned
// as the trace-free B with exp(h B) the transfer map.
Mat2 cell_generator(const PreparedCoeff& pc, int k, cplx lambda, SystemForm form)
{
    const cplx l2 = lambda * lambda;
    const double h = 1.0 / pc.cells;
    const cplx f = pc.avg[(size_t)k];
    const cplx m1h = pc.m1[(size_t)k] / h;

    if (form == SystemForm::tau_form)
        return {f, 1.0 + 2.0 * m1h, -l2 + 2.0 * l2 * m1h, -f};

    const cplx g = pc.avg_sq[(size_t)k];
    const cplx m1gh = pc.m1_sq[(size_t)k] / h;
    const cplx xh = pc.cross[(size_t)k] / h;
    return {f + m1gh, 1.0 + 2.0 * m1h, -l2 - g + 2.0 * l2 * m1h + 2.0 * xh, -f - m1gh};
}

namespace {

void check_sampling_guard(const PreparedCoeff& pc, cplx lambda)
{
    if (pc.cells < 16)
        throw std::invalid_argument("propagate: coefficient grid needs at least 16 cells");
    if (std::abs(lambda) > 0.5 * pc.cells)
        throw ResolutionError("propagate: |lambda| = " + std::to_string(std::abs(lambda)) +
                              " beyond the sampling guard M/2");
}

} // namespace

CauchyMatrix propagate(const PreparedCoeff& pc, cplx lambda, SystemForm form)
{
    check_sampling_guard(pc, lambda);
    const double h = 1.0 / pc.cells;
    Mat2 U = Mat2::identity();
    for (int k = 0; k < pc.cells; ++k)
        U = step_exponential(cell_generator(pc, k, lambda, form), h) * U;

    if (std::abs(U.det() - 1.0) > 1e-6)
        throw NumericalError("propagate: Cauchy matrix lost unimodularity");
    return {U, 1.0, lambda};
}

CauchyMatrix propagate(const GridFunction& coeff, cplx lambda, SystemForm form)
{
    return propagate(prepare_coefficient(coeff), lambda, form);
}

cplx char_value(const PreparedCoeff& pc, cplx lambda, SystemForm form, BoundaryCondition bc)
{
    const CauchyMatrix cm = propagate(pc, lambda, form);
    return bc == BoundaryCondition::dirichlet ? cm.U.a12 : cm.U.a11;
}

cplx char_value(const GridFunction& coeff, cplx lambda, SystemForm form, BoundaryCondition bc)
{
    return char_value(prepare_coefficient(coeff), lambda, form, bc);
}

cplx char_derivative(const PreparedCoeff& pc, cplx lambda, SystemForm form, BoundaryCondition bc)
{
    const double d = 1e-6 * std::max(1.0, std::abs(lambda));
    return (char_value(pc, lambda + d, form, bc) - char_value(pc, lambda - d, form, bc)) /
           (2.0 * d);
}

cplx char_derivative(const GridFunction& coeff, cplx lambda, SystemForm form, BoundaryCondition bc)
{
    return char_derivative(prepare_coefficient(coeff), lambda, form, bc);
}

PropagationTrace propagate_trace(const PreparedCoeff& pc, cplx lambda, SystemForm form,
                                 cplx init1, cplx init2, int fine_rate)
{
    check_sampling_guard(pc, lambda);
    const int M = pc.cells;
    const double h = 1.0 / M;
    PropagationTrace tr;
    tr.u1.resize((size_t)M + 1);
    tr.u2.resize((size_t)M + 1);
    if (fine_rate > 0) {
        tr.fine_rate = fine_rate;
        tr.u1_fine.resize((size_t)M * fine_rate + 1);
        tr.u2_fine.resize((size_t)M * fine_rate + 1);
    }

    cplx u1 = init1, u2 = init2;
    tr.u1[0] = u1;
    tr.u2[0] = u2;
    if (fine_rate > 0) { tr.u1_fine[0] = u1; tr.u2_fine[0] = u2; }

    for (int k = 0; k < M; ++k) {
        const Mat2 G = cell_generator(pc, k, lambda, form);
        if (fine_rate > 0) {
            for (int j = 1; j <= fine_rate; ++j) {
                const Mat2 E = step_exponential(G, h * j / fine_rate);
                tr.u1_fine[(size_t)k * fine_rate + (size_t)j] = E.a11 * u1 + E.a12 * u2;
                tr.u2_fine[(size_t)k * fine_rate + (size_t)j] = E.a21 * u1 + E.a22 * u2;
            }
        }
        const Mat2 E = step_exponential(G, h);
        const cplx n1 = E.a11 * u1 + E.a12 * u2;
        const cplx n2 = E.a21 * u1 + E.a22 * u2;
        u1 = n1;
        u2 = n2;
        tr.u1[(size_t)k + 1] = u1;
        tr.u2[(size_t)k + 1] = u2;
    }
    return tr;
}

GridFunction solution_profile(const GridFunction& coeff, cplx lambda, SystemForm form,
                              ProfileInit init, int fine_rate)
{
    const PreparedCoeff pc = prepare_coefficient(coeff);
    const cplx a = init == ProfileInit::c_type ? 1.0 : 0.0;
    const cplx b = init == ProfileInit::c_type ? 0.0 : 1.0;
    PropagationTrace tr = propagate_trace(pc, lambda, form, a, b, fine_rate);
    GridFunction out(coeff.cells, std::move(tr.u1));
    if (fine_rate > 0) {
        out.fine = std::move(tr.u1_fine);
        out.fine_rate = fine_rate;
    }
    return out;
}

} // namespace slspec
