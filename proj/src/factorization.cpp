#include "slspec/factorization.hpp"

#include <cmath>
#include <functional>

namespace slspec {

namespace {

double min_abs_everywhere(const GridFunction& f)
{
    double m = std::abs(f.values[0]);
    for (const auto& v : f.values) m = std::min(m, std::abs(v));
    for (const auto& v : f.fine) m = std::min(m, std::abs(v));
    return m;
}

// prefix integrals of `fn` evaluated on the fine samples (per-cell Simpson),
// reported at the coarse nodes; falls back to the coarse grid when no fine
// data is present
std::vector<cplx> running_integral(const GridFunction& f,
                                   const std::function<cplx(cplx)>& fn)
{
    const int M = f.cells;
    std::vector<cplx> out((size_t)M + 1, 0.0);
    if (f.fine_rate >= 2 && f.fine_rate % 2 == 0) {
        const int R = f.fine_rate;
        const double hs = 1.0 / (M * R);
        cplx acc = 0.0;
        for (int k = 0; k < M; ++k) {
            const cplx a0 = f.fine[(size_t)k * R]; // right limit at the left edge
            cplx aR = f.fine[(size_t)(k + 1) * R];
            for (const auto& b : f.breakpoints)
                if (b.node == k + 1) aR = b.left;
            cplx s = fn(a0) + fn(aR);
            for (int j = 1; j < R; ++j)
                s += ((j % 2 == 1) ? 4.0 : 2.0) * fn(f.fine[(size_t)k * R + (size_t)j]);
            acc += s * (hs / 3.0);
            out[(size_t)k + 1] = acc;
        }
        return out;
    }
    // coarse trapezoid fallback
    const double h = f.h();
    cplx acc = 0.0;
    for (int k = 0; k < M; ++k) {
        acc += 0.5 * h * (fn(f.value_right(k)) + fn(f.value_left(k + 1)));
        out[(size_t)k + 1] = acc;
    }
    return out;
}

// the sub-sampled representation as a standalone grid, so the neutral system
// can be integrated at the fine resolution
GridFunction lift_to_fine(const GridFunction& f)
{
    if (f.fine_rate < 2) return f;
    const int Mf = f.cells * f.fine_rate;
    std::vector<cplx> v = f.fine;
    std::vector<GridFunction::Breakpoint> bps;
    for (const auto& b : f.breakpoints) bps.push_back({b.node * f.fine_rate, b.left});
    return GridFunction(Mf, std::move(v), std::move(bps));
}

// both components of the neutral solution, sampled at the coarse nodes and at
// the fine sub-nodes
PropagationTrace neutral_trace(const GridFunction& sigma)
{
    const GridFunction work = lift_to_fine(sigma);
    const PreparedCoeff pc = prepare_coefficient(work);
    PropagationTrace fine = propagate_trace(pc, 0.0, SystemForm::sigma_form, 1.0, 0.0, 0);
    if (sigma.fine_rate < 2) return fine;

    const int R = sigma.fine_rate, M = sigma.cells;
    PropagationTrace tr;
    tr.fine_rate = R;
    tr.u1_fine = std::move(fine.u1);
    tr.u2_fine = std::move(fine.u2);
    tr.u1.resize((size_t)M + 1);
    tr.u2.resize((size_t)M + 1);
    for (int k = 0; k <= M; ++k) {
        tr.u1[(size_t)k] = tr.u1_fine[(size_t)k * R];
        tr.u2[(size_t)k] = tr.u2_fine[(size_t)k * R];
    }
    return tr;
}

} // namespace

GridFunction solve_neutral(const GridFunction& sigma)
{
    PropagationTrace tr = neutral_trace(sigma);
    GridFunction u(sigma.cells, std::move(tr.u1));
    if (tr.fine_rate > 0) {
        u.fine = std::move(tr.u1_fine);
        u.fine_rate = tr.fine_rate;
    }
    return u;
}

std::pair<double, GridFunction> accretive_shift(const GridFunction& sigma)
{
    double C = 0.0;
    while (true) {
        GridFunction shifted = C == 0.0 ? sigma : add_linear(sigma, C);
        const GridFunction u = solve_neutral(shifted);
        if (min_abs_everywhere(u) >= neutral_min_abs)
            return {C, std::move(shifted)};
        if (C == 0.0)
            C = 1.0;
        else if (C >= 65536.0)
            throw NumericalError("accretive_shift: no shift up to 2^16 keeps the neutral "
                                 "solution away from zero");
        else
            C *= 2.0;
    }
}

FactorizationResult factorize(const GridFunction& sigma)
{
    FactorizationResult res;
    auto [C, sigma_hat] = accretive_shift(sigma);
    res.shift_C = C;
    res.shifted_sigma = std::move(sigma_hat);

    PropagationTrace tr = neutral_trace(res.shifted_sigma);
    const int R = tr.fine_rate;
    const int M = res.shifted_sigma.cells;
    res.u = GridFunction(M, tr.u1);
    if (R > 0) {
        res.u.fine = tr.u1_fine;
        res.u.fine_rate = R;
    }
    if (min_abs_everywhere(res.u) < neutral_min_abs)
        throw NumericalError("factorize: neutral solution too close to zero after shift");

    // phi = u^[1] / u, continuous, phi(0) = 0
    std::vector<cplx> phi_nodes((size_t)M + 1);
    for (int k = 0; k <= M; ++k) phi_nodes[(size_t)k] = tr.u2[(size_t)k] / tr.u1[(size_t)k];
    res.phi = GridFunction(M, std::move(phi_nodes));
    if (R > 0) {
        res.phi.fine.resize(tr.u1_fine.size());
        for (size_t j = 0; j < tr.u1_fine.size(); ++j)
            res.phi.fine[j] = tr.u2_fine[j] / tr.u1_fine[j];
        res.phi.fine_rate = R;
    }

    res.tau = add(res.phi, res.shifted_sigma);

    // tilde_phi = phi + int_0^x sigma_hat^2
    const std::vector<cplx> S2 =
        running_integral(res.shifted_sigma, [](cplx v) { return v * v; });
    {
        std::vector<cplx> tp((size_t)M + 1);
        for (int k = 0; k <= M; ++k) tp[(size_t)k] = res.phi.values[(size_t)k] + S2[(size_t)k];
        res.tilde_phi = GridFunction(M, std::move(tp));
    }

    // integral Riccati identity: phi + int_0^x (phi + sigma_hat)^2 = 0
    const std::vector<cplx> T2 = running_integral(res.tau, [](cplx v) { return v * v; });
    double worst = 0.0;
    for (int k = 0; k <= M; ++k)
        worst = std::max(worst, std::abs(res.phi.values[(size_t)k] + T2[(size_t)k]));
    res.riccati_residual = worst;
    if (worst > riccati_tolerance)
        throw NumericalError("factorize: Riccati residual " + std::to_string(worst) +
                             " exceeds tolerance " + std::to_string(riccati_tolerance) +
                             " (shift C=" + std::to_string(C) +
                             ", M=" + std::to_string(M) + ")");
    return res;
}

} // namespace slspec
