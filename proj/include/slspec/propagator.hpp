#ifndef SLSPEC_PROPAGATOR_HPP
#define SLSPEC_PROPAGATOR_HPP

#include <vector>

#include "slspec/gridfun.hpp"

namespace slspec {

// sigma_form propagates (f, f^[1]) with generator [[s,1],[-l^2-s^2,-s]];
// tau_form propagates (u, u' - tau u) with generator [[t,1],[-l^2,-t]].
// Both generators are trace-free, so the Cauchy matrix is unimodular.
enum class SystemForm { sigma_form, tau_form };

enum class BoundaryCondition { dirichlet, neumann };

enum class ProfileInit { s_type, c_type };

struct Mat2 {
    cplx a11{}, a12{}, a21{}, a22{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    cplx trace() const { return a11 + a22; }
    cplx det() const { return a11 * a22 - a12 * a21; }
    double max_abs() const;

    friend Mat2 operator*(const Mat2& A, const Mat2& B)
    {
        return {A.a11 * B.a11 + A.a12 * B.a21, A.a11 * B.a12 + A.a12 * B.a22,
                A.a21 * B.a11 + A.a22 * B.a21, A.a21 * B.a12 + A.a22 * B.a22};
    }
    friend Mat2 operator+(const Mat2& A, const Mat2& B)
    {
        return {A.a11 + B.a11, A.a12 + B.a12, A.a21 + B.a21, A.a22 + B.a22};
    }
    friend Mat2 operator-(const Mat2& A, const Mat2& B)
    {
        return {A.a11 - B.a11, A.a12 - B.a12, A.a21 - B.a21, A.a22 - B.a22};
    }
    friend Mat2 operator*(cplx c, const Mat2& A)
    {
        return {c * A.a11, c * A.a12, c * A.a21, c * A.a22};
    }
};

struct CauchyMatrix {
    Mat2 U = Mat2::identity();
    double x = 0.0;
    cplx lambda{};
};

// exp(h*B) for trace-free B via cosh(w h) I + sinh(w h)/w B, w^2 = -det B,
// with the Taylor branch engaged for small |w h|; exact for constant B
Mat2 step_exponential(const Mat2& B, double h);

// Cell data the propagator actually consumes: per-cell averages of the
// coefficient and of its square, plus the centered first moments and the
// antisymmetric cross moment that assemble the first-commutator correction
// of the in-cell exponential.  Built from sub-cell samples when the grid
// function carries them; every moment vanishes on piecewise-constant cells,
// so aligned step potentials are propagated exactly.
struct PreparedCoeff {
    int cells = 0;
    std::vector<cplx> avg;    // cell average of f
    std::vector<cplx> avg_sq; // cell average of f^2
    std::vector<cplx> m1;     // int (t - c) f dt over the cell
    std::vector<cplx> m1_sq;  // int (t - c) f^2 dt
    std::vector<cplx> cross;  // (int f Q_{f^2} - int f^2 Q_f)/2, Q from the cell start
    double max_abs = 0.0;
};

PreparedCoeff prepare_coefficient(const GridFunction& coeff);

// effective generator B with exp(h B) the cell transfer map
Mat2 cell_generator(const PreparedCoeff& pc, int k, cplx lambda, SystemForm form);

CauchyMatrix propagate(const PreparedCoeff& pc, cplx lambda, SystemForm form);
CauchyMatrix propagate(const GridFunction& coeff, cplx lambda, SystemForm form);

// characteristic functions: U12 (Dirichlet) or U11 (Neumann-Dirichlet) at x=1
cplx char_value(const PreparedCoeff& pc, cplx lambda, SystemForm form, BoundaryCondition bc);
cplx char_value(const GridFunction& coeff, cplx lambda, SystemForm form, BoundaryCondition bc);

// central difference in lambda, step 1e-6 * max(1,|lambda|)
cplx char_derivative(const PreparedCoeff& pc, cplx lambda, SystemForm form, BoundaryCondition bc);
cplx char_derivative(const GridFunction& coeff, cplx lambda, SystemForm form, BoundaryCondition bc);

// first component u1(x) along the grid; init picks (0,1) or (1,0) at x=0.
// A positive fine_rate also fills sub-cell samples of u1 (evaluated from the
// in-cell exponentials, so they are consistent with the stepping scheme).
GridFunction solution_profile(const GridFunction& coeff, cplx lambda, SystemForm form,
                              ProfileInit init, int fine_rate = 0);

// both components at every node (and optionally inside cells); the
// factorization module builds phi = u2/u1 from this
struct PropagationTrace {
    std::vector<cplx> u1, u2;           // nodes 0..M
    std::vector<cplx> u1_fine, u2_fine; // optional, M*fine_rate+1
    int fine_rate = 0;
};

PropagationTrace propagate_trace(const PreparedCoeff& pc, cplx lambda, SystemForm form,
                                 cplx init1, cplx init2, int fine_rate = 0);

} // namespace slspec

#endif
