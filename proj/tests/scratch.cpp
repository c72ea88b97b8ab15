// Development scratch driver: prints reference values for cross-checking.
#include <cstdio>
#include <cmath>

#include "ineqlab/deficit.hpp"
#include "ineqlab/quadrature.hpp"
#include "ineqlab/specfun.hpp"

using namespace ineqlab;

int main() {
    // Quadrature sanity.
    {
        const auto& gl = quad::gauss_legendre(16);
        double s = 0;
        for (int i = 0; i < 16; ++i) s += gl.w[i] * gl.x[i] * gl.x[i];
        std::printf("GL16 int x^2 on [-1,1]   = %.17g (expect %.17g)\n", s, 2.0 / 3.0);
        const auto& gh = quad::gauss_hermite(32);
        double sw = 0, sx2 = 0;
        for (int i = 0; i < 32; ++i) { sw += gh.w[i]; sx2 += gh.w[i] * gh.x[i] * gh.x[i]; }
        std::printf("GH32 sum w               = %.17g (expect sqrt(pi)=%.17g)\n", sw, std::sqrt(M_PI));
        std::printf("GH32 int x^2 e^-x^2      = %.17g (expect %.17g)\n", sx2, 0.5 * std::sqrt(M_PI));
        double jb = quad::jacobi_panel(24, 1.5, -0.5, 0.0, 1.0, [](double v) { return v; });
        // int_0^1 (1-v)^1.5 v^-0.5 * v dv = B(1.5, 2.5) = G(1.5)G(2.5)/G(4)
        double expect = std::tgamma(1.5) * std::tgamma(2.5) / std::tgamma(4.0);
        std::printf("Jacobi panel beta(2.5,1.5)? %.17g (expect %.17g)\n", jb, expect);
    }
    // specfun sanity.
    {
        std::printf("K(0.5,1)  = %.17g (expect %.17g)\n", specfun::bessel_k(0.5, 1.0),
                    std::sqrt(M_PI / 2.0) * std::exp(-1.0));
        std::printf("K(0,1)    = %.17g (scipy 0.42102443824070834)\n", specfun::bessel_k(0.0, 1.0));
        std::printf("K(1,1)    = %.17g (scipy 0.6019072301972346)\n", specfun::bessel_k(1.0, 1.0));
        std::printf("K(0.7,2) vs K(-0.7,2): %.17g %.17g\n", specfun::bessel_k(0.7, 2.0),
                    specfun::bessel_k(-0.7, 2.0));
        std::printf("K(0.8,1e-4)*x^0.8 = %.17g (expect %.17g)\n",
                    specfun::bessel_k(0.8, 1e-4) * std::pow(1e-4, 0.8),
                    std::pow(2.0, -0.2) * std::tgamma(0.8));
        std::printf("moment(1,0) = %.17g (expect 1)\n", specfun::bessel_moment(1.0, 0.0));
        std::printf("moment(nu+2,nu) nu=-1 = %.17g (expect pi/2=%.17g)\n",
                    specfun::bessel_moment(1.0, -1.0), M_PI / 2.0);
    }
    // phi and inrd.
    {
        std::printf("phi(0)  = %.17g\n", deficit::phi(0.0));
        std::printf("phi(1)  quad = %.17g  erfc = %.17g\n", deficit::phi(1.0),
                    deficit::phi_erfc_form(1.0));
        std::printf("phi(0.05) quad = %.17g  erfc = %.17g\n", deficit::phi(0.05),
                    deficit::phi_erfc_form(0.05));
        for (double v : {0.1, 0.5, 1.0, 2.0, 10.0}) {
            auto s = deficit::inrd_identity(v);
            std::printf("inrd v=%-4g lhs=%.15g rhs=%.15g erfc=%.15g relgap=%.3g\n", v, s.lhs,
                        s.rhs, s.erfc_form,
                        std::abs(s.lhs - s.rhs) / std::max(s.lhs, s.rhs));
        }
    }
    // F and friends.
    {
        auto par = deficit::BecknerParams::make(1.5);
        std::printf("C_p(1.5) = %.17g (expect 4/(3pi)=%.17g)\n", par.c_p, 4.0 / (3.0 * M_PI));
        std::printf("cpd_normalization(1.5) = %.17g\n", deficit::cpd_normalization(par));
        std::printf("F(1.5; s=1,x=1) = %.17g\n", deficit::big_f(par, 1.0, 1.0));
        std::printf("F(1.5; s=1,x=1) fine = %.17g\n", [&] {
            deficit::QuadratureSpec fine;
            fine.kink_nodes = 96; fine.panel_nodes = 48; fine.panel_ln_width = 0.3;
            return deficit::big_f(par, 1.0, 1.0, fine);
        }());
        std::printf("U_alt(1.5; z=1) = %.17g\n", deficit::u_alt(par, 1.0));
        auto par16 = deficit::BecknerParams::make(1.6);
        double lhsc = deficit::big_f(par16, 2.0, 0.5);
        double rhsc = std::pow(0.5, 1.6) * deficit::big_f(par16, std::pow(0.5, 2.0 - 3.2) * 2.0, 1.0);
        std::printf("scaling : F(1.6;2,0.5)=%.15g  x^p U=%.15g rel=%.3g\n", lhsc, rhsc,
                    std::abs(lhsc / rhsc - 1.0));
        std::printf("laplace gap (1.5,1)= %.3g  (1.7,0.5)= %.3g  (1.4,5)= %.3g\n",
                    deficit::laplace_gap_u(par, 1.0),
                    deficit::laplace_gap_u(deficit::BecknerParams::make(1.7), 0.5),
                    deficit::laplace_gap_u(deficit::BecknerParams::make(1.4), 5.0));
        std::printf("pde_f(1.5;1,1,h=1e-3) = %.3g ; h=5e-4: %.3g\n",
                    deficit::pde_residual_f(par, 1.0, 1.0, 1e-3),
                    deficit::pde_residual_f(par, 1.0, 1.0, 5e-4));
        std::printf("asym const p=1.5 = %.17g (expect %.17g)\n",
                    deficit::f_asymptotic_constant(1.5),
                    std::pow(2.0, 1.5) * 4.0 / (3.0 * std::sqrt(M_PI)));
        std::printf("ratio s=1e4: %.15g  s=1e6: %.15g  (x=1)\n",
                    deficit::f_asymptotic_ratio(par, 1e4, 1.0),
                    deficit::f_asymptotic_ratio(par, 1e6, 1.0));
        std::printf("ratio s=1e6 x=0: %.15g  x=2: %.15g\n",
                    deficit::f_asymptotic_ratio(par, 1e6, 0.0),
                    deficit::f_asymptotic_ratio(par, 1e6, 2.0));
    }
    // J and friends.
    {
        auto par = deficit::HoelderParams::make(1.0, 2.0);
        std::printf("cpnubdd(1,2) = %.17g\n", deficit::cpnubdd_normalization(par));
        std::printf("J(1,2;1,1) = %.17g\n", deficit::j_fun(par, 1.0, 1.0));
        std::printf("V_alt(1,2;1) = %.17g\n", deficit::v_alt(par, 1.0));
        std::printf("V_alt(1,2;0.5) = %.17g  J(0.5,1)=%.17g\n", deficit::v_alt(par, 0.5),
                    deficit::j_fun(par, 0.5, 1.0));
        double lhsc = deficit::j_fun(par, 3.0, 0.7);
        double rhsc = std::pow(0.7, 1.0) * deficit::j_fun(par, 3.0 / std::pow(0.7, 2.0), 1.0);
        std::printf("scaling J: %.15g vs %.15g rel=%.3g\n", lhsc, rhsc, std::abs(lhsc / rhsc - 1));
        std::printf("jub(1,2;1) = %.17g (expect sqrt(2pi)=%.17g)\n", deficit::j_upper_bound(par, 1.0),
                    std::sqrt(2.0 * M_PI));
        std::printf("pde_j(1,2;1,1,1e-3) = %.3g\n", deficit::pde_residual_j(par, 1.0, 1.0, 1e-3));
        std::printf("hoelder C(1,2)=%.17g (expect %.17g)\n", deficit::hoelder_constant(1.0, 2.0),
                    std::sqrt(M_PI / 2.0));
        std::printf("C(1,1+1e-6)=%.15g C(1,1e6)=%.15g\n", deficit::hoelder_constant(1.0, 1.0 + 1e-6),
                    deficit::hoelder_constant(1.0, 1e6));
        std::printf("V(z)<=z: z=0.5: %.15g z=5: %.15g z=50: %.15g\n", deficit::v_alt(par, 0.5),
                    deficit::v_alt(par, 5.0), deficit::v_alt(par, 50.0));
    }
    // Heat kernel / ODE residuals.
    {
        std::printf("heat pde residual (nu=-1,l=1,s=1,y=1,h=1e-3) = %.3g\n",
                    deficit::heat_kernel_pde_residual(-1.0, 1.0, 1.0, 1.0, 1e-3));
        std::printf("ode residual (nu=-0.8, z=2, h=1e-3) = %.3g\n",
                    deficit::bessel_ode_residual(-0.8, 2.0, 1e-3));
        std::printf("deriv identity gap (mu=-1, z=1.5, h=1e-3) = %.3g\n",
                    deficit::bessel_k_derivative_identity_gap(-1.0, 1.5, 1e-3));
    }
    return 0;
}
