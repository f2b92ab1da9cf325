#include "pdm/massgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace pdm::massgen {

void AmbiguityParams::validate() const {
    if (std::abs(alpha + beta + gamma + 1.0) > 1e-12)
        throw std::invalid_argument("AmbiguityParams: alpha + beta + gamma must equal -1");
}

double effective_potential(const std::function<Jet2(double, double)>& M,
                           const std::function<double(double, double)>& V,
                           const AmbiguityParams& ap, double x, double y) {
    ap.validate();
    const Jet2 m = M(x, y);
    const double m0 = m.value();
    if (!(m0 > 0.0)) throw std::domain_error("effective_potential: mass must be positive");
    const double lap = m.dxx() + m.dyy();
    const double grad2 = m.dx() * m.dx() + m.dy() * m.dy();
    const double ca = 0.5 * (ap.beta + 1.0);
    const double cb = ap.alpha * (ap.alpha + ap.beta + 1.0) + ap.beta + 1.0;
    return V(x, y) + ca * lap / (m0 * m0) - cb * grad2 / (m0 * m0 * m0);
}

const char* mass_class_name(MassClass cls) {
    switch (cls) {
        case MassClass::hyperbolic: return "hyperbolic";
        case MassClass::rational: return "rational";
        case MassClass::trigonometric: return "trigonometric";
    }
    return "unknown";
}

double MassClassSolution::C() const {
    switch (cls) {
        case MassClass::hyperbolic: return -q * q;
        case MassClass::rational: return 0.0;
        case MassClass::trigonometric: return q * q;
    }
    return 0.0;
}

Jet1 MassClassSolution::inv_sqrt_mass(double x) const {
    const Jet1 u = q * jet_var(x);
    switch (cls) {
        case MassClass::hyperbolic: return cst.c * jet_sinh(u) + cst.d * jet_cosh(u);
        case MassClass::rational: return cst.c * jet_var(x) + jet_const(cst.d);
        case MassClass::trigonometric: return cst.c * jet_sin(u) + cst.d * jet_cos(u);
    }
    return jet_const(0.0);
}

Jet1 MassClassSolution::mass(double x) const {
    const Jet1 mu = inv_sqrt_mass(x);
    return jet_inv(mu * mu);
}

Jet2 MassClassSolution::A1(double x, double y) const {
    const Jet1 mu = inv_sqrt_mass(x);
    const Jet1 v = q * jet_var(y);
    Jet1 f;
    switch (cls) {
        case MassClass::hyperbolic: f = cst.a * jet_sin(v) + cst.b * jet_cos(v); break;
        case MassClass::rational: f = cst.a * jet_var(y) + jet_const(cst.b); break;
        case MassClass::trigonometric: f = cst.a * jet_sinh(v) + cst.b * jet_cosh(v); break;
    }
    return jet_outer(mu, f);
}

Jet2 MassClassSolution::A2(double x, double y) const {
    const Jet1 u = q * jet_var(x);
    const Jet1 v = q * jet_var(y);
    switch (cls) {
        case MassClass::hyperbolic: {
            const Jet1 xf = cst.c * jet_cosh(u) + cst.d * jet_sinh(u);
            const Jet1 yf = (-cst.a) * jet_cos(v) + cst.b * jet_sin(v);
            return jet_outer(xf, yf) + cst.g * jet_outer(jet_const(1.0), jet_const(1.0));
        }
        case MassClass::rational: {
            const Jet1 xj = jet_var(x);
            const Jet1 yj = jet_var(y);
            const Jet1 xpart =
                (-0.5 * cst.a * cst.c) * (xj * xj) + (-cst.a * cst.d) * xj + jet_const(cst.g);
            const Jet1 ypart = (0.5 * cst.a * cst.c) * (yj * yj) + (cst.b * cst.c) * yj;
            return jet_outer(xpart, jet_const(1.0)) + jet_outer(jet_const(1.0), ypart);
        }
        case MassClass::trigonometric: {
            const Jet1 xf = cst.c * jet_cos(u) + (-cst.d) * jet_sin(u);
            const Jet1 yf = cst.a * jet_cosh(v) + cst.b * jet_sinh(v);
            return jet_outer(xf, yf) + cst.g * jet_outer(jet_const(1.0), jet_const(1.0));
        }
    }
    return Jet2{};
}

MassClassSolution mass_class_solution(MassClass cls, const ClassConstants& cst, double q,
                                      double x_lo, double x_hi) {
    if (cls != MassClass::rational && !(q > 0.0))
        throw std::invalid_argument("mass_class_solution: q must be positive");
    if (!(x_lo < x_hi)) throw std::invalid_argument("mass_class_solution: empty domain");
    MassClassSolution sol;
    sol.cls = cls;
    sol.cst = cst;
    sol.q = (cls == MassClass::rational) ? 1.0 : q;
    sol.x_lo = x_lo;
    sol.x_hi = x_hi;

    // The mass 1/mu^2 stays positive iff the denominator mu never crosses
    // zero on the declared interval; scan densely for a vanishing value or a
    // sign change.
    const int scan = 2000;
    double prev = sol.inv_sqrt_mass(x_lo).value();
    double scale = std::abs(prev);
    for (int i = 1; i <= scan; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / scan;
        const double cur = sol.inv_sqrt_mass(x).value();
        scale = std::max(scale, std::abs(cur));
        if (cur == 0.0 || prev * cur < 0.0 || std::abs(cur) < 1e-12 * std::max(scale, 1.0)) {
            throw std::domain_error("mass_class_solution: mass degenerates near x = " +
                                    std::to_string(x));
        }
        prev = cur;
    }
    return sol;
}

ConstraintReport constraint_residuals(const MassClassSolution& sol,
                                      const std::vector<std::pair<double, double>>& pts) {
    ConstraintReport rep;
    const double C = sol.C();
    for (const auto& [x, y] : pts) {
        const Jet2 a1 = sol.A1(x, y);
        const Jet2 a2 = sol.A2(x, y);
        const Jet1 m = sol.mass(x);
        const double mv = m.value(), mx = m.d1();

        // Gradient rows: d_x A1 = -(A1 M' )/(2M) for an x-only mass, and the
        // curl-free / trace pair d_y A1 = -d_x A2, d_x A1 = d_y A2.
        const double r1 = a1.dx() + 0.5 * a1.value() * mx / mv;
        const double r2 = a1.dy() + a2.dx();
        const double r3 = a1.dx() - a2.dy();
        rep.gradient = std::max({rep.gradient, std::abs(r1), std::abs(r2), std::abs(r3)});

        const double l1 = a1.dxx() + a1.dyy();
        const double l2 = a2.dxx() + a2.dyy();
        rep.laplacian = std::max({rep.laplacian, std::abs(l1), std::abs(l2)});

        // Separation constant: f''/f = C in y and mu'' = -C mu in x, read off
        // the factorized component A1 = mu(x) f(y).
        const double s1 = a1.dyy() - C * a1.value();
        const double s2 = a1.dxx() + C * a1.value();
        rep.separation = std::max({rep.separation, std::abs(s1), std::abs(s2)});
    }
    rep.max_residual = std::max({rep.gradient, rep.laplacian, rep.separation});
    return rep;
}

HyperbolicFamily hyperbolic_family(double q, double F, double G, double J, double K) {
    if (!(q > 0.0)) throw std::invalid_argument("hyperbolic_family: q must be positive");
    HyperbolicFamily fam;
    fam.q = q;
    fam.F = F;
    fam.G = G;
    fam.J = J;
    fam.K = K;
    return fam;
}

Jet1 HyperbolicFamily::mass(double x) const {
    const Jet1 s = jet_sech(q * jet_var(x));
    return s * s;
}

Jet2 HyperbolicFamily::A1(double x, double y) const {
    return jet_outer(jet_cosh(q * jet_var(x)), jet_sin(q * jet_var(y)));
}

Jet2 HyperbolicFamily::A2(double x, double y) const {
    return -1.0 * jet_outer(jet_sinh(q * jet_var(x)), jet_cos(q * jet_var(y)));
}

Jet2 HyperbolicFamily::B(double x, double y) const {
    const Jet1 u = q * jet_var(x);
    const Jet1 xf = q * jet_sinh(u) + F * jet_csch(u);
    Jet2 out = jet_outer(xf, jet_sin(q * jet_var(y)));
    out.d[0] += G;
    return out;
}

namespace {

// Potentials of the separable route (the G = 0 solution), with the free log
// term J ln(cosh qx sec qy) and offset K.
Jet2 family_potential(double q, double F, double J, double K, double x, double y, bool partner) {
    const Jet1 u = q * jet_var(x);
    const Jet1 v = q * jet_var(y);
    const Jet1 ch = jet_cosh(u);
    const Jet1 cs = jet_csch(u);
    const double fcoef = partner ? F * (-q + F) : F * (q + F);
    const double cst = partner ? K - 2.0 * q * F : K;
    Jet1 xpart = (-q * q) * (ch * ch) + fcoef * (cs * cs) + cst;
    if (J != 0.0) xpart = xpart + J * jet_log(ch);
    Jet2 out = jet_outer(xpart, jet_const(1.0));
    if (J != 0.0) out = out + jet_outer(jet_const(1.0), (-J) * jet_log(jet_cos(v)));
    return out;
}

}  // namespace

Jet2 HyperbolicFamily::Veff(double x, double y) const {
    if (!has_potentials())
        throw std::logic_error("HyperbolicFamily: no closed-form potential when G != 0");
    return family_potential(q, F, J, K, x, y, false);
}

Jet2 HyperbolicFamily::V1eff(double x, double y) const {
    if (!has_potentials())
        throw std::logic_error("HyperbolicFamily: no closed-form potential when G != 0");
    return family_potential(q, F, J, K, x, y, true);
}

FamilyResiduals family_residuals(const HyperbolicFamily& fam,
                                 const std::vector<std::pair<double, double>>& pts) {
    FamilyResiduals rep;
    const double q = fam.q;
    for (const auto& [x, y] : pts) {
        const Jet2 a1 = fam.A1(x, y);
        const Jet2 a2 = fam.A2(x, y);
        const Jet2 b = fam.B(x, y);
        const Jet1 m = fam.mass(x);
        const double mv = m.value(), mx = m.d1(), mxx = m.d2();
        // The potentials of the separable route are used even when G != 0;
        // the obstruction then shows up as a nonzero scalar residual.
        const Jet2 V = family_potential(q, fam.F, fam.J, fam.K, x, y, false);
        const Jet2 V1 = family_potential(q, fam.F, fam.J, fam.K, x, y, true);
        const double dV = V.value() - V1.value();

        // Vector constraint rows (mass depends on x only).
        const double rx = a1.value() * dV -
                          (-a1.value() * (mxx / (mv * mv) - 2.0 * mx * mx / (mv * mv * mv)) -
                           (a1.dxx() + a1.dyy()) / mv + a1.dx() * mx / (mv * mv) -
                           2.0 * b.dx() / mv);
        const double ry = a2.value() * dV -
                          (-(a2.dxx() + a2.dyy()) / mv + a2.dx() * mx / (mv * mv) -
                           2.0 * b.dy() / mv);
        rep.gradient_x = std::max(rep.gradient_x, std::abs(rx));
        rep.gradient_y = std::max(rep.gradient_y, std::abs(ry));

        // Scalar constraint.
        const double rs = a1.value() * V.dx() + a2.value() * V.dy() + b.value() * dV +
                          (b.dxx() + b.dyy()) / mv - b.dx() * mx / (mv * mv);
        rep.scalar = std::max(rep.scalar, std::abs(rs));

        const double sh = std::sinh(q * x), ch = std::cosh(q * x);
        const double sy = std::sin(q * y), cy = std::cos(q * y);
        // Potential-difference forms; the first carries a removable csc(qy)
        // factor, so points too close to the strip axis are skipped for it.
        if (std::abs(sy) > 0.05) {
            const double dx_form = 2.0 * q * q * ch * ch - 2.0 * (ch / sy) * b.dx();
            rep.difference_x = std::max(rep.difference_x, std::abs(dV - dx_form));
        }
        if (std::abs(cy) > 0.05) {
            const double dy_form =
                -2.0 * q * q * ch * ch + 2.0 * (ch / sh) * ch * (1.0 / cy) * b.dy();
            rep.difference_y = std::max(rep.difference_y, std::abs(dV - dy_form));
        }

        // Separability route: first-order equation for V_eff along the flow;
        // a nonzero G leaves the csc(qy) obstruction term behind.
        if (std::abs(sy) > 0.05) {
            const double coth = ch / sh;
            const double csch = 1.0 / sh;
            const double lhs = coth * V.dx() - (cy / sy) * V.dy();
            const double rhs = -2.0 * q *
                               (q * q * ch * ch + fam.F * (q + fam.F) * csch * csch * coth * coth +
                                fam.F * fam.G * csch * coth * coth / sy);
            rep.separability = std::max(rep.separability, std::abs(lhs - rhs));
        }
    }
    rep.max_residual = std::max({rep.gradient_x, rep.gradient_y, rep.scalar, rep.difference_x,
                                 rep.difference_y, rep.separability});
    return rep;
}

OneDimSolution one_dim_susy(Fun1 B, double lambda, Fun1 M) {
    if (!B || !M) throw std::invalid_argument("one_dim_susy: missing evaluator");
    OneDimSolution sol;
    sol.B = std::move(B);
    sol.lambda = lambda;
    sol.A = [M = std::move(M)](double x) {
        const Jet1 m = M(x);
        if (!(m.value() > 0.0)) throw std::domain_error("one_dim_susy: mass must be positive");
        return jet_inv(jet_sqrt(m));
    };
    return sol;
}

Jet1 OneDimSolution::Veff(double x) const {
    const Jet1 a = A(x);
    const Jet1 b = B(x);
    return -1.0 * jet_shift1(a * b, 1) + b * b + lambda;
}

Jet1 OneDimSolution::V1eff(double x) const {
    const Jet1 a = A(x);
    const Jet1 b = B(x);
    return Veff(x) - a * (jet_shift1(a, 2) - 2.0 * jet_shift1(b, 1));
}

double OneDimSolution::susy_residual(const Fun1& probe, const std::vector<double>& pts) const {
    double worst = 0.0;
    for (double x : pts) {
        const Jet1 f = probe(x);
        const Jet1 a = A(x);
        const Jet1 b = B(x);
        // eta f = A f' + B f, then the adjoint -A d/dx - A' + B on the result.
        const Jet1 ef = a * jet_shift1(f, 1) + b * f;
        const double rf =
            (-1.0 * a * jet_shift1(ef, 1) - jet_shift1(a, 1) * ef + b * ef).value();
        // H f = -(A^2) f'' - (A^2)' f' + V_eff f.
        const Jet1 a2 = a * a;
        const double hf = (-1.0 * a2 * jet_shift1(f, 2) - jet_shift1(a2, 1) * jet_shift1(f, 1) +
                           Veff(x) * f)
                              .value();
        const double res = rf - (hf - lambda * f.value());
        const double scale = std::max({1.0, std::abs(rf), std::abs(hf)});
        worst = std::max(worst, std::abs(res) / scale);
    }
    return worst;
}

std::vector<std::pair<double, double>> sample_points_box(double x_lo, double x_hi, double y_lo,
                                                         double y_hi, int n, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> ux(x_lo, x_hi), uy(y_lo, y_hi);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = ux(gen);
        const double y = uy(gen);
        pts.emplace_back(x, y);
    }
    return pts;
}

}  // namespace pdm::massgen
