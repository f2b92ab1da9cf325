#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pdm/state.hpp"

namespace pdm::massgen {

// Ordering parameters of the symmetrized kinetic operator
//   -(1/2) [M^a d_i M^b d_i M^c + M^c d_i M^b d_i M^a],
// constrained to a + b + c = -1.
struct AmbiguityParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = -1.0;
    void validate() const;
};

// Effective potential absorbing the ordering terms once the kinetic operator
// is rewritten in the fixed form -d_i (1/M) d_i:
//   V + (1/2)(beta+1) Lap(M)/M^2 - [alpha(alpha+beta+1)+beta+1] |grad M|^2/M^3.
double effective_potential(const std::function<Jet2(double, double)>& M,
                           const std::function<double(double, double)>& V,
                           const AmbiguityParams& ap, double x, double y);

// The three solution families of the first-order intertwining constraint for
// a mass depending on x alone, labeled by the sign of the separation constant
// C relating the transverse profile f''/f to the mass profile.
enum class MassClass {
    hyperbolic,     // C = -q^2: 1/sqrt(M) built from sinh/cosh
    rational,       // C = 0:    1/sqrt(M) linear in x
    trigonometric,  // C = +q^2: 1/sqrt(M) built from sin/cos
};

struct ClassConstants {
    double a = 0, b = 0, c = 0, d = 0, g = 0;
};

struct MassClassSolution {
    MassClass cls = MassClass::hyperbolic;
    ClassConstants cst;
    double q = 1.0;  // ignored by the rational class
    double x_lo = 0.0, x_hi = 0.0;

    double C() const;

    // mu(x) = 1/sqrt(M), the class denominator; mass(x) = 1/mu^2.
    Jet1 inv_sqrt_mass(double x) const;
    Jet1 mass(double x) const;
    Jet2 A1(double x, double y) const;
    Jet2 A2(double x, double y) const;
};

// Builds the closed-form solution and checks that the mass stays finite and
// positive on [x_lo, x_hi] (the denominator may not vanish there); throws
// std::domain_error naming the offending point otherwise.
MassClassSolution mass_class_solution(MassClass cls, const ClassConstants& cst, double q,
                                      double x_lo, double x_hi);

// Pointwise residuals of the defining constraints: the three first-order
// gradient rows, harmonicity of both vector components, and the separation
// relation tying f''/f and the mass profile to C.
struct ConstraintReport {
    double gradient = 0.0;
    double laplacian = 0.0;
    double separation = 0.0;
    double max_residual = 0.0;
};

ConstraintReport constraint_residuals(const MassClassSolution& sol,
                                      const std::vector<std::pair<double, double>>& pts);

// Canonical hyperbolic branch: mass sech^2(qx) with the intertwiner scalar
// part B = (q sinh qx + F csch qx) sin qy + G; the paired potentials exist in
// closed form only for G = 0 (the separable route).
struct HyperbolicFamily {
    double q = 1.0, F = 0.0, G = 0.0, J = 0.0, K = 0.0;

    Jet1 mass(double x) const;
    Jet2 A1(double x, double y) const;
    Jet2 A2(double x, double y) const;
    Jet2 B(double x, double y) const;

    bool has_potentials() const { return G == 0.0; }
    Jet2 Veff(double x, double y) const;   // throws std::logic_error if G != 0
    Jet2 V1eff(double x, double y) const;  // same restriction
};

HyperbolicFamily hyperbolic_family(double q, double F, double G, double J, double K);

// Residuals of the full constraint set for the hyperbolic branch.  For G != 0
// the potentials of the separable route are used, so the scalar constraint and
// the separability equation pick up the genuine obstruction terms.
struct FamilyResiduals {
    double gradient_x = 0.0;     // vector constraint, x row
    double gradient_y = 0.0;     // vector constraint, y row
    double scalar = 0.0;         // scalar constraint coupling B and the potentials
    double difference_x = 0.0;   // potential difference expressed through dB/dx
    double difference_y = 0.0;   // potential difference expressed through dB/dy
    double separability = 0.0;   // first-order equation for V_eff along the flow
    double max_residual = 0.0;
};

FamilyResiduals family_residuals(const HyperbolicFamily& fam,
                                 const std::vector<std::pair<double, double>>& pts);

// One-dimensional reduction: A = 1/sqrt(M), V_eff = -(AB)' + B^2 + lambda.
// Here the invariant collapses to R = H - lambda, so nothing beyond the
// Hamiltonian is conserved; two dimensions are the minimal nontrivial case.
struct OneDimSolution {
    Fun1 A;
    Fun1 B;
    double lambda = 0.0;

    Jet1 Veff(double x) const;
    Jet1 V1eff(double x) const;

    // sup over pts of the normalized residual of (R - H + lambda) probe.
    double susy_residual(const Fun1& probe, const std::vector<double>& pts) const;
};

OneDimSolution one_dim_susy(Fun1 B, double lambda, Fun1 M);

// Deterministic uniform sample cloud for residual scans.
std::vector<std::pair<double, double>> sample_points_box(double x_lo, double x_hi, double y_lo,
                                                         double y_hi, int n, unsigned seed);

const char* mass_class_name(MassClass cls);

}  // namespace pdm::massgen
