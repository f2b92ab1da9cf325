#pragma once

#include <string>

#include "pdm/state.hpp"

namespace pdm::model {

// Model parameters: length scale q, deformation strength k, energy offset v0.
// The mass profile is 1/cosh^2(qx) on the strip 0 < x, |y| < pi/(2q).
struct Params {
    double q = 1.0;
    double k = 1.0;
    double v0 = 0.0;
    void validate() const;
    double y_half_width() const;  // pi / (2q)
};

bool in_domain(const Params& p, double x, double y, double tol = 1e-12);

// Spectrum: E_N = q^2 [(N+2)(N+2k+1) + v0], level degeneracy floor(N/2)+1.
double energy_level(const Params& p, int N);
int degeneracy(int N);
double energy(const Params& p, int n, int l);  // at N = 2n + l

// Separable-basis factors and states (normalized).
SepSum chi(const Params& p, int l);          // transverse factor, unit x part
SepSum phi(const Params& p, int n, int l);   // longitudinal factor, unit y part
SepSum psi(const Params& p, int n, int l);   // product state

// Elementary zero-mode shape tanh^k(qx) sech^{s+1}(qx) cos^s(qy), weight 1.
SepSum zero_mode(const Params& p, double s);

// Second-basis state (N, N0): simultaneous eigenstate of the Hamiltonian and
// of the conserved quadratic operator, expanded over psi via the transform
// row; normalized.
SepSum susy_state(const Params& p, int N, int N0);

// Un-normalized zero-mode combination for even N0 (independent construction
// of the (N0, N0) state; proportional to susy_state(p, N0, N0)).
SepSum susy_ground_raw(const Params& p, int N0);

// Change of variable z = 2 atan(e^{qx}) - pi/2 mapping the longitudinal
// problem onto a trigonometric Poeschl-Teller well on (0, pi/2).
double pt_z(const Params& p, double x);
struct PtMap {
    double kappa;      // singular-wall strength parameter
    double lambda;     // l + 3/2
    double pt_energy;  // (kappa + lambda + 2n)^2, dimensionless
};
PtMap pt_map(const Params& p, int n, int l);
// Inverse of the spectral map: model energy from a dimensionless PT eigenvalue.
double energy_from_pt(const Params& p, double pt_eig);

// Point evaluation with derivatives; the closure of the domain is accepted and
// boundary points return the (vanishing) limit values.
struct Eval1 {
    double v = 0, d1 = 0, d2 = 0;
};
struct Eval2 {
    double v = 0, dx = 0, dy = 0, dxx = 0, dxy = 0, dyy = 0;
};
Eval1 eval_chi(const Params& p, int l, double y);
Eval1 eval_phi(const Params& p, int n, int l, double x);
Eval2 eval_psi(const Params& p, int n, int l, double x, double y);
Eval2 eval_zero_mode(const Params& p, double s, double x, double y);
Eval2 eval_susy(const Params& p, int N, int N0, double x, double y);

}  // namespace pdm::model
