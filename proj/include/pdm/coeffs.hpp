#pragma once

#include <utility>
#include <vector>

namespace pdm::coeffs {

// Number of admissible +-1 lattice paths of length nu starting at level l >= 0
// with mu down-steps, where the running level must never reach -1.
double x_factor(int l, int nu, int mu);

// Closed forms for the two regimes with simple answers; used as cross-checks.
double x_factor_unrestricted(int nu, int mu);  // binomial(nu, mu), valid l >= nu
double x_factor_floor(int nu, int mu);         // ballot count, l = 0

// Mixing coefficients a_s (s odd, s = 1..N0+1) that combine the elementary
// zero modes into the lowest second-basis state at even level N0; normalized
// so the top coefficient a_{N0+1} = 1.  Entry [i] corresponds to s = 2i+1.
std::vector<double> a_coeffs(double k, int N0);

// Expansion coefficients of the normalized lowest second-basis state at level
// N0 over the separable states psi_{n, N0-2n}; all positive.
double X_coeff(double k, int N0, int n);

// Normalization sum for the zero-mode combination, by direct summation.
double S_sum(double k, int N0);
// Equivalent closed form (test reference).
double S_sum_closed(double k, int N0);

// Coefficient of psi_{n+mu, l+nu-2mu} in the nu-fold raising chain applied to
// psi_{n,l} at shifted deformation parameter; includes the sign convention
// with N = 2n + l of the source state.
double Y_coeff(double q, double k, int n, int l, int nu, int mu);

// Normalization constant of the raising chain, nu = N - N0.
double Nbar(double q, double k, int N, int N0);

// Row of the basis-transform matrix: coefficients of psi_{n, N-2n},
// n = 0..floor(N/2), in the second-basis state (N, N0).  Independent of q.
std::vector<double> Z_row(double k, int N, int N0);

// Closed form of the N0 = 0 row (raising chain applied to the global ground
// state); test reference for the general route.
std::vector<double> Z_row_ground(double k, int N);

// Full transform matrix at fixed level N: one row per even N0 <= N.
struct TransformMatrix {
    double k = 1.0;
    int N = 0;
    std::vector<int> row_N0;                // even N0, ascending
    std::vector<std::vector<double>> rows;  // rows[r][n]
    double orthogonality_residual() const;  // max |Z Z^T - I|

    static TransformMatrix build(double k, int N);
};

enum class Ladder { lower, raise };

// Signed coefficient pair for the first-order intertwiner acting on a
// separable state.
//   lower: eta at deformation k on psi_{n,l}^(k); returns the coefficients of
//          psi_{n-1,l+1}^(k+1) and psi_{n,l-1}^(k+1).
//   raise: eta^dagger at deformation k on psi_{n,l}^(k+1); returns the
//          coefficients of psi_{n+1,l-1}^(k) and psi_{n,l+1}^(k).
std::pair<double, double> ladder_coeffs(double q, double k, int n, int l, Ladder dir);

}  // namespace pdm::coeffs
