#include "pdm/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace pdm::special {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's table).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
    771.32342877765313,   -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double log_gamma_core(double x) {
    // valid for x >= 0.5
    const double t = x + kLanczosG - 0.5;
    double series = kLanczos[0];
    for (int i = 1; i < 9; ++i) series += kLanczos[i] / (x - 1.0 + i);
    constexpr double half_log_two_pi = 0.91893853320467274178;
    return half_log_two_pi + (x - 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    if (x < 0.5) return log_gamma_core(x + 1.0) - std::log(x);
    return log_gamma_core(x);
}

double gamma_ratio(double a, double b) { return std::exp(log_gamma(a) - log_gamma(b)); }

double factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    if (n > 170) throw std::domain_error("factorial: overflows double, use log_factorial");
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    return log_gamma(n + 1.0);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= 170) {
        double r = 1.0;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }
    return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

namespace {

// Plain P_n^(a,b)(z) by the ascending recurrence; no derivative.
double jacobi_value(int n, double a, double b, double z) {
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * z;
    for (int m = 2; m <= n; ++m) {
        const double c = 2.0 * m + a + b;
        const double a1 = 2.0 * m * (m + a + b) * (c - 2.0);
        const double a2 = (c - 1.0) * (a * a - b * b);
        const double a3 = (c - 1.0) * c * (c - 2.0);
        const double a4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * c;
        const double pnext = ((a2 + a3 * z) * p - a4 * pm1) / a1;
        pm1 = p;
        p = pnext;
    }
    return p;
}

}  // namespace

double jacobi_deriv(int n, double a, double b, double z, int m) {
    if (n < 0) throw std::domain_error("jacobi_deriv: negative degree");
    if (a <= -1.0 || b <= -1.0) throw std::domain_error("jacobi_deriv: parameters must exceed -1");
    if (m < 0) throw std::domain_error("jacobi_deriv: negative derivative order");
    if (m > n) return 0.0;
    double pref = 1.0;
    for (int i = 0; i < m; ++i) pref *= 0.5 * (n + a + b + 1.0 + i);
    return pref * jacobi_value(n - m, a + m, b + m, z);
}

double jacobi(int n, double a, double b, double z, int deriv) {
    if (deriv < 0 || deriv > 2) throw std::domain_error("jacobi: deriv must be 0, 1 or 2");
    return jacobi_deriv(n, a, b, z, deriv);
}

Jet1 jacobi_jet(int n, double a, double b, const Jet1& z) {
    std::array<double, 5> fd{};
    for (int m = 0; m <= 4; ++m) fd[m] = jacobi_deriv(n, a, b, z.d[0], m);
    return jet_compose(fd, z);
}

}  // namespace pdm::special
