#include "pdm/coeffs.hpp"

#include <cmath>
#include <stdexcept>

#include "pdm/special.hpp"

namespace pdm::coeffs {

using special::log_gamma;

namespace {

void check_knu(double k, int nu) {
    if (!(k > 0.0)) throw std::domain_error("coeffs: requires k > 0");
    if (nu < 0) throw std::domain_error("coeffs: negative step count");
}

void check_level_pair(int N, int N0) {
    if (N0 < 0 || N0 % 2 != 0) throw std::domain_error("coeffs: N0 must be a nonnegative even integer");
    if (N < N0) throw std::domain_error("coeffs: requires N >= N0");
}

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

double x_factor(int l, int nu, int mu) {
    if (l < 0 || nu < 0) throw std::domain_error("x_factor: negative arguments");
    if (mu < 0 || mu > nu) return 0.0;
    // DP over chain length; the gate removes down-steps that would land the
    // running level l + step - 2*down on -1.
    std::vector<double> row(static_cast<std::size_t>(nu) + 1, 0.0);
    row[0] = 1.0;
    for (int step = 1; step <= nu; ++step) {
        std::vector<double> next(row.size(), 0.0);
        for (int m = 0; m <= step; ++m) {
            double v = (m <= step - 1) ? row[m] : 0.0;
            if (m >= 1 && 2 * m != l + step + 1) v += row[m - 1];
            next[m] = v;
        }
        row.swap(next);
    }
    return row[mu];
}

double x_factor_unrestricted(int nu, int mu) { return special::binomial(nu, mu); }

double x_factor_floor(int nu, int mu) {
    if (mu < 0 || mu > nu / 2) return 0.0;
    return special::factorial(nu) * (nu - 2 * mu + 1) /
           (special::factorial(mu) * special::factorial(nu - mu + 1));
}

std::vector<double> a_coeffs(double k, int N0) {
    check_knu(k, 0);
    if (N0 < 0 || N0 % 2 != 0) throw std::domain_error("a_coeffs: N0 must be a nonnegative even integer");
    std::vector<double> a(static_cast<std::size_t>(N0 / 2) + 1);
    for (int i = 0; i <= N0 / 2; ++i) {
        const int s = 2 * i + 1;
        const int half = (N0 + 1 - s) / 2;
        const double lg = log_gamma(N0 + 2.0) + log_gamma(0.5 * (N0 + s) + k + 1.0) -
                          (N0 + 1 - s) * std::log(2.0) - special::log_factorial(s) -
                          special::log_factorial(half) - log_gamma(N0 + k + 1.5);
        a[i] = parity_sign(half) * std::exp(lg);
    }
    return a;
}

double X_coeff(double k, int N0, int n) {
    check_knu(k, 0);
    check_level_pair(N0, N0);
    if (n < 0 || n > N0 / 2) throw std::domain_error("X_coeff: n outside 0..N0/2");
    const double lg = log_gamma(N0 + 2.0) + log_gamma(k + 1.0) + log_gamma(n + k + 0.5) +
                      log_gamma(N0 - n + k + 1.5) - N0 * std::log(2.0) - special::log_factorial(n) -
                      special::log_factorial(N0 - n + 1) - log_gamma(0.5 * N0 + k + 1.0) -
                      log_gamma(k + 0.5) - log_gamma(0.5 * (N0 + 3.0) + k);
    return std::exp(0.5 * lg);
}

double S_sum(double k, int N0) {
    check_knu(k, 0);
    if (N0 < 0 || N0 % 2 != 0) throw std::domain_error("S_sum: N0 must be a nonnegative even integer");
    double s = 0.0;
    for (int n = 0; n <= N0 / 2; ++n)
        s += std::exp(log_gamma(N0 - n + k + 1.5) + log_gamma(n + k + 0.5) -
                      special::log_factorial(n) - special::log_factorial(N0 + 1 - n));
    return s;
}

double S_sum_closed(double k, int N0) {
    check_knu(k, 0);
    return std::exp(log_gamma(N0 + 2.0 * k + 2.0) + 2.0 * log_gamma(k + 0.5) -
                    std::log(2.0) - special::log_factorial(N0 + 1) - log_gamma(2.0 * k + 1.0));
}

double Y_coeff(double q, double k, int n, int l, int nu, int mu) {
    check_knu(k, nu);
    if (q <= 0.0) throw std::domain_error("Y_coeff: requires q > 0");
    if (n < 0 || l < 0) throw std::domain_error("Y_coeff: negative quantum numbers");
    if (mu < 0 || mu > nu) return 0.0;
    const double paths = x_factor(l, nu, mu);
    if (paths == 0.0) return 0.0;
    const long long N = 2LL * n + l;
    const long long e = nu * N + static_cast<long long>(nu) * (nu + 1) / 2 + mu;
    const double lg = special::log_factorial(n + mu) + special::log_factorial(n + l + nu - mu + 1) +
                      log_gamma(n + nu + k + 0.5) + log_gamma(n + l + nu + k + 1.5) -
                      special::log_factorial(n) - special::log_factorial(n + l + 1) -
                      log_gamma(n + mu + k + 0.5) - log_gamma(n + l + nu - mu + k + 1.5);
    return parity_sign(e) * std::pow(q, nu) * paths * std::exp(0.5 * lg);
}

double Nbar(double q, double k, int N, int N0) {
    check_knu(k, N - N0);
    if (q <= 0.0) throw std::domain_error("Nbar: requires q > 0");
    check_level_pair(N, N0);
    const int nu = N - N0;
    const double lg = log_gamma(2.0 * k + nu) - special::log_factorial(nu) - log_gamma(2.0 * k + 2.0 * nu);
    return std::pow(q, -nu) * std::exp(0.5 * lg);
}

std::vector<double> Z_row(double k, int N, int N0) {
    check_knu(k, 0);
    check_level_pair(N, N0);
    const int nu = N - N0;
    // q cancels between the chain coefficients and their normalization; fix
    // q = 1.  The overall phase (-1)^nu fixes the second-basis states so that
    // the N0 = 0 rows agree with the closed ground-family form.
    const double norm = parity_sign(nu) * Nbar(1.0, k, N, N0);
    std::vector<double> row(static_cast<std::size_t>(N / 2) + 1, 0.0);
    for (int n = 0; n <= N / 2; ++n) {
        const int lo = std::max(0, n + N0 - N);
        const int hi = std::min(N0 / 2, n);
        double s = 0.0;
        for (int np = lo; np <= hi; ++np)
            s += X_coeff(k + nu, N0, np) * Y_coeff(1.0, k, np, N0 - 2 * np, nu, n - np);
        row[n] = norm * s;
    }
    return row;
}

std::vector<double> Z_row_ground(double k, int N) {
    check_knu(k, N);
    if (N < 0) throw std::domain_error("Z_row_ground: negative N");
    std::vector<double> row(static_cast<std::size_t>(N / 2) + 1, 0.0);
    for (int n = 0; n <= N / 2; ++n) {
        const long long e = static_cast<long long>(N) * (N + 3) / 2 + n;
        double lg = special::log_factorial(N) + log_gamma(0.5 * N + k) + log_gamma(0.5 * (N + 1.0) + k) +
                    log_gamma(N + k + 1.5) - N * std::log(2.0) - special::log_factorial(n) -
                    special::log_factorial(N - n + 1) - log_gamma(N + k) - log_gamma(n + k + 0.5) -
                    log_gamma(N - n + k + 1.5);
        row[n] = parity_sign(e) * (N - 2 * n + 1) * std::exp(0.5 * lg);
    }
    return row;
}

double TransformMatrix::orthogonality_residual() const {
    const std::size_t m = rows.size();
    double worst = 0.0;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            double dot = 0.0;
            for (std::size_t n = 0; n < rows[r].size(); ++n) dot += rows[r][n] * rows[c][n];
            worst = std::max(worst, std::abs(dot - (r == c ? 1.0 : 0.0)));
        }
    return worst;
}

TransformMatrix TransformMatrix::build(double k, int N) {
    check_knu(k, 0);
    if (N < 0) throw std::domain_error("TransformMatrix: negative N");
    TransformMatrix t;
    t.k = k;
    t.N = N;
    for (int N0 = 0; N0 <= N; N0 += 2) {
        t.row_N0.push_back(N0);
        t.rows.push_back(Z_row(k, N, N0));
    }
    return t;
}

std::pair<double, double> ladder_coeffs(double q, double k, int n, int l, Ladder dir) {
    check_knu(k, 0);
    if (q <= 0.0) throw std::domain_error("ladder_coeffs: requires q > 0");
    if (n < 0 || l < 0) throw std::domain_error("ladder_coeffs: negative quantum numbers");
    const int N = 2 * n + l;
    if (dir == Ladder::lower) {
        const double sign = parity_sign(N);
        const double ca = (n == 0) ? 0.0 : -sign * q * std::sqrt(n * (n + l + k + 1.5));
        const double cb = (l == 0) ? 0.0 : sign * q * std::sqrt((n + k + 0.5) * (n + l + 1.0));
        return {ca, cb};
    }
    const double sign = parity_sign(N + 1);
    const double ca = (l == 0) ? 0.0 : -sign * q * std::sqrt((n + 1.0) * (n + l + k + 1.5));
    const double cb = sign * q * std::sqrt((n + k + 0.5) * (n + l + 2.0));
    return {ca, cb};
}

}  // namespace pdm::coeffs
