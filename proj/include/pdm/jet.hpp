#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace pdm {

// Truncated Taylor data of a univariate function at a point: value and
// derivatives up to order 4.  `order` marks how many derivative slots are
// meaningful; applying a differential operator of order m to a jet of order r
// yields a jet of order r - m.
struct Jet1 {
    std::array<double, 5> d{};
    int order = 4;

    double value() const { return d[0]; }
    double d1() const { return d[1]; }
    double d2() const { return d[2]; }
};

inline Jet1 jet_var(double x) {
    Jet1 j;
    j.d = {x, 1.0, 0.0, 0.0, 0.0};
    return j;
}

inline Jet1 jet_const(double c) {
    Jet1 j;
    j.d = {c, 0.0, 0.0, 0.0, 0.0};
    return j;
}

inline Jet1 operator+(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.order = std::min(a.order, b.order);
    for (int i = 0; i <= r.order; ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
}

inline Jet1 operator-(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.order = std::min(a.order, b.order);
    for (int i = 0; i <= r.order; ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
}

inline Jet1 operator-(const Jet1& a) {
    Jet1 r = a;
    for (int i = 0; i <= r.order; ++i) r.d[i] = -a.d[i];
    return r;
}

inline Jet1 operator*(double s, const Jet1& a) {
    Jet1 r = a;
    for (int i = 0; i <= r.order; ++i) r.d[i] = s * a.d[i];
    return r;
}

inline Jet1 operator*(const Jet1& a, double s) { return s * a; }

inline Jet1 operator+(const Jet1& a, double c) {
    Jet1 r = a;
    r.d[0] += c;
    return r;
}

inline Jet1 operator+(double c, const Jet1& a) { return a + c; }

inline Jet1 operator-(const Jet1& a, double c) { return a + (-c); }

inline Jet1 operator-(double c, const Jet1& a) { return (-a) + c; }

// Leibniz product over the valid range.
inline Jet1 operator*(const Jet1& a, const Jet1& b) {
    static constexpr double binom[5][5] = {{1, 0, 0, 0, 0},
                                           {1, 1, 0, 0, 0},
                                           {1, 2, 1, 0, 0},
                                           {1, 3, 3, 1, 0},
                                           {1, 4, 6, 4, 1}};
    Jet1 r;
    r.order = std::min(a.order, b.order);
    for (int n = 0; n <= r.order; ++n) {
        double s = 0.0;
        for (int i = 0; i <= n; ++i) s += binom[n][i] * a.d[i] * b.d[n - i];
        r.d[n] = s;
    }
    return r;
}

// g = f(u) by the chain rule to 4th order; fd[i] = f^(i) evaluated at u.d[0].
inline Jet1 jet_compose(const std::array<double, 5>& fd, const Jet1& u) {
    const double u1 = u.d[1], u2 = u.d[2], u3 = u.d[3], u4 = u.d[4];
    Jet1 g;
    g.order = u.order;
    g.d[0] = fd[0];
    if (g.order >= 1) g.d[1] = fd[1] * u1;
    if (g.order >= 2) g.d[2] = fd[2] * u1 * u1 + fd[1] * u2;
    if (g.order >= 3) g.d[3] = fd[3] * u1 * u1 * u1 + 3.0 * fd[2] * u1 * u2 + fd[1] * u3;
    if (g.order >= 4)
        g.d[4] = fd[4] * u1 * u1 * u1 * u1 + 6.0 * fd[3] * u1 * u1 * u2 +
                 fd[2] * (3.0 * u2 * u2 + 4.0 * u1 * u3) + fd[1] * u4;
    return g;
}

inline Jet1 jet_exp(const Jet1& u) {
    const double e = std::exp(u.d[0]);
    return jet_compose({e, e, e, e, e}, u);
}

inline Jet1 jet_log(const Jet1& u) {
    const double x = u.d[0];
    if (x <= 0.0) throw std::domain_error("jet_log: nonpositive argument");
    const double i1 = 1.0 / x, i2 = i1 * i1;
    return jet_compose({std::log(x), i1, -i2, 2.0 * i2 * i1, -6.0 * i2 * i2}, u);
}

inline Jet1 jet_sin(const Jet1& u) {
    const double s = std::sin(u.d[0]), c = std::cos(u.d[0]);
    return jet_compose({s, c, -s, -c, s}, u);
}

inline Jet1 jet_cos(const Jet1& u) {
    const double s = std::sin(u.d[0]), c = std::cos(u.d[0]);
    return jet_compose({c, -s, -c, s, c}, u);
}

inline Jet1 jet_sinh(const Jet1& u) {
    const double s = std::sinh(u.d[0]), c = std::cosh(u.d[0]);
    return jet_compose({s, c, s, c, s}, u);
}

inline Jet1 jet_cosh(const Jet1& u) {
    const double s = std::sinh(u.d[0]), c = std::cosh(u.d[0]);
    return jet_compose({c, s, c, s, c}, u);
}

inline Jet1 jet_tanh(const Jet1& u) {
    const double t = std::tanh(u.d[0]);
    const double s2 = 1.0 - t * t;
    return jet_compose({t, s2, -2.0 * t * s2, s2 * (6.0 * t * t - 2.0), s2 * (16.0 * t - 24.0 * t * t * t)},
                       u);
}

inline Jet1 jet_sech(const Jet1& u) {
    const double s = 1.0 / std::cosh(u.d[0]);
    const double t = std::tanh(u.d[0]);
    const double t2 = t * t;
    return jet_compose({s, -s * t, s * (2.0 * t2 - 1.0), s * t * (5.0 - 6.0 * t2),
                        s * (5.0 - 28.0 * t2 + 24.0 * t2 * t2)},
                       u);
}

inline Jet1 jet_csch(const Jet1& u) {
    const double x = u.d[0];
    if (x == 0.0) throw std::domain_error("jet_csch: argument is zero");
    const double c = 1.0 / std::sinh(x);
    const double ct = std::cosh(x) / std::sinh(x);
    const double c2 = c * c;
    return jet_compose({c, -c * ct, c * (1.0 + 2.0 * c2), -c * ct * (1.0 + 6.0 * c2),
                        c * (1.0 + 20.0 * c2 + 24.0 * c2 * c2)},
                       u);
}

inline Jet1 jet_atan(const Jet1& u) {
    const double x = u.d[0];
    const double w = 1.0 / (1.0 + x * x);
    return jet_compose({std::atan(x), w, -2.0 * x * w * w, (6.0 * x * x - 2.0) * w * w * w,
                        24.0 * x * (1.0 - x * x) * w * w * w * w},
                       u);
}

// u^p for real p; requires u > 0 unless p is a nonnegative integer wide enough
// to keep all four derivative factors finite.
inline Jet1 jet_pow(const Jet1& u, double p) {
    const double x = u.d[0];
    std::array<double, 5> fd{};
    if (x > 0.0) {
        double fac = 1.0;
        for (int i = 0; i <= 4; ++i) {
            fd[i] = fac * std::pow(x, p - i);
            fac *= (p - i);
        }
    } else if (x == 0.0 && p >= 0.0 && p == std::floor(p) && p <= 4.0) {
        const int ip = static_cast<int>(p);
        double fac = 1.0;
        for (int i = 0; i < ip; ++i) fac *= (p - i);
        fd[ip] = fac;  // only the p-th derivative survives at 0
    } else if (x == 0.0 && p > 4.0) {
        // all represented derivatives vanish
    } else {
        throw std::domain_error("jet_pow: argument outside domain");
    }
    return jet_compose(fd, u);
}

inline Jet1 jet_sqrt(const Jet1& u) { return jet_pow(u, 0.5); }

inline Jet1 jet_inv(const Jet1& u) {
    const double x = u.d[0];
    if (x == 0.0) throw std::domain_error("jet_inv: division by zero");
    const double i1 = 1.0 / x, i2 = i1 * i1;
    return jet_compose({i1, -i2, 2.0 * i2 * i1, -6.0 * i2 * i2, 24.0 * i2 * i2 * i1}, u);
}

inline Jet1 operator/(const Jet1& a, const Jet1& b) { return a * jet_inv(b); }

inline Jet1 operator/(double s, const Jet1& b) { return s * jet_inv(b); }

inline Jet1 operator/(const Jet1& a, double s) { return (1.0 / s) * a; }

// Mixed partials of a bivariate function up to total order 4, stored by total
// degree: (0,0); (1,0),(0,1); (2,0),(1,1),(0,2); ...  15 entries.
struct Jet2 {
    std::array<double, 15> d{};
    int order = 4;

    static constexpr int idx(int i, int j) {
        const int g = i + j;
        return g * (g + 1) / 2 + j;
    }
    double at(int i, int j) const { return d[idx(i, j)]; }
    double& at(int i, int j) { return d[idx(i, j)]; }

    double value() const { return d[0]; }
    double dx() const { return at(1, 0); }
    double dy() const { return at(0, 1); }
    double dxx() const { return at(2, 0); }
    double dxy() const { return at(1, 1); }
    double dyy() const { return at(0, 2); }
};

// Product jet of f(x) * g(y).
inline Jet2 jet_outer(const Jet1& fx, const Jet1& fy) {
    Jet2 r;
    r.order = std::min({4, fx.order, fy.order});
    for (int i = 0; i <= r.order; ++i)
        for (int j = 0; i + j <= r.order; ++j) r.at(i, j) = fx.d[i] * fy.d[j];
    return r;
}

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.order = std::min(a.order, b.order);
    for (int i = 0; i <= r.order; ++i)
        for (int j = 0; i + j <= r.order; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

inline Jet2 operator*(double s, const Jet2& a) {
    Jet2 r = a;
    for (auto& v : r.d) v *= s;
    return r;
}

// 2D Leibniz product over the common valid range.
inline Jet2 jet_mul(const Jet2& a, const Jet2& b) {
    static constexpr double binom[5][5] = {{1, 0, 0, 0, 0},
                                           {1, 1, 0, 0, 0},
                                           {1, 2, 1, 0, 0},
                                           {1, 3, 3, 1, 0},
                                           {1, 4, 6, 4, 1}};
    Jet2 r;
    r.order = std::min(a.order, b.order);
    for (int m = 0; m <= r.order; ++m)
        for (int n = 0; m + n <= r.order; ++n) {
            double s = 0.0;
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= n; ++j)
                    s += binom[m][i] * binom[n][j] * a.at(i, j) * b.at(m - i, n - j);
            r.at(m, n) = s;
        }
    return r;
}

// Jet of the partial derivative d^sx_x d^sy_y f, one order lower per shift.
inline Jet2 jet_shift(const Jet2& f, int sx, int sy) {
    Jet2 r;
    r.order = f.order - sx - sy;
    if (r.order < 0) throw std::logic_error("jet_shift: jet order exhausted");
    for (int i = 0; i <= r.order; ++i)
        for (int j = 0; i + j <= r.order; ++j) r.at(i, j) = f.at(i + sx, j + sy);
    return r;
}

inline Jet1 jet_shift1(const Jet1& f, int s) {
    Jet1 r;
    r.order = f.order - s;
    if (r.order < 0) throw std::logic_error("jet_shift1: jet order exhausted");
    for (int i = 0; i <= r.order; ++i) r.d[i] = f.d[i + s];
    return r;
}

}  // namespace pdm
