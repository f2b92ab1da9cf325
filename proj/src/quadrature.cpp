#include "pdm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pdm::quad {

void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights) {
    if (m < 1) throw std::invalid_argument("gauss_legendre: need at least one point");
    nodes.assign(m, 0.0);
    weights.assign(m, 0.0);
    // Newton iteration on P_m from the Chebyshev initial guess; exploits the
    // symmetry of the roots about zero.
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= m; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = m * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
}

double Rule1D::integrate(const std::function<double(double)>& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
    return s;
}

namespace {

void append_panel(Rule1D& rule, double a, double b, const std::vector<double>& gx,
                  const std::vector<double>& gw) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < gx.size(); ++i) {
        rule.x.push_back(mid + half * gx[i]);
        rule.w.push_back(half * gw[i]);
    }
}

}  // namespace

Rule1D composite_gl(double a, double b, int panels, int pts) {
    if (panels < 1 || b <= a) throw std::invalid_argument("composite_gl: bad interval or panel count");
    std::vector<double> gx, gw;
    gauss_legendre(pts, gx, gw);
    Rule1D rule;
    rule.x.reserve(static_cast<std::size_t>(panels) * pts);
    rule.w.reserve(static_cast<std::size_t>(panels) * pts);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) append_panel(rule, a + p * h, a + (p + 1) * h, gx, gw);
    return rule;
}

Rule1D composite_gl_graded(double a, double b, int panels, int pts, int levels) {
    if (panels < 1 || b <= a) throw std::invalid_argument("composite_gl_graded: bad interval");
    std::vector<double> gx, gw;
    gauss_legendre(pts, gx, gw);
    Rule1D rule;
    const double h = (b - a) / panels;
    // first panel: geometric bisection toward `a`; the innermost slice is of
    // width h * 2^-levels, negligible for any integrand bounded near a
    double lo = a + h * std::pow(0.5, levels);
    append_panel(rule, a, lo, gx, gw);
    for (int j = levels - 1; j >= 0; --j) {
        const double hi = a + h * std::pow(0.5, j);
        append_panel(rule, lo, hi, gx, gw);
        lo = hi;
    }
    for (int p = 1; p < panels; ++p) append_panel(rule, a + p * h, a + (p + 1) * h, gx, gw);
    return rule;
}

double DomainRule::integrate(const std::function<double(double, double)>& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < x.x.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < y.x.size(); ++j) row += y.w[j] * f(x.x[i], y.x[j]);
        s += x.w[i] * row;
    }
    return s;
}

DomainRule domain_rule(double q, double xmax, int panels, int pts) {
    if (q <= 0.0 || xmax <= 0.0) throw std::invalid_argument("domain_rule: q and xmax must be positive");
    DomainRule r;
    r.x = composite_gl_graded(0.0, xmax, panels, pts);
    const double yb = 0.5 * std::numbers::pi / q;
    r.y = composite_gl(-yb, yb, panels, pts);
    return r;
}

double inner(const DomainRule& rule, const SepSum& a, const SepSum& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    const std::size_t nx = rule.x.x.size(), ny = rule.y.x.size();
    // tabulate factor values once per term
    auto tab = [&](const std::vector<SepTerm>& ts) {
        std::vector<std::vector<double>> fx(ts.size(), std::vector<double>(nx));
        std::vector<std::vector<double>> fy(ts.size(), std::vector<double>(ny));
        for (std::size_t t = 0; t < ts.size(); ++t) {
            for (std::size_t i = 0; i < nx; ++i) fx[t][i] = ts[t].fx(rule.x.x[i]).value();
            for (std::size_t j = 0; j < ny; ++j) fy[t][j] = ts[t].fy(rule.y.x[j]).value();
        }
        return std::make_pair(fx, fy);
    };
    auto [ax, ay] = tab(ta);
    auto [bx, by] = tab(tb);
    double s = 0.0;
    for (std::size_t u = 0; u < ta.size(); ++u)
        for (std::size_t v = 0; v < tb.size(); ++v) {
            double ix = 0.0, iy = 0.0;
            for (std::size_t i = 0; i < nx; ++i) ix += rule.x.w[i] * ax[u][i] * bx[v][i];
            for (std::size_t j = 0; j < ny; ++j) iy += rule.y.w[j] * ay[u][j] * by[v][j];
            s += ta[u].w * tb[v].w * ix * iy;
        }
    return s;
}

double inner(const DomainRule& rule, const Field2& a, const Field2& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.x.x.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < rule.y.x.size(); ++j)
            row += rule.y.w[j] * a(rule.x.x[i], rule.y.x[j], 0).value() *
                   b(rule.x.x[i], rule.y.x[j], 0).value();
        s += rule.x.w[i] * row;
    }
    return s;
}

}  // namespace pdm::quad
