#include "pdm/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdm::op {

namespace {

// ---- univariate coefficient factories -------------------------------------

Fun1 f_const(double c) {
    return [c](double) { return jet_const(c); };
}

Fun1 fx_cosh(double q) {
    return [q](double x) { return jet_cosh(q * jet_var(x)); };
}

Fun1 fx_sinh(double q) {
    return [q](double x) { return jet_sinh(q * jet_var(x)); };
}

Fun1 fx_cosh2(double q) {
    return [q](double x) {
        Jet1 c = jet_cosh(q * jet_var(x));
        return c * c;
    };
}

Fun1 fx_sinh2(double q) {
    return [q](double x) {
        Jet1 s = jet_sinh(q * jet_var(x));
        return s * s;
    };
}

Fun1 fx_sinhcosh(double q) {
    return [q](double x) {
        Jet1 u = q * jet_var(x);
        return jet_sinh(u) * jet_cosh(u);
    };
}

Fun1 fx_csch(double q) {
    return [q](double x) { return jet_csch(q * jet_var(x)); };
}

Fun1 fx_csch2(double q) {
    return [q](double x) {
        Jet1 c = jet_csch(q * jet_var(x));
        return c * c;
    };
}

Fun1 fy_sin(double q) {
    return [q](double y) { return jet_sin(q * jet_var(y)); };
}

Fun1 fy_cos(double q) {
    return [q](double y) { return jet_cos(q * jet_var(y)); };
}

Fun1 fy_sin2(double q) {
    return [q](double y) {
        Jet1 s = jet_sin(q * jet_var(y));
        return s * s;
    };
}

Fun1 fy_cos2(double q) {
    return [q](double y) {
        Jet1 c = jet_cos(q * jet_var(y));
        return c * c;
    };
}

Fun1 fy_sincos(double q) {
    return [q](double y) {
        Jet1 u = q * jet_var(y);
        return jet_sin(u) * jet_cos(u);
    };
}

SepSum sep1(std::string label, Fun1 fx, Fun1 fy, double w = 1.0) {
    return SepSum(std::move(label), {SepTerm{std::move(fx), std::move(fy), w}});
}

SepSum sep_const(double c) {
    if (c == 0.0) return SepSum();
    return sep1("const", f_const(c), f_const(1.0), 1.0);
}

}  // namespace

// ---- operator cores --------------------------------------------------------

int DiffOp2::order() const {
    if (!cxx.empty() || !cxy.empty() || !cyy.empty()) return 2;
    if (!cx.empty() || !cy.empty()) return 1;
    return 0;
}

Jet2 DiffOp2::apply(double x, double y, const Jet2& f) const {
    const int out = f.order - order();
    if (out < 0) throw std::logic_error("DiffOp2::apply: source jet order exhausted");
    Jet2 acc;
    acc.order = out;
    auto add = [&](const SepSum& c, int sx, int sy) {
        if (c.empty()) return;
        Jet2 cj = c.jet(x, y);
        cj.order = std::min(cj.order, out);
        Jet2 df = jet_shift(f, sx, sy);
        df.order = std::min(df.order, out);
        acc = acc + jet_mul(cj, df);
    };
    add(cxx, 2, 0);
    add(cxy, 1, 1);
    add(cyy, 0, 2);
    add(cx, 1, 0);
    add(cy, 0, 1);
    add(c0, 0, 0);
    return acc;
}

Field2 DiffOp2::applied(const Field2& f) const {
    DiffOp2 self = *this;
    return [self, f](double x, double y, int ord) {
        Jet2 src = f(x, y, ord + self.order());
        return self.apply(x, y, src);
    };
}

int DiffOp1::order() const {
    if (cxx) return 2;
    if (cx) return 1;
    return 0;
}

Jet1 DiffOp1::apply(double x, const Jet1& f) const {
    const int out = f.order - order();
    if (out < 0) throw std::logic_error("DiffOp1::apply: source jet order exhausted");
    Jet1 acc = jet_const(0.0);
    acc.order = out;
    auto add = [&](const Fun1& c, int s) {
        if (!c) return;
        Jet1 cj = c(x);
        cj.order = std::min(cj.order, out);
        Jet1 df = jet_shift1(f, s);
        df.order = std::min(df.order, out);
        acc = acc + cj * df;
    };
    add(cxx, 2);
    add(cx, 1);
    add(c0, 0);
    return acc;
}

Field1 DiffOp1::applied(const Field1& f) const {
    DiffOp1 self = *this;
    return [self, f](double x, int ord) {
        Jet1 src = f(x, ord + self.order());
        return self.apply(x, src);
    };
}

DiffOp1 adjoint(const DiffOp1& opr) {
    if (opr.cxx) throw std::invalid_argument("adjoint: only first-order operators supported");
    DiffOp1 r;
    r.name = opr.name + "^T";
    const Fun1 a = opr.cx;
    const Fun1 b = opr.c0;
    if (a) r.cx = [a](double x) { return -1.0 * a(x); };
    // The zeroth-order part picks up -a' from moving the derivative across.
    r.c0 = [a, b](double x) {
        Jet1 acc = jet_const(0.0);
        if (b) acc = acc + b(x);
        if (a) acc = acc - jet_shift1(a(x), 1);
        return acc;
    };
    return r;
}

// ---- model operator tables -------------------------------------------------

DiffOp2 make_op2(Kind2 kind, double q, double k, double v0) {
    if (q <= 0.0) throw std::invalid_argument("make_op2: q must be positive");
    const double q2 = q * q;
    DiffOp2 r;
    switch (kind) {
        case Kind2::hamiltonian:
        case Kind2::partner_hamiltonian: {
            // Kinetic part -d (1/M) d with M = sech^2; the partner shifts the
            // centrifugal strength k(k-1) -> k(k+1) and the offset by 2k.
            const bool partner = (kind == Kind2::partner_hamiltonian);
            const double cent = partner ? k * (k + 1.0) : k * (k - 1.0);
            const double cst = partner ? q2 * (v0 + 2.0 * k) : q2 * v0;
            r.name = partner ? "H1" : "H";
            r.cxx = sep1("-cosh^2", fx_cosh2(q), f_const(1.0), -1.0);
            r.cyy = sep1("-cosh^2", fx_cosh2(q), f_const(1.0), -1.0);
            r.cx = sep1("-2q sinh cosh", fx_sinhcosh(q), f_const(1.0), -2.0 * q);
            r.c0 = sep1("potential", [q, q2, cent, cst](double x) {
                Jet1 u = q * jet_var(x);
                Jet1 ch = jet_cosh(u);
                Jet1 cs = jet_csch(u);
                return (-q2) * (ch * ch) + (q2 * cent) * (cs * cs) + cst;
            }, f_const(1.0));
            break;
        }
        case Kind2::intertwiner: {
            r.name = "eta";
            r.cx = sep1("cosh sin", fx_cosh(q), fy_sin(q), 1.0);
            r.cy = sep1("-sinh cos", fx_sinh(q), fy_cos(q), -1.0);
            r.c0 = sep1("(q sinh - qk csch) sin", [q, k](double x) {
                Jet1 u = q * jet_var(x);
                return q * jet_sinh(u) - (q * k) * jet_csch(u);
            }, fy_sin(q));
            break;
        }
        case Kind2::intertwiner_adjoint: {
            // -A^i d_i - (d_i A^i) + B with d_i A^i = 2q sinh qx sin qy.
            r.name = "etaT";
            r.cx = sep1("-cosh sin", fx_cosh(q), fy_sin(q), -1.0);
            r.cy = sep1("sinh cos", fx_sinh(q), fy_cos(q), 1.0);
            r.c0 = sep1("-(q sinh + qk csch) sin", [q, k](double x) {
                Jet1 u = q * jet_var(x);
                return (-q) * jet_sinh(u) - (q * k) * jet_csch(u);
            }, fy_sin(q));
            break;
        }
        case Kind2::invariant:
        case Kind2::partner_invariant: {
            const bool partner = (kind == Kind2::partner_invariant);
            r.name = partner ? "R1" : "R";
            r.cxx = sep1("-cosh^2 sin^2", fx_cosh2(q), fy_sin2(q), -1.0);
            r.cxy = sep1("2 sinh cosh sin cos", fx_sinhcosh(q), fy_sincos(q), 2.0);
            r.cyy = sep1("-sinh^2 cos^2", fx_sinh2(q), fy_cos2(q), -1.0);
            r.cx = sep1("q sinh cosh (1-4sin^2)", fx_sinhcosh(q), [q](double y) {
                Jet1 s = jet_sin(q * jet_var(y));
                return 1.0 - 4.0 * (s * s);
            }, q);
            r.cy = sep1("q (1+4sinh^2) sin cos", [q](double x) {
                Jet1 s = jet_sinh(q * jet_var(x));
                return 1.0 + 4.0 * (s * s);
            }, fy_sincos(q), q);
            // Scalar part; the partner adds 2 q^2 k (1 + csch^2 sin^2).
            const double c_cent = partner ? k * (k + 1.0) : k * (k - 1.0);
            const double c_const = partner ? q2 * k : -q2 * k;
            r.c0 = SepSum("invariant scalar part",
                          {SepTerm{fx_sinh2(q), f_const(1.0), q2},
                           SepTerm{f_const(1.0), fy_sin2(q), -q2},
                           SepTerm{fx_sinh2(q), fy_sin2(q), -3.0 * q2},
                           SepTerm{f_const(1.0), f_const(1.0), c_const},
                           SepTerm{fx_csch2(q), fy_sin2(q), q2 * c_cent}});
            break;
        }
        case Kind2::transverse_kinetic: {
            r.name = "L";
            r.cyy = sep1("-1", f_const(1.0), f_const(1.0), -1.0);
            break;
        }
    }
    return r;
}

DiffOp2 build_op2(Kind2 kind, const model::Params& p) {
    p.validate();
    return make_op2(kind, p.q, p.k, p.v0);
}

DiffOp1 make_op1(Kind1 kind, double q, double k, int l) {
    if (q <= 0.0) throw std::invalid_argument("make_op1: q must be positive");
    if (l < -1) throw std::invalid_argument("make_op1: l must be at least -1");
    const double q2 = q * q;
    DiffOp1 r;
    switch (kind) {
        case Kind1::longitudinal_hamiltonian: {
            r.name = "H_l[" + std::to_string(l) + "]";
            r.cxx = [q](double x) {
                Jet1 c = jet_cosh(q * jet_var(x));
                return -1.0 * (c * c);
            };
            r.cx = [q](double x) {
                Jet1 u = q * jet_var(x);
                return (-2.0 * q) * (jet_sinh(u) * jet_cosh(u));
            };
            r.c0 = [q, q2, k, l](double x) {
                Jet1 u = q * jet_var(x);
                Jet1 ch = jet_cosh(u);
                Jet1 cs = jet_csch(u);
                return (q2 * l * (l + 2.0)) * (ch * ch) + (q2 * k * (k - 1.0)) * (cs * cs);
            };
            break;
        }
        case Kind1::ladder_up: {
            r.name = "A[" + std::to_string(l) + "]";
            r.cx = fx_cosh(q);
            r.c0 = [q, k, l](double x) {
                Jet1 u = q * jet_var(x);
                return (q * (l + 2.0)) * jet_sinh(u) - (q * k) * jet_csch(u);
            };
            break;
        }
        case Kind1::ladder_down: {
            r.name = "At[" + std::to_string(l) + "]";
            r.cx = fx_cosh(q);
            r.c0 = [q, k, l](double x) {
                Jet1 u = q * jet_var(x);
                return (-q * l) * jet_sinh(u) - (q * k) * jet_csch(u);
            };
            break;
        }
    }
    return r;
}

DiffOp1 build_op1(Kind1 kind, const model::Params& p, int l) {
    p.validate();
    return make_op1(kind, p.q, p.k, l);
}

DiffOp2 scalar_op2(double c) {
    DiffOp2 r;
    r.name = "scalar";
    r.c0 = sep_const(c);
    return r;
}

DiffOp1 scalar_op1(double c) {
    DiffOp1 r;
    r.name = "scalar";
    r.c0 = f_const(c);
    return r;
}

double factor_const(double q, double k, int l) { return q * q * (l + 2.0) * (l + 2.0 * k + 1.0); }

double factor_const_tilde(double q, double k, int l) { return q * q * l * (l - 2.0 * k + 1.0); }

// ---- grids -------------------------------------------------------------

Grid2D Grid2D::make(const model::Params& p, int nx, int ny, double xmax) {
    p.validate();
    if (nx < 4 || ny < 4) throw std::invalid_argument("Grid2D: need at least 4 nodes per axis");
    if (!(xmax > 0.0)) throw std::invalid_argument("Grid2D: xmax must be positive");
    Grid2D g;
    g.nx = nx;
    g.ny = ny;
    g.xmax = xmax;
    g.yb = p.y_half_width();
    g.hx = xmax / (nx + 1);
    g.hy = 2.0 * g.yb / (ny + 1);
    return g;
}

bool Grid2D::same_as(const Grid2D& o) const {
    return nx == o.nx && ny == o.ny && hx == o.hx && hy == o.hy && xmax == o.xmax && yb == o.yb;
}

GridFn sample(const Grid2D& g, const std::function<double(double, double)>& f) {
    GridFn out{g, std::vector<double>(static_cast<size_t>(g.size()))};
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) out.at(i, j) = f(g.x(i), g.y(j));
    return out;
}

GridFn sample(const Grid2D& g, const SepSum& s) {
    GridFn out{g, tabulate(s, g)};
    return out;
}

std::vector<double> tabulate(const SepSum& s, const Grid2D& g) {
    std::vector<double> out(static_cast<size_t>(g.size()), 0.0);
    std::vector<double> xv(g.nx), yv(g.ny);
    for (const auto& t : s.terms()) {
        for (int i = 0; i < g.nx; ++i) xv[i] = t.fx(g.x(i)).d[0];
        for (int j = 0; j < g.ny; ++j) yv[j] = t.fy(g.y(j)).d[0];
        for (int i = 0; i < g.nx; ++i) {
            const double wx = t.w * xv[i];
            double* row = out.data() + g.index(i, 0);
            for (int j = 0; j < g.ny; ++j) row[j] += wx * yv[j];
        }
    }
    return out;
}

namespace {

// Finite-difference weights on arbitrary nodes xs[0..n-1] for derivatives up
// to order m at the point z (Fornberg's recurrence).
std::vector<std::vector<double>> fd_weights(double z, const std::vector<double>& xs, int m) {
    const int n = static_cast<int>(xs.size());
    std::vector<std::vector<double>> c(m + 1, std::vector<double>(n, 0.0));
    double c1 = 1.0;
    double c4 = xs[0] - z;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = xs[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = xs[i] - xs[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int d = mn; d >= 1; --d)
                    c[d][i] = c1 * (d * c[d - 1][i - 1] - c5 * c[d][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int d = mn; d >= 1; --d) c[d][j] = (c4 * c[d][j] - d * c[d - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c;
}

constexpr int kStencil = 6;

// Weight rows for each window offset 0..5 on a uniform grid of spacing h.
std::vector<std::vector<double>> stencil_rows(double h, int order) {
    std::vector<double> xs(kStencil);
    for (int t = 0; t < kStencil; ++t) xs[t] = t * h;
    std::vector<std::vector<double>> rows(kStencil);
    for (int o = 0; o < kStencil; ++o) rows[o] = fd_weights(o * h, xs, order)[order];
    return rows;
}

}  // namespace

GridFn derivative(const GridFn& f, int axis, int order) {
    const Grid2D& g = f.g;
    const int n = (axis == 0) ? g.nx : g.ny;
    if (n < kStencil) throw std::runtime_error("derivative: grid too small for stencil");
    if (order < 1 || order > 2) throw std::invalid_argument("derivative: order must be 1 or 2");
    const double h = (axis == 0) ? g.hx : g.hy;
    const auto rows = stencil_rows(h, order);
    GridFn out{g, std::vector<double>(static_cast<size_t>(g.size()), 0.0)};
    if (axis == 0) {
        for (int i = 0; i < g.nx; ++i) {
            const int s = std::clamp(i - 2, 0, g.nx - kStencil);
            const auto& w = rows[i - s];
            for (int j = 0; j < g.ny; ++j) {
                double acc = 0.0;
                for (int t = 0; t < kStencil; ++t) acc += w[t] * f.at(s + t, j);
                out.at(i, j) = acc;
            }
        }
    } else {
        for (int j = 0; j < g.ny; ++j) {
            const int s = std::clamp(j - 2, 0, g.ny - kStencil);
            const auto& w = rows[j - s];
            for (int i = 0; i < g.nx; ++i) {
                double acc = 0.0;
                for (int t = 0; t < kStencil; ++t) acc += w[t] * f.at(i, s + t);
                out.at(i, j) = acc;
            }
        }
    }
    return out;
}

GridFn apply_grid(const DiffOp2& opr, const GridFn& f) {
    const Grid2D& g = f.g;
    GridFn out{g, std::vector<double>(static_cast<size_t>(g.size()), 0.0)};
    auto acc = [&](const SepSum& c, const GridFn& d) {
        if (c.empty()) return;
        const auto cv = tabulate(c, g);
        for (size_t m = 0; m < out.v.size(); ++m) out.v[m] += cv[m] * d.v[m];
    };
    GridFn fx;
    const bool need_fx = !opr.cx.empty() || !opr.cxy.empty();
    if (need_fx) fx = derivative(f, 0, 1);
    if (!opr.cxx.empty()) acc(opr.cxx, derivative(f, 0, 2));
    if (!opr.cxy.empty()) acc(opr.cxy, derivative(fx, 1, 1));
    if (!opr.cyy.empty()) acc(opr.cyy, derivative(f, 1, 2));
    if (!opr.cx.empty()) acc(opr.cx, fx);
    if (!opr.cy.empty()) acc(opr.cy, derivative(f, 1, 1));
    acc(opr.c0, f);
    return out;
}

GridFn apply_analytic(const DiffOp2& opr, const Field2& f, const Grid2D& g) {
    GridFn out{g, std::vector<double>(static_cast<size_t>(g.size()))};
    const int ord = opr.order();
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) {
            const double x = g.x(i), y = g.y(j);
            out.at(i, j) = opr.apply(x, y, f(x, y, ord)).value();
        }
    return out;
}

namespace {

// Composite Simpson weights for interior nodes of a uniform grid whose data
// extend by zero to both walls; when the implied closed node count is even, a
// 3/8 block covers the last three intervals.
std::vector<double> simpson_interior(int n, double h) {
    const int M = n + 2;
    std::vector<double> w(static_cast<size_t>(M), 0.0);
    auto simpson_block = [&](int a, int b) {
        w[a] += h / 3.0;
        w[b] += h / 3.0;
        for (int t = a + 1; t < b; ++t) w[t] += (h / 3.0) * (((t - a) % 2) ? 4.0 : 2.0);
    };
    if ((M - 1) % 2 == 0) {
        simpson_block(0, M - 1);
    } else {
        simpson_block(0, M - 4);
        const double c = 3.0 * h / 8.0;
        w[M - 4] += c;
        w[M - 3] += 3.0 * c;
        w[M - 2] += 3.0 * c;
        w[M - 1] += c;
    }
    return std::vector<double>(w.begin() + 1, w.end() - 1);
}

}  // namespace

double grid_inner(const GridFn& a, const GridFn& b) {
    if (!a.g.same_as(b.g)) throw std::invalid_argument("grid_inner: mismatched grids");
    const auto wx = simpson_interior(a.g.nx, a.g.hx);
    const auto wy = simpson_interior(a.g.ny, a.g.hy);
    double acc = 0.0;
    for (int i = 0; i < a.g.nx; ++i) {
        double row = 0.0;
        const double* av = a.v.data() + a.g.index(i, 0);
        const double* bv = b.v.data() + a.g.index(i, 0);
        for (int j = 0; j < a.g.ny; ++j) row += wy[j] * av[j] * bv[j];
        acc += wx[i] * row;
    }
    return acc;
}

double grid_norm(const GridFn& a) { return std::sqrt(grid_inner(a, a)); }

double grid_sup(const GridFn& a) {
    double m = 0.0;
    for (double v : a.v) m = std::max(m, std::abs(v));
    return m;
}

Grid1D Grid1D::make(double xmax, int n) {
    if (n < 4) throw std::invalid_argument("Grid1D: need at least 4 nodes");
    if (!(xmax > 0.0)) throw std::invalid_argument("Grid1D: xmax must be positive");
    Grid1D g;
    g.n = n;
    g.xmax = xmax;
    g.h = xmax / (n + 1);
    return g;
}

GridFn1 sample1(const Grid1D& g, const Fun1& f) {
    GridFn1 out{g, std::vector<double>(static_cast<size_t>(g.n))};
    for (int i = 0; i < g.n; ++i) out.v[i] = f(g.x(i)).d[0];
    return out;
}

GridFn1 derivative1(const GridFn1& f, int order) {
    const Grid1D& g = f.g;
    if (g.n < kStencil) throw std::runtime_error("derivative1: grid too small for stencil");
    const auto rows = stencil_rows(g.h, order);
    GridFn1 out{g, std::vector<double>(static_cast<size_t>(g.n), 0.0)};
    for (int i = 0; i < g.n; ++i) {
        const int s = std::clamp(i - 2, 0, g.n - kStencil);
        const auto& w = rows[i - s];
        double acc = 0.0;
        for (int t = 0; t < kStencil; ++t) acc += w[t] * f.v[s + t];
        out.v[i] = acc;
    }
    return out;
}

GridFn1 apply_grid1(const DiffOp1& opr, const GridFn1& f) {
    GridFn1 out{f.g, std::vector<double>(f.v.size(), 0.0)};
    auto acc = [&](const Fun1& c, const GridFn1& d) {
        if (!c) return;
        for (int i = 0; i < f.g.n; ++i) out.v[i] += c(f.g.x(i)).d[0] * d.v[i];
    };
    if (opr.cxx) acc(opr.cxx, derivative1(f, 2));
    if (opr.cx) acc(opr.cx, derivative1(f, 1));
    acc(opr.c0, f);
    return out;
}

double grid_sup1(const GridFn1& a) {
    double m = 0.0;
    for (double v : a.v) m = std::max(m, std::abs(v));
    return m;
}

// ---- identity checks ---------------------------------------------------

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::intertwine_2d: return "intertwine_2d";
        case IdentityId::conjugate_intertwine: return "conjugate_intertwine";
        case IdentityId::commute_HR: return "commute_HR";
        case IdentityId::R_definition: return "R_definition";
        case IdentityId::shape_invariance_H: return "shape_invariance_H";
        case IdentityId::shape_invariance_R: return "shape_invariance_R";
        case IdentityId::intertwine_1d: return "intertwine_1d";
        case IdentityId::factorization: return "factorization";
        case IdentityId::superalgebra: return "superalgebra";
    }
    return "unknown";
}

std::vector<IdentityId> all_identities() {
    return {IdentityId::intertwine_2d,      IdentityId::conjugate_intertwine,
            IdentityId::commute_HR,         IdentityId::R_definition,
            IdentityId::shape_invariance_H, IdentityId::shape_invariance_R,
            IdentityId::intertwine_1d,      IdentityId::factorization,
            IdentityId::superalgebra};
}

namespace {

// Residual of one identity is assembled from operator chains applied to the
// probe: sum of `pos` chains minus sum of `neg` chains must vanish.  A chain
// with no operators is plain scaling.
struct Chain2 {
    double scale = 1.0;
    std::vector<DiffOp2> ops;  // rightmost acts first
};

struct Check2 {
    std::string note;
    std::vector<Chain2> pos, neg;
};

struct Chain1 {
    double scale = 1.0;
    std::vector<DiffOp1> ops;
};

struct Check1 {
    std::string note;
    std::vector<Chain1> pos, neg;
};

bool is_one_dimensional(IdentityId id) {
    return id == IdentityId::intertwine_1d || id == IdentityId::factorization;
}

std::vector<Check2> checks2_for(IdentityId id, double q, double k, double v0) {
    const double q2 = q * q;
    const auto H = make_op2(Kind2::hamiltonian, q, k, v0);
    const auto H1 = make_op2(Kind2::partner_hamiltonian, q, k, v0);
    const auto eta = make_op2(Kind2::intertwiner, q, k, v0);
    const auto etaT = make_op2(Kind2::intertwiner_adjoint, q, k, v0);
    const auto R = make_op2(Kind2::invariant, q, k, v0);
    const auto R1 = make_op2(Kind2::partner_invariant, q, k, v0);
    switch (id) {
        case IdentityId::intertwine_2d:
            return {{"eta H - H1 eta", {{1.0, {eta, H}}}, {{1.0, {H1, eta}}}}};
        case IdentityId::conjugate_intertwine:
            return {{"H etaT - etaT H1", {{1.0, {H, etaT}}}, {{1.0, {etaT, H1}}}}};
        case IdentityId::commute_HR:
            return {{"[H, R]", {{1.0, {H, R}}}, {{1.0, {R, H}}}},
                    {"[H1, R1]", {{1.0, {H1, R1}}}, {{1.0, {R1, H1}}}}};
        case IdentityId::R_definition:
            return {{"etaT eta - R", {{1.0, {etaT, eta}}}, {{1.0, {R}}}},
                    {"eta etaT - R1", {{1.0, {eta, etaT}}}, {{1.0, {R1}}}}};
        case IdentityId::shape_invariance_H: {
            const auto Hup = make_op2(Kind2::hamiltonian, q, k + 1.0, v0);
            return {{"H1(k) - H(k+1) - 2q^2 k",
                     {{1.0, {H1}}},
                     {{1.0, {Hup}}, {2.0 * q2 * k, {}}}}};
        }
        case IdentityId::shape_invariance_R: {
            const auto Rup = make_op2(Kind2::invariant, q, k + 1.0, v0);
            return {{"R1(k) - R(k+1) - q^2 (2k+1)",
                     {{1.0, {R1}}},
                     {{1.0, {Rup}}, {q2 * (2.0 * k + 1.0), {}}}}};
        }
        case IdentityId::superalgebra:
            // Block components of the graded algebra built on diag(H, H1) with
            // off-diagonal supercharges carrying eta and etaT.
            return {{"{Q+,Q-} upper block = R", {{1.0, {etaT, eta}}}, {{1.0, {R}}}},
                    {"{Q+,Q-} lower block = R1", {{1.0, {eta, etaT}}}, {{1.0, {R1}}}},
                    {"[Hdiag, Q+] = 0", {{1.0, {eta, H}}}, {{1.0, {H1, eta}}}},
                    {"[Hdiag, Q-] = 0", {{1.0, {H, etaT}}}, {{1.0, {etaT, H1}}}},
                    {"[Hdiag, Rdiag] upper", {{1.0, {H, R}}}, {{1.0, {R, H}}}},
                    {"[Hdiag, Rdiag] lower", {{1.0, {H1, R1}}}, {{1.0, {R1, H1}}}}};
        default:
            throw std::logic_error("checks2_for: identity is one-dimensional");
    }
}

std::vector<Check1> checks1_for(IdentityId id, double q, double k) {
    const double q2 = q * q;
    std::vector<Check1> out;
    for (int l = 0; l <= 2; ++l) {
        const auto Hl = make_op1(Kind1::longitudinal_hamiltonian, q, k, l);
        const auto A = make_op1(Kind1::ladder_up, q, k, l);
        const auto At = make_op1(Kind1::ladder_down, q, k, l);
        const std::string tag = " (l=" + std::to_string(l) + ")";
        if (id == IdentityId::intertwine_1d) {
            const auto Hup = make_op1(Kind1::longitudinal_hamiltonian, q, k + 1.0, l + 1);
            const auto Hdn = make_op1(Kind1::longitudinal_hamiltonian, q, k + 1.0, l - 1);
            out.push_back({"raising route" + tag,
                           {{1.0, {A, Hl}}},
                           {{1.0, {Hup, A}}, {2.0 * q2 * k, {A}}}});
            out.push_back({"lowering route" + tag,
                           {{1.0, {At, Hl}}},
                           {{1.0, {Hdn, At}}, {2.0 * q2 * k, {At}}}});
        } else if (id == IdentityId::factorization) {
            const auto Adn = make_op1(Kind1::ladder_up, q, k - 1.0, l - 1);
            const auto Atup = make_op1(Kind1::ladder_down, q, k - 1.0, l + 1);
            out.push_back({"A^T A route" + tag,
                           {{1.0, {adjoint(A), A}}, {factor_const(q, k, l), {}}},
                           {{1.0, {Hl}}}});
            out.push_back({"A A^T route" + tag,
                           {{1.0, {Adn, adjoint(Adn)}}, {factor_const(q, k, l - 2), {}}},
                           {{1.0, {Hl}}}});
            out.push_back({"At^T At route" + tag,
                           {{1.0, {adjoint(At), At}}, {factor_const_tilde(q, k, l), {}}},
                           {{1.0, {Hl}}}});
            out.push_back({"At At^T route" + tag,
                           {{1.0, {Atup, adjoint(Atup)}}, {factor_const_tilde(q, k, l + 2), {}}},
                           {{1.0, {Hl}}}});
        }
    }
    if (out.empty()) throw std::logic_error("checks1_for: identity is two-dimensional");
    return out;
}

Field2 chain_field2(const Chain2& c, Field2 f) {
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) f = it->applied(f);
    const double s = c.scale;
    return [f, s](double x, double y, int ord) { return s * f(x, y, ord); };
}

Field1 chain_field1(const Chain1& c, Field1 f) {
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) f = it->applied(f);
    const double s = c.scale;
    return [f, s](double x, int ord) {
        Jet1 j = f(x, ord);
        return s * j;
    };
}

GridFn chain_grid2(const Chain2& c, GridFn f) {
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) f = apply_grid(*it, f);
    for (double& v : f.v) v *= c.scale;
    return f;
}

GridFn1 chain_grid1(const Chain1& c, GridFn1 f) {
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) f = apply_grid1(*it, f);
    for (double& v : f.v) v *= c.scale;
    return f;
}

struct Residual {
    double rel_sup = 0.0;
    double rel_l2 = 0.0;
};

// Relative residual of sum(pos) - sum(neg) over a set of point samples.
Residual merge(double sup_d, double sum_d2, double sup_s, double sum_s2) {
    Residual r;
    const double floor_sup = std::max(sup_s, 1e-12);
    const double floor_l2 = std::max(std::sqrt(sum_s2), 1e-12);
    r.rel_sup = sup_d / floor_sup;
    r.rel_l2 = std::sqrt(sum_d2) / floor_l2;
    return r;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

struct SampleBox {
    std::vector<double> xs, ys;
};

// Sample window kept away from the singular half-line x = 0 and, on the far
// side, from coefficient magnitudes (cosh^4) that would amplify roundoff in
// composed applications beyond the analytic tolerance.
SampleBox analytic_box(const model::Params& p) {
    SampleBox b;
    b.xs = linspace(0.05 / p.q, 3.2 / p.q, 18);
    b.ys = linspace(-0.9 * p.y_half_width(), 0.9 * p.y_half_width(), 13);
    return b;
}

double section_y(const model::Params& p) { return 0.37 * p.y_half_width(); }

// x-profile of a separable probe at fixed y, as a univariate jet function.
Fun1 sep_section(const SepSum& s, double ystar) {
    return [s, ystar](double x) {
        Jet1 acc = jet_const(0.0);
        for (const auto& t : s.terms()) acc = acc + (t.w * t.fy(ystar).d[0]) * t.fx(x);
        return acc;
    };
}

Residual run2_analytic(const std::vector<Check2>& checks, const SepSum& probe,
                       const SampleBox& box) {
    Residual worst;
    const Field2 src = as_field(probe);
    for (const auto& ck : checks) {
        std::vector<Field2> pf, nf;
        for (const auto& c : ck.pos) pf.push_back(chain_field2(c, src));
        for (const auto& c : ck.neg) nf.push_back(chain_field2(c, src));
        double sup_d = 0, sum_d2 = 0, sup_s = 0, sum_s2 = 0;
        for (double x : box.xs)
            for (double y : box.ys) {
                double lp = 0, ln = 0;
                for (const auto& f : pf) lp += f(x, y, 0).value();
                for (const auto& f : nf) ln += f(x, y, 0).value();
                const double d = lp - ln;
                sup_d = std::max(sup_d, std::abs(d));
                sup_s = std::max({sup_s, std::abs(lp), std::abs(ln)});
                sum_d2 += d * d;
                sum_s2 += 0.5 * (lp * lp + ln * ln);
            }
        const Residual r = merge(sup_d, sum_d2, sup_s, sum_s2);
        worst.rel_sup = std::max(worst.rel_sup, r.rel_sup);
        worst.rel_l2 = std::max(worst.rel_l2, r.rel_l2);
    }
    return worst;
}

Residual run1_analytic(const std::vector<Check1>& checks, const Fun1& probe,
                       const std::vector<double>& xs) {
    Residual worst;
    const Field1 src = as_field1(probe);
    for (const auto& ck : checks) {
        std::vector<Field1> pf, nf;
        for (const auto& c : ck.pos) pf.push_back(chain_field1(c, src));
        for (const auto& c : ck.neg) nf.push_back(chain_field1(c, src));
        double sup_d = 0, sum_d2 = 0, sup_s = 0, sum_s2 = 0;
        for (double x : xs) {
            double lp = 0, ln = 0;
            for (const auto& f : pf) lp += f(x, 0).value();
            for (const auto& f : nf) ln += f(x, 0).value();
            const double d = lp - ln;
            sup_d = std::max(sup_d, std::abs(d));
            sup_s = std::max({sup_s, std::abs(lp), std::abs(ln)});
            sum_d2 += d * d;
            sum_s2 += 0.5 * (lp * lp + ln * ln);
        }
        const Residual r = merge(sup_d, sum_d2, sup_s, sum_s2);
        worst.rel_sup = std::max(worst.rel_sup, r.rel_sup);
        worst.rel_l2 = std::max(worst.rel_l2, r.rel_l2);
    }
    return worst;
}

Residual run2_grid(const std::vector<Check2>& checks, const GridFn& probe) {
    Residual worst;
    for (const auto& ck : checks) {
        GridFn lp{probe.g, std::vector<double>(probe.v.size(), 0.0)};
        GridFn ln = lp;
        for (const auto& c : ck.pos) {
            const GridFn t = chain_grid2(c, probe);
            for (size_t m = 0; m < lp.v.size(); ++m) lp.v[m] += t.v[m];
        }
        for (const auto& c : ck.neg) {
            const GridFn t = chain_grid2(c, probe);
            for (size_t m = 0; m < ln.v.size(); ++m) ln.v[m] += t.v[m];
        }
        double sup_d = 0, sum_d2 = 0, sup_s = 0, sum_s2 = 0;
        for (size_t m = 0; m < lp.v.size(); ++m) {
            const double d = lp.v[m] - ln.v[m];
            sup_d = std::max(sup_d, std::abs(d));
            sup_s = std::max({sup_s, std::abs(lp.v[m]), std::abs(ln.v[m])});
            sum_d2 += d * d;
            sum_s2 += 0.5 * (lp.v[m] * lp.v[m] + ln.v[m] * ln.v[m]);
        }
        const Residual r = merge(sup_d, sum_d2, sup_s, sum_s2);
        worst.rel_sup = std::max(worst.rel_sup, r.rel_sup);
        worst.rel_l2 = std::max(worst.rel_l2, r.rel_l2);
    }
    return worst;
}

Residual run1_grid(const std::vector<Check1>& checks, const GridFn1& probe) {
    Residual worst;
    for (const auto& ck : checks) {
        GridFn1 lp{probe.g, std::vector<double>(probe.v.size(), 0.0)};
        GridFn1 ln = lp;
        for (const auto& c : ck.pos) {
            const GridFn1 t = chain_grid1(c, probe);
            for (size_t m = 0; m < lp.v.size(); ++m) lp.v[m] += t.v[m];
        }
        for (const auto& c : ck.neg) {
            const GridFn1 t = chain_grid1(c, probe);
            for (size_t m = 0; m < ln.v.size(); ++m) ln.v[m] += t.v[m];
        }
        double sup_d = 0, sum_d2 = 0, sup_s = 0, sum_s2 = 0;
        for (size_t m = 0; m < lp.v.size(); ++m) {
            const double d = lp.v[m] - ln.v[m];
            sup_d = std::max(sup_d, std::abs(d));
            sup_s = std::max({sup_s, std::abs(lp.v[m]), std::abs(ln.v[m])});
            sum_d2 += d * d;
            sum_s2 += 0.5 * (lp.v[m] * lp.v[m] + ln.v[m] * ln.v[m]);
        }
        const Residual r = merge(sup_d, sum_d2, sup_s, sum_s2);
        worst.rel_sup = std::max(worst.rel_sup, r.rel_sup);
        worst.rel_l2 = std::max(worst.rel_l2, r.rel_l2);
    }
    return worst;
}

std::string identity_note(IdentityId id) {
    switch (id) {
        case IdentityId::commute_HR:
            return "covers [H,R] and the partner pair [H1,R1]";
        case IdentityId::R_definition:
            return "covers R = etaT eta and R1 = eta etaT";
        case IdentityId::intertwine_1d:
            return "both ladder directions, l = 0..2";
        case IdentityId::factorization:
            return "four factorization routes, l = 0..2";
        case IdentityId::superalgebra:
            return "anticommutator {Q+,Q-} equals diag(R,R1), not zero; "
                   "{Q+,Q+} and {Q-,Q-} vanish structurally";
        default:
            return "";
    }
}

Report make_report(IdentityId id, const std::string& probe, const std::string& path,
                   const Residual& r, double tol) {
    Report rep;
    rep.identity = identity_name(id);
    rep.probe = probe;
    rep.path = path;
    rep.residual_sup = r.rel_sup;
    rep.residual_l2 = r.rel_l2;
    rep.tol = tol;
    rep.pass = (r.rel_sup <= tol) && (r.rel_l2 <= tol);
    rep.note = identity_note(id);
    return rep;
}

}  // namespace

Report verify_identity(IdentityId id, const model::Params& p, const SepSum& probe) {
    p.validate();
    const SampleBox box = analytic_box(p);
    Residual r;
    if (is_one_dimensional(id)) {
        const Fun1 sec = sep_section(probe, section_y(p));
        r = run1_analytic(checks1_for(id, p.q, p.k), sec, box.xs);
    } else {
        r = run2_analytic(checks2_for(id, p.q, p.k, p.v0), probe, box);
    }
    return make_report(id, probe.label(), "analytic", r, kAnalyticTol);
}

Report verify_identity(IdentityId id, const model::Params& p, const GridFn& probe) {
    p.validate();
    Residual r;
    if (is_one_dimensional(id)) {
        const int jmid = probe.g.ny / 2;
        GridFn1 sec{Grid1D::make(probe.g.xmax, probe.g.nx),
                    std::vector<double>(static_cast<size_t>(probe.g.nx))};
        for (int i = 0; i < probe.g.nx; ++i) sec.v[i] = probe.at(i, jmid);
        r = run1_grid(checks1_for(id, p.q, p.k), sec);
    } else {
        r = run2_grid(checks2_for(id, p.q, p.k, p.v0), probe);
    }
    return make_report(id, "grid bump", "grid", r, kGridTol);
}

std::vector<SepSum> analytic_probes(const model::Params& p) {
    const double q = p.q;
    std::vector<SepSum> probes;
    probes.push_back(model::psi(p, 1, 2));
    probes.push_back(sep1("gauss ridge",
                          [q](double x) {
                              Jet1 u = q * jet_var(x) - 1.2;
                              return jet_exp(-1.0 * (u * u));
                          },
                          [q](double y) { return jet_cos(0.7 * q * jet_var(y)); }));
    probes.push_back(SepSum("poly decay",
                            {SepTerm{[q](double x) {
                                         Jet1 u = q * jet_var(x);
                                         return (u * u) * jet_exp(-1.0 * u);
                                     },
                                     fy_sin(q), 1.0},
                             SepTerm{[q](double x) {
                                         Jet1 u = q * jet_var(x);
                                         return (u * u) * jet_exp(-1.0 * u);
                                     },
                                     f_const(1.0), 0.4}}));
    return probes;
}

Grid2D probe_grid(const model::Params& p) { return Grid2D::make(p, 768, 640, 3.6 / p.q); }

namespace {

double bump(double u) {
    if (std::abs(u) >= 1.0) return 0.0;
    const double w = 1.0 - u * u;
    const double w2 = w * w;
    return w2 * w2 * w2 * w2;  // (1-u^2)^8, seven continuous derivatives
}

}  // namespace

std::vector<GridFn> grid_probes(const model::Params& p) {
    const double q = p.q;
    const double yb = p.y_half_width();
    const Grid2D g = probe_grid(p);
    std::vector<GridFn> probes;
    probes.push_back(sample(g, [q, yb](double x, double y) {
        return bump((x - 1.6 / q) / (1.25 / q)) * bump(y / (0.62 * yb));
    }));
    probes.push_back(sample(g, [q, yb](double x, double y) {
        return bump((x - 2.0 / q) / (1.3 / q)) * bump((y - 0.25 * yb) / (0.5 * yb)) *
               (1.0 + 0.3 * std::sin(2.0 * q * x) * std::cos(q * y));
    }));
    probes.push_back(sample(g, [q, yb](double x, double y) {
        return bump((x - 1.2 / q) / (0.9 / q)) * bump((y + 0.2 * yb) / (0.55 * yb)) *
               std::cos(1.5 * q * x);
    }));
    return probes;
}

std::vector<Report> verify_suite(IdentityId id, const model::Params& p) {
    std::vector<Report> out;
    const auto aprobes = analytic_probes(p);
    for (size_t i = 0; i < aprobes.size(); ++i) {
        Report r = verify_identity(id, p, aprobes[i]);
        if (r.probe.empty()) r.probe = "analytic probe " + std::to_string(i);
        out.push_back(std::move(r));
    }
    const auto gprobes = grid_probes(p);
    for (size_t i = 0; i < gprobes.size(); ++i) {
        Report r = verify_identity(id, p, gprobes[i]);
        r.probe = "grid bump " + std::to_string(i);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Report> verify_all(const model::Params& p) {
    std::vector<Report> out;
    for (IdentityId id : all_identities()) {
        auto part = verify_suite(id, p);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace pdm::op
