#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pdm/model.hpp"
#include "pdm/state.hpp"

namespace pdm::op {

// Second-order differential operator with separable coefficient functions,
//   c_xx f_xx + c_xy f_xy + c_yy f_yy + c_x f_x + c_y f_y + c_0 f.
// An empty SepSum marks a structurally absent slot.
struct DiffOp2 {
    std::string name;
    SepSum cxx, cxy, cyy, cx, cy, c0;

    int order() const;

    // Pointwise action on a jet; consumes `order()` derivative orders.
    Jet2 apply(double x, double y, const Jet2& f) const;

    // Lazy action on a field; composition chains request exactly the orders
    // they consume, so no symbolic simplification is ever performed.
    Field2 applied(const Field2& f) const;
};

// One-dimensional counterpart, c_xx f'' + c_x f' + c_0 f (null slot = zero).
struct DiffOp1 {
    std::string name;
    Fun1 cxx, cx, c0;

    int order() const;
    Jet1 apply(double x, const Jet1& f) const;
    Field1 applied(const Field1& f) const;
};

// Formal L2 adjoint of a first-order operator a(x) d/dx + b(x), namely
// -a d/dx - a' + b.  Throws if a second-order slot is populated.
DiffOp1 adjoint(const DiffOp1& op);

// Model operators on the strip.  The partner pair shares the kinetic part and
// shifts the centrifugal strength from k(k-1) to k(k+1); `invariant` commutes
// with the Hamiltonian and factorizes through the intertwiner.
enum class Kind2 {
    hamiltonian,          // H
    partner_hamiltonian,  // H1, intertwined partner of H
    intertwiner,          // eta, first order
    intertwiner_adjoint,  // eta^dagger
    invariant,            // R = eta^dagger eta
    partner_invariant,    // R1 = eta eta^dagger
    transverse_kinetic,   // L = -d^2/dy^2
};

// One-dimensional operators acting on the longitudinal factor at fixed l.
enum class Kind1 {
    longitudinal_hamiltonian,  // H_l, separated x-part of H minus the offset
    ladder_up,                 // raises l by one, shifts k up
    ladder_down,               // lowers l by one, shifts k up
};

// Builders take the deformation parameters explicitly so that partner
// operators at shifted k can be formed; the Params overloads are the common
// entry points.
DiffOp2 make_op2(Kind2 kind, double q, double k, double v0);
DiffOp2 build_op2(Kind2 kind, const model::Params& p);
DiffOp1 make_op1(Kind1 kind, double q, double k, int l);
DiffOp1 build_op1(Kind1 kind, const model::Params& p, int l);

// Multiplication by a constant, as a degenerate operator (order 0).
DiffOp2 scalar_op2(double c);
DiffOp1 scalar_op1(double c);

// Factorization constants: H_l = (ladder_up)^dagger (ladder_up) + c_l and the
// companion constant for the ladder_down route.
double factor_const(double q, double k, int l);        // q^2 (l+2)(l+2k+1)
double factor_const_tilde(double q, double k, int l);  // q^2 l(l-2k+1)

// ---------------------------------------------------------------------------
// Uniform interior grids on (0, xmax) x (-yb, yb); nodes exclude the walls,
// x_i = (i+1) hx with hx = xmax/(nx+1), matching a homogeneous Dirichlet
// extension by zero.
struct Grid2D {
    int nx = 0, ny = 0;
    double hx = 0, hy = 0, xmax = 0, yb = 0;

    double x(int i) const { return (i + 1) * hx; }
    double y(int j) const { return -yb + (j + 1) * hy; }
    int size() const { return nx * ny; }
    int index(int i, int j) const { return i * ny + j; }

    static Grid2D make(const model::Params& p, int nx, int ny, double xmax);
    bool same_as(const Grid2D& o) const;
};

struct GridFn {
    Grid2D g;
    std::vector<double> v;

    double at(int i, int j) const { return v[g.index(i, j)]; }
    double& at(int i, int j) { return v[g.index(i, j)]; }
};

GridFn sample(const Grid2D& g, const std::function<double(double, double)>& f);
GridFn sample(const Grid2D& g, const SepSum& s);

// Values of a separable coefficient on all nodes (factorized evaluation).
std::vector<double> tabulate(const SepSum& s, const Grid2D& g);

// Finite-difference partial derivative along axis 0 (x) or 1 (y), using
// 6-node stencils: centered in the interior, one-sided within two nodes of
// the boundary.  Requires at least 6 nodes on the axis.
GridFn derivative(const GridFn& f, int axis, int order);

// Stencil application of an operator to grid data.
GridFn apply_grid(const DiffOp2& op, const GridFn& f);

// Exact application of an operator to an analytic state, sampled on a grid.
GridFn apply_analytic(const DiffOp2& op, const Field2& f, const Grid2D& g);

// L2 inner product over the strip: composite Simpson weights on each axis,
// treating the data as extended by zero at the walls.
double grid_inner(const GridFn& a, const GridFn& b);
double grid_norm(const GridFn& a);
double grid_sup(const GridFn& a);

// One-dimensional grid machinery for the longitudinal identities.
struct Grid1D {
    int n = 0;
    double h = 0, xmax = 0;
    double x(int i) const { return (i + 1) * h; }
    static Grid1D make(double xmax, int n);
};

struct GridFn1 {
    Grid1D g;
    std::vector<double> v;
};

GridFn1 sample1(const Grid1D& g, const Fun1& f);
GridFn1 derivative1(const GridFn1& f, int order);
GridFn1 apply_grid1(const DiffOp1& op, const GridFn1& f);
double grid_sup1(const GridFn1& a);

// ---------------------------------------------------------------------------
// Operator identity residual checks.  Every identity is evaluated by applying
// both sides to probe functions, either analytically (jets, tolerance 1e-8)
// or through grid stencils (tolerance 1e-4).
enum class IdentityId {
    intertwine_2d,         // eta H = H1 eta
    conjugate_intertwine,  // H eta^dagger = eta^dagger H1
    commute_HR,            // [H, R] = 0 and [H1, R1] = 0
    R_definition,          // R = eta^dagger eta, R1 = eta eta^dagger
    shape_invariance_H,    // H1 at k equals H at k+1 plus 2 q^2 k
    shape_invariance_R,    // R1 at k equals R at k+1 plus q^2 (2k+1)
    intertwine_1d,         // ladder intertwining of the longitudinal family
    factorization,         // four-way factorization of H_l
    superalgebra,          // closure of the graded algebra of (H, H1, eta)
};

const char* identity_name(IdentityId id);
std::vector<IdentityId> all_identities();

struct Report {
    std::string identity;
    std::string probe;
    std::string path;  // "analytic" or "grid"
    double residual_sup = 0.0;
    double residual_l2 = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string note;
};

inline constexpr double kAnalyticTol = 1e-8;
inline constexpr double kGridTol = 1e-4;

Report verify_identity(IdentityId id, const model::Params& p, const SepSum& probe);
Report verify_identity(IdentityId id, const model::Params& p, const GridFn& probe);

// Standard probe sets: three smooth analytic states (one of them an exact
// eigenstate) and three compactly supported grid bumps vanishing well inside
// the walls.
std::vector<SepSum> analytic_probes(const model::Params& p);
Grid2D probe_grid(const model::Params& p);
std::vector<GridFn> grid_probes(const model::Params& p);

// Both paths, all standard probes, for one identity or for all of them.
std::vector<Report> verify_suite(IdentityId id, const model::Params& p);
std::vector<Report> verify_all(const model::Params& p);

}  // namespace pdm::op
