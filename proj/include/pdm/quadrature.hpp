#pragma once

#include <functional>
#include <vector>

#include "pdm/state.hpp"

namespace pdm::quad {

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights);

struct Rule1D {
    std::vector<double> x, w;
    double integrate(const std::function<double(double)>& f) const;
};

// `panels` equal panels on [a, b], `pts`-point Gauss-Legendre on each.
Rule1D composite_gl(double a, double b, int panels, int pts);

// Same, but the panel touching `a` is subdivided geometrically (`levels`
// halvings) so integrable endpoint singularities like x^(2k) are resolved.
Rule1D composite_gl_graded(double a, double b, int panels, int pts, int levels = 40);

// Tensor rule over the open strip (0, xmax) x (-pi/(2q), pi/(2q)).
struct DomainRule {
    Rule1D x, y;
    double integrate(const std::function<double(double, double)>& f) const;
};

DomainRule domain_rule(double q, double xmax, int panels = 64, int pts = 6);

// L2 inner product of separable sums, factorized into 1D integrals.
double inner(const DomainRule& rule, const SepSum& a, const SepSum& b);

// L2 inner product of point-evaluable fields (full tensor loop).
double inner(const DomainRule& rule, const Field2& a, const Field2& b);

}  // namespace pdm::quad
