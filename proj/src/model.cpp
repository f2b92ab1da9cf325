#include "pdm/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pdm/coeffs.hpp"
#include "pdm/special.hpp"

namespace pdm::model {

void Params::validate() const {
    if (!(q > 0.0)) throw std::domain_error("Params: requires q > 0");
    if (!(k > 0.0)) throw std::domain_error("Params: requires k > 0");
    if (!std::isfinite(v0)) throw std::domain_error("Params: v0 must be finite");
}

double Params::y_half_width() const { return 0.5 * std::numbers::pi / q; }

bool in_domain(const Params& p, double x, double y, double tol) {
    const double yb = p.y_half_width();
    return x >= 0.0 && std::abs(y) <= yb * (1.0 + tol);
}

double energy_level(const Params& p, int N) {
    p.validate();
    if (N < 0) throw std::domain_error("energy_level: negative level");
    return p.q * p.q * ((N + 2.0) * (N + 2.0 * p.k + 1.0) + p.v0);
}

int degeneracy(int N) {
    if (N < 0) throw std::domain_error("degeneracy: negative level");
    return N / 2 + 1;
}

double energy(const Params& p, int n, int l) {
    if (n < 0 || l < 0) throw std::domain_error("energy: negative quantum numbers");
    return energy_level(p, 2 * n + l);
}

namespace {

void check_nl(int n, int l) {
    if (n < 0 || l < 0) throw std::domain_error("state builder: negative quantum numbers");
}

Fun1 unit_factor() {
    return [](double) { return jet_const(1.0); };
}

// transverse factor sqrt(2q/pi) * cos((l+1)qy) (even l) or sin (odd l)
Fun1 chi_factor(double q, int l) {
    const double norm = std::sqrt(2.0 * q / std::numbers::pi);
    const double freq = (l + 1.0) * q;
    if (l % 2 == 0)
        return [norm, freq](double y) { return norm * jet_cos(freq * jet_var(y)); };
    return [norm, freq](double y) { return norm * jet_sin(freq * jet_var(y)); };
}

// longitudinal factor: norm * tanh^k * sech^{l+2} * P_n^(k-1/2, l+1)(1 - 2 tanh^2)
Fun1 phi_factor(double q, double k, int n, int l) {
    const double lognorm2 = std::log(2.0 * q * (2.0 * n + k + l + 1.5)) +
                            special::log_factorial(n) + special::log_gamma(n + k + l + 1.5) -
                            special::log_gamma(n + k + 0.5) - special::log_gamma(n + l + 2.0);
    const double norm = std::exp(0.5 * lognorm2);
    return [q, k, n, l, norm](double x) {
        const Jet1 t = jet_tanh(q * jet_var(x));
        const Jet1 s = jet_sech(q * jet_var(x));
        const Jet1 z = 1.0 - 2.0 * (t * t);
        return norm * jet_pow(t, k) * jet_pow(s, l + 2.0) *
               special::jacobi_jet(n, k - 0.5, l + 1.0, z);
    };
}

Fun1 omega_x_factor(double q, double k, double s) {
    return [q, k, s](double x) {
        return jet_pow(jet_tanh(q * jet_var(x)), k) * jet_pow(jet_sech(q * jet_var(x)), s + 1.0);
    };
}

Fun1 omega_y_factor(double q, double s) {
    return [q, s](double y) { return jet_pow(jet_cos(q * jet_var(y)), s); };
}

}  // namespace

SepSum chi(const Params& p, int l) {
    p.validate();
    check_nl(0, l);
    return SepSum("chi[l=" + std::to_string(l) + "]", {{unit_factor(), chi_factor(p.q, l), 1.0}});
}

SepSum phi(const Params& p, int n, int l) {
    p.validate();
    check_nl(n, l);
    return SepSum("phi[n=" + std::to_string(n) + ",l=" + std::to_string(l) + "]",
                  {{phi_factor(p.q, p.k, n, l), unit_factor(), 1.0}});
}

SepSum psi(const Params& p, int n, int l) {
    p.validate();
    check_nl(n, l);
    return SepSum("psi[n=" + std::to_string(n) + ",l=" + std::to_string(l) + "]",
                  {{phi_factor(p.q, p.k, n, l), chi_factor(p.q, l), 1.0}});
}

SepSum zero_mode(const Params& p, double s) {
    p.validate();
    if (s < 0.0) throw std::domain_error("zero_mode: requires s >= 0");
    return SepSum("omega[s=" + std::to_string(s) + "]",
                  {{omega_x_factor(p.q, p.k, s), omega_y_factor(p.q, s), 1.0}});
}

SepSum susy_state(const Params& p, int N, int N0) {
    p.validate();
    const auto row = coeffs::Z_row(p.k, N, N0);
    std::vector<std::pair<double, SepSum>> parts;
    for (int n = 0; n <= N / 2; ++n)
        if (row[n] != 0.0) parts.emplace_back(row[n], psi(p, n, N - 2 * n));
    return SepSum::combine("Psi[N=" + std::to_string(N) + ",N0=" + std::to_string(N0) + "]", parts);
}

SepSum susy_ground_raw(const Params& p, int N0) {
    p.validate();
    const auto a = coeffs::a_coeffs(p.k, N0);
    std::vector<std::pair<double, SepSum>> parts;
    for (std::size_t i = 0; i < a.size(); ++i)
        parts.emplace_back(a[i], zero_mode(p, 2.0 * static_cast<double>(i) + 1.0));
    return SepSum::combine("Psi_raw[N0=" + std::to_string(N0) + "]", parts);
}

double pt_z(const Params& p, double x) {
    p.validate();
    return 2.0 * std::atan(std::exp(p.q * x)) - 0.5 * std::numbers::pi;
}

PtMap pt_map(const Params& p, int n, int l) {
    p.validate();
    check_nl(n, l);
    PtMap m;
    m.kappa = p.k;
    m.lambda = l + 1.5;
    const double s = m.kappa + m.lambda + 2.0 * n;
    m.pt_energy = s * s;
    return m;
}

double energy_from_pt(const Params& p, double pt_eig) {
    p.validate();
    const double km = p.k - 0.5;
    return p.q * p.q * (pt_eig - km * km + p.v0);
}

namespace {

Eval1 to_eval1(const Jet1& j) { return {j.d[0], j.d[1], j.d[2]}; }

Eval2 to_eval2(const Jet2& j) {
    return {j.value(), j.dx(), j.dy(), j.dxx(), j.dxy(), j.dyy()};
}

void require_closure(const Params& p, double x, double y) {
    if (!in_domain(p, x, y))
        throw std::domain_error("evaluation point outside the closed domain");
}

bool on_edge(const Params& p, double x, double y) {
    return x == 0.0 || std::abs(y) >= p.y_half_width();
}

}  // namespace

Eval1 eval_chi(const Params& p, int l, double y) {
    p.validate();
    check_nl(0, l);
    if (std::abs(y) > p.y_half_width() * (1.0 + 1e-12))
        throw std::domain_error("eval_chi: y outside the transverse interval");
    return to_eval1(chi_factor(p.q, l)(y));
}

Eval1 eval_phi(const Params& p, int n, int l, double x) {
    p.validate();
    check_nl(n, l);
    if (x < 0.0) throw std::domain_error("eval_phi: requires x >= 0");
    if (x == 0.0) return {};  // limit value; derivatives are not reported at the edge
    return to_eval1(phi_factor(p.q, p.k, n, l)(x));
}

Eval2 eval_psi(const Params& p, int n, int l, double x, double y) {
    p.validate();
    check_nl(n, l);
    require_closure(p, x, y);
    if (on_edge(p, x, y)) return {};
    return to_eval2(psi(p, n, l).jet(x, y));
}

Eval2 eval_zero_mode(const Params& p, double s, double x, double y) {
    p.validate();
    require_closure(p, x, y);
    if (on_edge(p, x, y)) return {};
    return to_eval2(zero_mode(p, s).jet(x, y));
}

Eval2 eval_susy(const Params& p, int N, int N0, double x, double y) {
    p.validate();
    require_closure(p, x, y);
    if (on_edge(p, x, y)) return {};
    return to_eval2(susy_state(p, N, N0).jet(x, y));
}

}  // namespace pdm::model
