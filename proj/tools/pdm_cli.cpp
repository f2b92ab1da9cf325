// Command-line front end: spectra, wavefunction grids, zero modes, basis
// transforms, verification suites, oracle comparisons, mass-class reports.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 numerical
// failure.  All file outputs are written atomically and only on success.

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdm/coeffs.hpp"
#include "pdm/io.hpp"
#include "pdm/massgen.hpp"
#include "pdm/model.hpp"
#include "pdm/operators.hpp"
#include "pdm/oracle.hpp"

namespace {

using nlohmann::ordered_json;
using pdm::io::csv_num;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

pdm::model::Params checked_params(double q, double k, double v0) {
    pdm::model::Params p{q, k, v0};
    try {
        p.validate();
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return p;
}

void emit(const std::string& content, const std::string& path) {
    if (path.empty())
        std::cout << content;
    else
        pdm::io::write_file_atomic(path, content);
}

std::string int_cell(long long v) { return std::to_string(v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ordered_json params_json(const pdm::model::Params& p) {
    return ordered_json{{"q", p.q}, {"k", p.k}, {"v0", p.v0}};
}

// ---------------------------------------------------------------------------
// spectrum

int run_spectrum(double q, double k, double v0, int nmax, const std::string& out) {
    auto p = checked_params(q, k, v0);
    if (nmax < 0) throw UsageError("spectrum: nmax must be nonnegative");
    pdm::io::CsvTable t;
    t.header = {"N", "energy", "degeneracy"};
    for (int N = 0; N <= nmax; ++N)
        t.rows.push_back({int_cell(N), csv_num(pdm::model::energy_level(p, N)),
                          int_cell(pdm::model::degeneracy(N))});
    emit(pdm::io::to_csv(t), out);
    return 0;
}

// ---------------------------------------------------------------------------
// wavefunction / zero-modes

pdm::op::Grid2D export_grid(const pdm::model::Params& p, int nx, int ny, double xmax) {
    if (xmax <= 0.0) xmax = 5.0 / p.q;
    try {
        return pdm::op::Grid2D::make(p, nx, ny, xmax);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::string grid_csv(const pdm::SepSum& state, const pdm::op::Grid2D& g) {
    pdm::io::CsvTable t;
    t.header = {"x", "y", "value"};
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j)
            t.rows.push_back(
                {csv_num(g.x(i)), csv_num(g.y(j)), csv_num(state.value(g.x(i), g.y(j)))});
    return pdm::io::to_csv(t);
}

int run_wavefunction(double q, double k, double v0, const std::string& basis, int n, int l, int N,
                     int N0, int nx, int ny, double xmax, const std::string& out) {
    auto p = checked_params(q, k, v0);
    pdm::SepSum state;
    if (basis == "sep") {
        if (n < 0 || l < 0) throw UsageError("wavefunction: basis sep needs --n and --l >= 0");
        state = pdm::model::psi(p, n, l);
    } else if (basis == "susy") {
        if (N < 0 || N0 < 0) throw UsageError("wavefunction: basis susy needs --N and --N0 >= 0");
        if (N0 % 2 != 0 || N0 > N) throw UsageError("wavefunction: need even N0 <= N");
        state = pdm::model::susy_state(p, N, N0);
    } else {
        throw UsageError("wavefunction: --basis must be sep or susy");
    }
    emit(grid_csv(state, export_grid(p, nx, ny, xmax)), out);
    return 0;
}

int run_zero_modes(double q, double k, double v0, const std::vector<double>& s_list, int nx,
                   int ny, double xmax, const std::string& prefix) {
    auto p = checked_params(q, k, v0);
    if (s_list.empty()) throw UsageError("zero-modes: --s-list must not be empty");
    for (double s : s_list)
        if (s < 0) throw UsageError("zero-modes: s must be nonnegative");
    const auto g = export_grid(p, nx, ny, xmax);
    for (double s : s_list) {
        std::string tag = pdm::io::format_number(s, 12);
        for (char& c : tag)
            if (c == '.' || c == '-') c = '_';
        pdm::io::write_file_atomic(prefix + "_s" + tag + ".csv",
                                   grid_csv(pdm::model::zero_mode(p, s), g));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// basis-transform

int run_basis_transform(double k, int N, const std::string& out) {
    if (!(k > 0)) throw UsageError("basis-transform: k must be positive");
    if (N < 0) throw UsageError("basis-transform: N must be nonnegative");
    const auto T = pdm::coeffs::TransformMatrix::build(k, N);
    ordered_json j;
    j["N"] = N;
    j["k"] = k;
    ordered_json cols = ordered_json::array();
    ordered_json labels = ordered_json::array();
    for (int n = 0; n <= N / 2; ++n) {
        cols.push_back(n);
        labels.push_back("psi[n=" + std::to_string(n) + ",l=" + std::to_string(N - 2 * n) + "]");
    }
    j["column_n"] = cols;
    j["column_labels"] = labels;
    ordered_json rows = ordered_json::array();
    for (size_t r = 0; r < T.rows.size(); ++r) {
        ordered_json row;
        row["N0"] = T.row_N0[r];
        row["nu"] = N - T.row_N0[r];
        row["coefficients"] = T.rows[r];
        rows.push_back(row);
    }
    j["rows"] = rows;
    j["orthogonality_residual"] = T.orthogonality_residual();
    emit(pdm::io::dump_json(j), out);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

std::vector<pdm::op::Report> identity_reports(const std::vector<pdm::op::IdentityId>& ids,
                                                     const pdm::model::Params& p) {
    std::vector<pdm::op::Report> out;
    for (auto id : ids) {
        auto r = pdm::op::verify_suite(id, p);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

pdm::op::Report scalar_report(std::string identity, std::string probe, double residual,
                                     double tol, std::string note = "") {
    pdm::op::Report r;
    r.identity = std::move(identity);
    r.probe = std::move(probe);
    r.path = "analytic";
    r.residual_sup = residual;
    r.residual_l2 = residual;
    r.tol = tol;
    r.pass = residual <= tol;
    r.note = std::move(note);
    return r;
}

std::vector<pdm::op::Report> massgen_reports(const pdm::model::Params& p) {
    namespace mg = pdm::massgen;
    std::vector<pdm::op::Report> out;
    const double q = p.q;
    const mg::ClassConstants canonical{1.0, 0.0, 0.0, 1.0, 0.0};
    const double yb = 1.2 / q;
    struct Case {
        mg::MassClass cls;
        double x_lo, x_hi;
    };
    const Case cases[] = {{mg::MassClass::hyperbolic, 0.15 / q, 2.5 / q},
                          {mg::MassClass::rational, 0.15 / q, 2.5 / q},
                          {mg::MassClass::trigonometric, 0.1 / q, 1.35 / q}};
    for (const auto& c : cases) {
        const auto sol = mg::mass_class_solution(c.cls, canonical, q, c.x_lo, c.x_hi);
        const auto pts = mg::sample_points_box(c.x_lo, c.x_hi, -yb, yb, 100, 8311u);
        const auto rep = mg::constraint_residuals(sol, pts);
        out.push_back(scalar_report(std::string("mass_constraints[") + mg::mass_class_name(c.cls) +
                                        "]",
                                    "canonical constants, 100 seeded points", rep.max_residual,
                                    1e-10));
    }
    {
        const auto fam = mg::hyperbolic_family(q, -q * p.k, 0.0, 0.0, q * q * p.v0);
        const auto pts = mg::sample_points_box(0.2 / q, 2.4 / q, -0.7 * p.y_half_width(),
                                               0.7 * p.y_half_width(), 100, 8312u);
        const auto rep = mg::family_residuals(fam, pts);
        out.push_back(scalar_report("partner_family[hyperbolic]",
                                    "model potentials, 100 seeded points", rep.max_residual,
                                    1e-10));
    }
    {
        const double k = p.k;
        pdm::Fun1 B = [q, k](double x) {
            auto u = q * pdm::jet_var(x);
            return q * (pdm::jet_sinh(u) - k * pdm::jet_csch(u));
        };
        pdm::Fun1 M = [q](double x) {
            auto s = pdm::jet_sech(q * pdm::jet_var(x));
            return s * s;
        };
        pdm::Fun1 probe = [q](double x) {
            auto u = q * pdm::jet_var(x) - pdm::jet_const(1.2);
            return pdm::jet_exp(-1.0 * (u * u));
        };
        const auto sol = mg::one_dim_susy(B, 0.35, M);
        std::vector<double> xs;
        for (double t = 0.3; t < 2.61; t += 0.4) xs.push_back(t / q);
        out.push_back(scalar_report("one_dim_reduction", "gaussian probe, 6 points",
                                    sol.susy_residual(probe, xs), 1e-8,
                                    "invariant collapses onto the shifted hamiltonian"));
    }
    return out;
}

std::vector<pdm::op::Report> coeffs_reports(const pdm::model::Params& p) {
    namespace cf = pdm::coeffs;
    std::vector<pdm::op::Report> out;
    {
        double worst = 0;
        for (int N = 0; N <= 8; ++N)
            worst = std::max(worst, cf::TransformMatrix::build(p.k, N).orthogonality_residual());
        out.push_back(
            scalar_report("transform_orthogonality", "levels N <= 8", worst, 1e-10));
    }
    {
        double worst = 0;
        for (int N = 0; N <= 8; ++N) {
            const auto a = cf::Z_row(p.k, N, 0);
            const auto b = cf::Z_row_ground(p.k, N);
            for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
        }
        out.push_back(scalar_report("transform_ground_route", "chain vs closed row, N <= 8",
                                    worst, 1e-12));
    }
    {
        double worst = 0;
        for (int N0 = 0; N0 <= 20; N0 += 2) {
            const double a = cf::S_sum(p.k, N0), b = cf::S_sum_closed(p.k, N0);
            worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
        }
        out.push_back(scalar_report("normalization_sum", "direct vs closed, N0 <= 20", worst,
                                    1e-12));
    }
    {
        const auto c = cf::ladder_coeffs(p.q, p.k, 0, 0, cf::Ladder::lower);
        out.push_back(scalar_report("ground_annihilation", "lowering coefficients at (0,0)",
                                    std::abs(c.first) + std::abs(c.second), 0.0,
                                    "must vanish identically"));
    }
    return out;
}

int run_verify(double q, double k, double v0, const std::string& suite, const std::string& out) {
    auto p = checked_params(q, k, v0);
    namespace op = pdm::op;
    std::vector<op::Report> reports;
    if (suite == "all") {
        reports = op::verify_all(p);
        auto m = massgen_reports(p);
        reports.insert(reports.end(), m.begin(), m.end());
        auto c = coeffs_reports(p);
        reports.insert(reports.end(), c.begin(), c.end());
    } else if (suite == "intertwine") {
        reports = identity_reports({op::IdentityId::intertwine_2d,
                                    op::IdentityId::conjugate_intertwine,
                                    op::IdentityId::intertwine_1d},
                                   p);
    } else if (suite == "commute") {
        reports =
            identity_reports({op::IdentityId::commute_HR, op::IdentityId::R_definition}, p);
    } else if (suite == "susy") {
        reports = identity_reports({op::IdentityId::shape_invariance_H,
                                    op::IdentityId::shape_invariance_R,
                                    op::IdentityId::factorization, op::IdentityId::superalgebra},
                                   p);
    } else if (suite == "massgen") {
        reports = massgen_reports(p);
    } else if (suite == "coeffs") {
        reports = coeffs_reports(p);
    } else {
        throw UsageError("verify: unknown suite " + suite);
    }

    bool all_pass = true;
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        ordered_json jr;
        jr["identity"] = r.identity;
        jr["probe"] = r.probe;
        jr["path"] = r.path;
        jr["residual_sup"] = r.residual_sup;
        jr["residual_l2"] = r.residual_l2;
        jr["tolerance"] = r.tol;
        jr["pass"] = r.pass;
        jr["note"] = r.note;
        arr.push_back(jr);
    }
    ordered_json j;
    j["suite"] = suite;
    j["params"] = params_json(p);
    j["reports"] = arr;
    j["all_pass"] = all_pass;
    emit(pdm::io::dump_json(j), out);
    return all_pass ? 0 : 2;
}

// ---------------------------------------------------------------------------
// oracle

int run_oracle(double q, double k, double v0, const std::string& mode, int l, int n_grid, int nx,
               int ny, double xmax_factor, const std::string& solver, int n_eigs,
               const std::string& out, const std::string& meta_out) {
    auto p = checked_params(q, k, v0);
    if (n_eigs < 1) throw UsageError("oracle: n-eigs must be positive");
    pdm::io::CsvTable t;
    t.header = {"index", "eigenvalue", "closed_form", "relative_error"};
    ordered_json meta;
    meta["mode"] = mode;
    meta["params"] = params_json(p);

    if (mode == "pt") {
        if (l < 0) throw UsageError("oracle: l must be nonnegative");
        if (n_grid < 100) throw UsageError("oracle: n-grid must be at least 100");
        pdm::oracle::PtConfig cfg;
        cfg.n_grid = n_grid;
        cfg.n_eigs = n_eigs;
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = pdm::oracle::pt_solve(p, l, cfg);
        const double secs = seconds_since(t0);
        for (size_t i = 0; i < res.eigs.size(); ++i) {
            const double exact = std::pow(p.k + l + 1.5 + 2.0 * static_cast<double>(i), 2);
            t.rows.push_back({int_cell(static_cast<long long>(i)), csv_num(res.eigs[i]),
                              csv_num(exact),
                              csv_num(std::abs(res.eigs[i] - exact) / std::max(1.0, exact))});
        }
        meta["l"] = l;
        meta["grid"] = ordered_json{{"n_grid", n_grid}};
        meta["solver"] = "tridiagonal";
        meta["slow_convergence"] = res.slow_convergence;
        meta["note"] = res.note;
        meta["runtime_seconds"] = ordered_json{{"solve", secs}};
    } else if (mode == "2d") {
        pdm::oracle::Fd2dConfig cfg;
        cfg.nx = nx;
        cfg.ny = ny;
        cfg.xmax_factor = xmax_factor;
        cfg.n_eigs = n_eigs;
        if (solver == "dense")
            cfg.solver = pdm::oracle::Solver2D::dense;
        else if (solver == "lanczos")
            cfg.solver = pdm::oracle::Solver2D::lanczos;
        else
            throw UsageError("oracle: --solver must be dense or lanczos");
        if (nx < 16 || ny < 16) throw UsageError("oracle: grid sizes must be >= 16");
        if (!(xmax_factor > 0)) throw UsageError("oracle: xmax-factor must be positive");
        const auto res = pdm::oracle::fd_eigs_2d(p, cfg);
        std::vector<double> exact;
        for (int N = 0; static_cast<int>(exact.size()) < n_eigs; ++N)
            for (int d = 0; d < pdm::model::degeneracy(N) &&
                            static_cast<int>(exact.size()) < n_eigs;
                 ++d)
                exact.push_back(pdm::model::energy_level(p, N));
        for (size_t i = 0; i < res.eigs.size(); ++i)
            t.rows.push_back({int_cell(static_cast<long long>(i)), csv_num(res.eigs[i]),
                              csv_num(exact[i]),
                              csv_num(std::abs(res.eigs[i] - exact[i]) /
                                      std::max(1.0, std::abs(exact[i])))});
        meta["grid"] = ordered_json{{"nx", res.nx}, {"ny", res.ny}, {"hx", res.hx},
                                    {"hy", res.hy}};
        meta["xmax"] = res.xmax;
        meta["solver"] = res.solver;
        meta["n_eigs"] = n_eigs;
        meta["runtime_seconds"] =
            ordered_json{{"assemble", res.assemble_seconds}, {"solve", res.solve_seconds}};
    } else {
        throw UsageError("oracle: --mode must be pt or 2d");
    }

    emit(pdm::io::to_csv(t), out);
    if (!meta_out.empty()) pdm::io::write_file_atomic(meta_out, pdm::io::dump_json(meta));
    return 0;
}

// ---------------------------------------------------------------------------
// mass-class

int run_mass_class(double q, const std::string& cls_name, std::vector<double> constants,
                   int points, unsigned seed, double x_lo, double x_hi, double y_lo, double y_hi,
                   const std::string& out) {
    namespace mg = pdm::massgen;
    if (!(q > 0)) throw UsageError("mass-class: q must be positive");
    mg::MassClass cls;
    if (cls_name == "hyperbolic")
        cls = mg::MassClass::hyperbolic;
    else if (cls_name == "rational")
        cls = mg::MassClass::rational;
    else if (cls_name == "trigonometric")
        cls = mg::MassClass::trigonometric;
    else
        throw UsageError("mass-class: --class must be hyperbolic, rational, or trigonometric");
    if (constants.size() != 5)
        throw UsageError("mass-class: --constants needs 5 values a,b,c,d,g");
    if (points < 1) throw UsageError("mass-class: points must be positive");
    if (x_lo == 0 && x_hi == 0) {
        x_lo = 0.15 / q;
        x_hi = (cls == mg::MassClass::trigonometric) ? 1.35 / q : 2.5 / q;
    }
    if (y_lo == 0 && y_hi == 0) {
        y_lo = -1.2 / q;
        y_hi = 1.2 / q;
    }
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) throw UsageError("mass-class: empty sample box");

    const mg::ClassConstants cst{constants[0], constants[1], constants[2], constants[3],
                                 constants[4]};
    const auto sol = mg::mass_class_solution(cls, cst, q, x_lo, x_hi);
    const auto pts = mg::sample_points_box(x_lo, x_hi, y_lo, y_hi, points, seed);
    const auto rep = mg::constraint_residuals(sol, pts);

    ordered_json j;
    j["class"] = cls_name;
    j["constants"] = ordered_json{{"a", cst.a}, {"b", cst.b}, {"c", cst.c}, {"d", cst.d},
                                  {"g", cst.g}};
    j["q"] = q;
    j["separation_constant"] = sol.C();
    j["box"] = ordered_json{{"x_lo", x_lo}, {"x_hi", x_hi}, {"y_lo", y_lo}, {"y_hi", y_hi}};
    j["points"] = points;
    j["seed"] = seed;
    j["residuals"] = ordered_json{{"gradient", rep.gradient},
                                  {"laplacian", rep.laplacian},
                                  {"separation", rep.separation},
                                  {"max", rep.max_residual}};
    j["pass"] = rep.max_residual < 1e-10;
    emit(pdm::io::dump_json(j), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"position-dependent-mass model toolkit"};
    app.require_subcommand(1);

    double q = 1.0, k = 1.0, v0 = 0.0;
    int exit_code = 0;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--q", q, "length-scale parameter")->capture_default_str();
        cmd->add_option("--k", k, "deformation strength")->capture_default_str();
        cmd->add_option("--v0", v0, "energy offset")->capture_default_str();
    };

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "closed-form energy levels and degeneracies");
    int nmax = 8;
    std::string sp_out;
    add_params(sp);
    sp->add_option("--nmax", nmax, "highest level")->capture_default_str();
    sp->add_option("--output", sp_out, "CSV output path (stdout if omitted)");
    sp->callback([&] { exit_code = run_spectrum(q, k, v0, nmax, sp_out); });

    // wavefunction
    auto* wf = app.add_subcommand("wavefunction", "grid export of a basis state");
    std::string wf_basis = "sep", wf_out;
    int wf_n = -1, wf_l = -1, wf_N = -1, wf_N0 = -1, wf_nx = 64, wf_ny = 31;
    double wf_xmax = 0.0;
    add_params(wf);
    wf->add_option("--basis", wf_basis, "sep or susy")->capture_default_str();
    wf->add_option("--n", wf_n, "longitudinal quantum number (sep)");
    wf->add_option("--l", wf_l, "transverse quantum number (sep)");
    wf->add_option("--N", wf_N, "level (susy)");
    wf->add_option("--N0", wf_N0, "chain label, even (susy)");
    wf->add_option("--nx", wf_nx, "interior grid nodes in x")->capture_default_str();
    wf->add_option("--ny", wf_ny, "interior grid nodes in y")->capture_default_str();
    wf->add_option("--xmax", wf_xmax, "domain truncation (default 5/q)");
    wf->add_option("--output", wf_out, "CSV output path (stdout if omitted)");
    wf->callback([&] {
        exit_code = run_wavefunction(q, k, v0, wf_basis, wf_n, wf_l, wf_N, wf_N0, wf_nx, wf_ny,
                                     wf_xmax, wf_out);
    });

    // zero-modes
    auto* zm = app.add_subcommand("zero-modes", "grid export of the elementary zero modes");
    std::vector<double> zm_s{0.0, 1.0, 2.0};
    int zm_nx = 64, zm_ny = 31;
    double zm_xmax = 0.0;
    std::string zm_prefix = "zero_mode";
    add_params(zm);
    zm->add_option("--s-list", zm_s, "comma-separated s values")
        ->delimiter(',')
        ->capture_default_str();
    zm->add_option("--nx", zm_nx, "interior grid nodes in x")->capture_default_str();
    zm->add_option("--ny", zm_ny, "interior grid nodes in y")->capture_default_str();
    zm->add_option("--xmax", zm_xmax, "domain truncation (default 5/q)");
    zm->add_option("--output-prefix", zm_prefix, "file prefix")->capture_default_str();
    zm->callback(
        [&] { exit_code = run_zero_modes(q, k, v0, zm_s, zm_nx, zm_ny, zm_xmax, zm_prefix); });

    // basis-transform
    auto* bt = app.add_subcommand("basis-transform", "transform matrix between the two bases");
    int bt_N = 4;
    std::string bt_out;
    bt->add_option("--k", k, "deformation strength")->capture_default_str();
    bt->add_option("--N", bt_N, "level")->capture_default_str();
    bt->add_option("--output", bt_out, "JSON output path (stdout if omitted)");
    bt->callback([&] { exit_code = run_basis_transform(k, bt_N, bt_out); });

    // verify
    auto* vf = app.add_subcommand("verify", "operator and constraint verification suites");
    std::string vf_suite = "all", vf_out;
    add_params(vf);
    vf->add_option("--suite", vf_suite, "all|intertwine|commute|susy|massgen|coeffs")
        ->capture_default_str();
    vf->add_option("--output", vf_out, "JSON output path (stdout if omitted)");
    vf->callback([&] { exit_code = run_verify(q, k, v0, vf_suite, vf_out); });

    // oracle
    auto* orc = app.add_subcommand("oracle", "numerical eigenvalue comparison");
    std::string orc_mode = "2d", orc_solver = "dense", orc_out, orc_meta;
    int orc_l = 0, orc_ngrid = 2000, orc_nx = 96, orc_ny = 40, orc_neigs = 8;
    double orc_xf = 5.0;
    add_params(orc);
    orc->add_option("--mode", orc_mode, "pt or 2d")->capture_default_str();
    orc->add_option("--l", orc_l, "transverse index (pt)")->capture_default_str();
    orc->add_option("--n-grid", orc_ngrid, "1D grid cells (pt)")->capture_default_str();
    orc->add_option("--nx", orc_nx, "grid nodes in x (2d)")->capture_default_str();
    orc->add_option("--ny", orc_ny, "grid nodes in y (2d)")->capture_default_str();
    orc->add_option("--xmax-factor", orc_xf, "truncation X_max = factor/q (2d)")
        ->capture_default_str();
    orc->add_option("--solver", orc_solver, "dense or lanczos (2d)")->capture_default_str();
    orc->add_option("--n-eigs", orc_neigs, "eigenvalues requested")->capture_default_str();
    orc->add_option("--output", orc_out, "CSV output path (stdout if omitted)");
    orc->add_option("--metadata", orc_meta, "JSON metadata path");
    orc->callback([&] {
        exit_code = run_oracle(q, k, v0, orc_mode, orc_l, orc_ngrid, orc_nx, orc_ny, orc_xf,
                               orc_solver, orc_neigs, orc_out, orc_meta);
    });

    // mass-class
    auto* mc = app.add_subcommand("mass-class", "constraint report for a mass solution class");
    std::string mc_cls = "hyperbolic", mc_out;
    std::vector<double> mc_const{1.0, 0.0, 0.0, 1.0, 0.0};
    int mc_points = 100;
    unsigned mc_seed = 8311;
    double mc_xlo = 0, mc_xhi = 0, mc_ylo = 0, mc_yhi = 0;
    mc->add_option("--q", q, "length-scale parameter")->capture_default_str();
    mc->add_option("--class", mc_cls, "hyperbolic|rational|trigonometric")
        ->capture_default_str();
    mc->add_option("--constants", mc_const, "a,b,c,d,g")->delimiter(',')->capture_default_str();
    mc->add_option("--points", mc_points, "sample count")->capture_default_str();
    mc->add_option("--seed", mc_seed, "sample seed")->capture_default_str();
    mc->add_option("--x-lo", mc_xlo, "sample box (default per class)");
    mc->add_option("--x-hi", mc_xhi, "sample box (default per class)");
    mc->add_option("--y-lo", mc_ylo, "sample box (default per class)");
    mc->add_option("--y-hi", mc_yhi, "sample box (default per class)");
    mc->add_option("--output", mc_out, "JSON output path (stdout if omitted)");
    mc->callback([&] {
        exit_code = run_mass_class(q, mc_cls, mc_const, mc_points, mc_seed, mc_xlo, mc_xhi,
                                   mc_ylo, mc_yhi, mc_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: " << e.what() << "\n(run with --help for usage)\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
