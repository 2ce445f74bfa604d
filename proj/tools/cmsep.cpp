#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmsep/cmsep.hpp"

// Subcommands:
//   variational  Gaussian trial energies and virial diagnostics at one beta
//   exact        near-exact ground state at one beta
//   sweep        fig2.csv / fig3.csv over a beta grid (+ optional SVG)
//   molecules    table1.csv / fig1.csv and the 1/mass_number fit
//   report       one deterministic plain-text reproduction report
//
// Exit codes: 0 ok, 2 domain/parse error, 3 convergence error, 4 I/O error.
// All numbers print with 9 significant digits; CSV is comma-separated with
// a header row and LF endings.

namespace fs = std::filesystem;
using namespace cmsep;

namespace {

// Key/value output that renders as either `key,value` CSV lines or a JSON
// object with identical (9-digit-rounded) numbers in insertion order.
class KvReport {
public:
    void add(const std::string& key, double v) {
        rows_.emplace_back(key, format_g9(v));
        json_[key] = round_g9(v);
    }
    void add(const std::string& key, long v) {
        rows_.emplace_back(key, std::to_string(v));
        json_[key] = v;
    }
    void add(const std::string& key, const std::string& v) {
        rows_.emplace_back(key, v);
        json_[key] = v;
    }
    void print(bool as_json) const {
        if (as_json) {
            std::cout << json_.dump(2) << "\n";
            return;
        }
        std::cout << "key,value\n";
        for (const auto& [k, v] : rows_) std::cout << k << "," << v << "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
    nlohmann::ordered_json json_;
};

// Write every file or none: partially written outputs are removed on failure.
void write_files(const fs::path& dir,
                 const std::vector<std::pair<std::string, std::string>>& files) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw io_error("cannot create output directory '" + dir.string() +
                       "': " + (ec ? ec.message() : "not a directory"));
    std::vector<fs::path> written;
    try {
        for (const auto& [name, content] : files) {
            const fs::path p = dir / name;
            std::ofstream os(p, std::ios::binary | std::ios::trunc);
            if (!os) throw io_error("cannot open '" + p.string() + "' for writing");
            written.push_back(p);
            os << content;
            os.flush();
            if (!os) throw io_error("write failed for '" + p.string() + "'");
        }
    } catch (...) {
        for (const auto& p : written) {
            std::error_code rec;
            fs::remove(p, rec);
        }
        throw;
    }
}

std::string fig2_csv(const std::vector<SweepRow>& rows) {
    std::string s = "beta,w_rel,w_lab,e0_exact\n";
    for (const auto& r : rows)
        s += format_g9(r.beta) + "," + format_g9(r.w_rel) + "," +
             format_g9(r.w_lab) + "," + format_g9(r.e0) + "\n";
    return s;
}

std::string fig3_csv(const std::vector<SweepRow>& rows) {
    std::string s = "beta,beta_over_1p_beta,delta_w\n";
    for (const auto& r : rows)
        s += format_g9(r.beta) + "," + format_g9(r.beta_fraction) + "," +
             format_g9(r.delta_w) + "\n";
    return s;
}

std::string render_chart(const LineChart& chart) {
    std::ostringstream ss;
    chart.render(ss);
    return ss.str();
}

std::string fig2_svg(const std::vector<SweepRow>& rows) {
    LineChart chart("ground-state estimates vs mass ratio", "beta",
                    "dimensionless energy");
    std::vector<std::pair<double, double>> wr, wl, e0;
    for (const auto& r : rows) {
        wr.emplace_back(r.beta, r.w_rel);
        wl.emplace_back(r.beta, r.w_lab);
        e0.emplace_back(r.beta, r.e0);
    }
    chart.add_line("relative-coordinate trial", wr);
    chart.add_line("lab-frame trial", wl, /*dashed=*/true);
    chart.add_markers("numerically exact", e0);
    return render_chart(chart);
}

std::string fig3_svg(const std::vector<SweepRow>& rows) {
    LineChart chart("spurious CM energy of the lab-frame trial",
                    "beta/(1+beta)", "delta_w");
    std::vector<std::pair<double, double>> dw;
    for (const auto& r : rows) dw.emplace_back(r.beta_fraction, r.delta_w);
    chart.add_line("w_lab - w_rel", dw);
    return render_chart(chart);
}

std::string table1_csv(const std::vector<IsotopologueRecord>& records) {
    std::string s = "name,mass_number,w_reference,w_reference2,w_test,delta_w\n";
    for (const auto& r : records) {
        s += r.name + "," + std::to_string(r.mass_number) + "," +
             format_g9(r.w_reference) + ",";
        if (r.w_reference2) s += format_g9(*r.w_reference2);
        s += "," + format_g9(r.w_test) + "," + format_g9(delta_w(r)) + "\n";
    }
    return s;
}

std::vector<std::pair<double, double>>
fit_points(const std::vector<IsotopologueRecord>& records) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(records.size());
    for (const auto& r : records)
        pts.emplace_back(1.0 / r.mass_number, delta_w(r));
    return pts;
}

std::string fig1_csv(const std::vector<IsotopologueRecord>& records,
                     const RegressionFit& fit) {
    std::string s = "inv_mass_number,delta_w,fit_prediction\n";
    for (const auto& r : records) {
        const double x = 1.0 / r.mass_number;
        s += format_g9(x) + "," + format_g9(delta_w(r)) + "," +
             format_g9(fit.slope * x + fit.intercept) + "\n";
    }
    return s;
}

std::string fig1_svg(const std::vector<IsotopologueRecord>& records,
                     const RegressionFit& fit) {
    LineChart chart("CM contamination vs inverse mass number",
                    "1/mass_number", "delta_w (hartree)");
    auto pts = fit_points(records);
    double xlo = pts.front().first, xhi = pts.front().first;
    for (const auto& [x, y] : pts) {
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
    }
    chart.add_line("least-squares fit",
                   {{xlo, fit.slope * xlo + fit.intercept},
                    {xhi, fit.slope * xhi + fit.intercept}});
    chart.add_markers("molecules", pts);
    return render_chart(chart);
}

std::vector<IsotopologueRecord> load_records(const std::string& input) {
    if (input.empty()) return builtin_table();
    std::ifstream in(input, std::ios::binary);
    if (!in) throw io_error("cannot open input table '" + input + "'");
    return parse_table(in);
}

void cmd_variational(double beta, double tol, bool as_json) {
    const auto rel = minimize_rel(beta);
    const auto lab = minimize_lab(beta);
    MinimizeOptions opt;
    opt.tol = tol;
    const auto nrel = minimize_rel_numeric(beta, 1.0, opt);
    const auto nlab = minimize_lab_numeric(beta, 1.0, 1.0, opt);
    const auto vrel = virial_report(rel, 4);
    const auto vlab = virial_report(lab, 4);

    KvReport r;
    r.add("beta", beta);
    r.add("w_rel", rel.energy);
    r.add("w_lab", lab.energy);
    r.add("rel_width_a", rel.trial.a);
    r.add("lab_width_a", lab.trial.a);
    r.add("lab_width_b", lab.trial.b);
    r.add("rel_t_cm", rel.decomposition.t_cm);
    r.add("rel_t_rel", rel.decomposition.t_rel);
    r.add("rel_v", rel.decomposition.v);
    r.add("lab_t_cm", lab.decomposition.t_cm);
    r.add("lab_t_rel", lab.decomposition.t_rel);
    r.add("lab_v", lab.decomposition.v);
    r.add("rel_virial_total", vrel.total_residual);
    r.add("rel_virial_relative_only", vrel.relative_only_residual);
    r.add("lab_virial_total", vlab.total_residual);
    r.add("lab_virial_relative_only", vlab.relative_only_residual);
    r.add("rel_numeric_gap", std::abs(rel.energy - nrel.energy));
    r.add("lab_numeric_gap", std::abs(lab.energy - nlab.energy));
    r.add("rel_numeric_sweeps", nrel.iterations);
    r.add("lab_numeric_sweeps", nlab.iterations);
    r.print(as_json);
}

void cmd_exact(double beta, double tol, bool as_json) {
    const auto gs = ground_state_energy(beta, tol);
    KvReport r;
    r.add("beta", gs.beta);
    r.add("e0", gs.energy);
    r.add("basis_size", static_cast<long>(gs.basis_size));
    r.add("residual", gs.residual);
    r.add("basis_frequency", gs.basis_frequency);
    r.add("scaling_check", gs.energy * std::pow(2.0 / (beta + 1.0), 2.0 / 3.0));
    r.print(as_json);
}

void cmd_sweep(int grid_points, double tol, const std::string& out_dir,
               bool emit_plots, bool as_json) {
    if (grid_points < 2)
        throw std::domain_error("grid-points must be >= 2");
    const auto rows = sweep_figures(default_beta_grid(grid_points), tol);
    std::vector<std::pair<std::string, std::string>> files{
        {"fig2.csv", fig2_csv(rows)}, {"fig3.csv", fig3_csv(rows)}};
    std::string names = "fig2.csv fig3.csv";
    if (emit_plots) {
        files.emplace_back("fig2.svg", fig2_svg(rows));
        files.emplace_back("fig3.svg", fig3_svg(rows));
        names += " fig2.svg fig3.svg";
    }
    write_files(out_dir, files);
    KvReport r;
    r.add("rows", static_cast<long>(rows.size()));
    r.add("output_dir", out_dir);
    r.add("files", names);
    r.print(as_json);
}

void cmd_molecules(const std::string& input, const std::string& out_dir,
                   bool emit_plots, bool as_json) {
    const auto records = load_records(input);
    if (records.size() < 2)
        throw std::domain_error("need at least 2 records to fit");
    const auto fit = fit_linear(fit_points(records));
    std::vector<std::pair<std::string, std::string>> files{
        {"table1.csv", table1_csv(records)}, {"fig1.csv", fig1_csv(records, fit)}};
    std::string names = "table1.csv fig1.csv";
    if (emit_plots) {
        files.emplace_back("fig1.svg", fig1_svg(records, fit));
        names += " fig1.svg";
    }
    write_files(out_dir, files);
    KvReport r;
    r.add("records", static_cast<long>(records.size()));
    r.add("slope", fit.slope);
    r.add("intercept", fit.intercept);
    r.add("r_squared", fit.r_squared);
    r.add("output_dir", out_dir);
    r.add("files", names);
    r.print(as_json);
}

std::string build_report(double tol, int grid_points) {
    char buf[256];
    std::string s;
    auto line = [&](const char* fmt, auto... args) {
        if constexpr (sizeof...(args) == 0) {
            s += fmt;
        } else {
            std::snprintf(buf, sizeof buf, fmt, args...);
            s += buf;
        }
        s += "\n";
    };

    s += "center-of-mass separation: reproduction report\n";
    s += "===============================================\n\n";

    const auto records = builtin_table();
    const auto fit = fit_linear(fit_points(records));
    s += "molecular table (hartree)\n";
    line("%-6s %-12s %-15s %-12s %-12s", "name", "mass_number", "w_reference",
         "w_test", "delta_w");
    for (const auto& r : records)
        line("%-6s %-12d %-15s %-12s %-12s", r.name.c_str(), r.mass_number,
             format_g9(r.w_reference).c_str(), format_g9(r.w_test).c_str(),
             format_g9(delta_w(r)).c_str());
    line("fit of delta_w vs 1/mass_number over %d records:",
         static_cast<int>(records.size()));
    line("  slope     %s", format_g9(fit.slope).c_str());
    line("  intercept %s", format_g9(fit.intercept).c_str());
    line("  r_squared %s", format_g9(fit.r_squared).c_str());
    s += "\n";

    const auto rel = minimize_rel(1.0);
    const auto lab = minimize_lab(1.0);
    const auto gs = ground_state_energy(1.0, tol);
    const auto vrel = virial_report(rel, 4);
    const auto vlab = virial_report(lab, 4);
    s += "toy model at beta = 1\n";
    line("  w_rel %s  (optimal width a %s)", format_g9(rel.energy).c_str(),
         format_g9(rel.trial.a).c_str());
    line("  w_lab %s  (optimal widths a %s, b %s)", format_g9(lab.energy).c_str(),
         format_g9(lab.trial.a).c_str(), format_g9(lab.trial.b).c_str());
    line("  e0    %s  (basis %d, residual %s)", format_g9(gs.energy).c_str(),
         gs.basis_size, format_g9(gs.residual).c_str());
    line("  lab decomposition: t_cm %s  t_rel %s  v %s",
         format_g9(lab.decomposition.t_cm).c_str(),
         format_g9(lab.decomposition.t_rel).c_str(),
         format_g9(lab.decomposition.v).c_str());
    line("  virial residuals (degree 4):");
    line("    relative trial: total %s  relative_only %s",
         format_g9(vrel.total_residual).c_str(),
         format_g9(vrel.relative_only_residual).c_str());
    line("    lab trial:      total %s  relative_only %s",
         format_g9(vlab.total_residual).c_str(),
         format_g9(vlab.relative_only_residual).c_str());
    s += "\n";

    const auto rows = sweep_figures(default_beta_grid(grid_points), tol);
    int ordered = 0;
    double min_lab_rel = std::numeric_limits<double>::infinity();
    double min_rel_e0 = std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
        if (r.w_lab > r.w_rel && r.w_rel > r.e0) ++ordered;
        min_lab_rel = std::min(min_lab_rel, r.w_lab - r.w_rel);
        min_rel_e0 = std::min(min_rel_e0, r.w_rel - r.e0);
    }
    s += "ordering check over the beta grid\n";
    line("  w_lab > w_rel > e0: passed %d/%d", ordered,
         static_cast<int>(rows.size()));
    line("  min margin w_lab - w_rel: %s", format_g9(min_lab_rel).c_str());
    line("  min margin w_rel - e0:    %s", format_g9(min_rel_e0).c_str());
    s += "\n";

    std::vector<std::pair<double, double>> toy_pts;
    for (double b : uniform_grid(0.2, 1.0, 50))
        toy_pts.emplace_back(b / (1.0 + b), toy_delta_w(b));
    const auto toy_fit = fit_linear(toy_pts);
    s += "linearity of delta_w vs beta/(1+beta), 50 points with beta in [0.2, 1]\n";
    line("  slope     %s", format_g9(toy_fit.slope).c_str());
    line("  intercept %s", format_g9(toy_fit.intercept).c_str());
    line("  r_squared %s", format_g9(toy_fit.r_squared).c_str());
    return s;
}

void cmd_report(double tol, int grid_points, const std::string& out_dir,
                bool as_json) {
    if (grid_points < 2)
        throw std::domain_error("grid-points must be >= 2");
    const std::string report = build_report(tol, grid_points);
    write_files(out_dir, {{"report.txt", report}});
    KvReport r;
    r.add("output_dir", out_dir);
    r.add("files", std::string("report.txt"));
    r.print(as_json);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-particle quartic oscillator: the cost of skipping "
                 "center-of-mass separation"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "ini-style config file with one section per subcommand");

    struct {
        double beta = 1.0;
        double tol = 1e-9;
        std::string format = "csv";
    } v_opts, e_opts;
    struct {
        int grid_points = 50;
        double tol = 1e-9;
        std::string out_dir = ".";
        bool emit_plots = false;
        std::string format = "csv";
    } s_opts, r_opts;
    struct {
        std::string input;
        std::string out_dir = ".";
        bool emit_plots = false;
        std::string format = "csv";
    } m_opts;

    const auto format_check = CLI::IsMember({"csv", "json"});

    auto* var = app.add_subcommand(
        "variational", "Gaussian trial energies and virial diagnostics");
    var->configurable();
    var->add_option("--beta", v_opts.beta, "mass ratio m1/m2 (> 0)")->required();
    var->add_option("--tol", v_opts.tol, "numeric-minimizer gradient tolerance");
    var->add_option("--format", v_opts.format, "stdout format")->check(format_check);
    var->callback([&] {
        cmd_variational(v_opts.beta, v_opts.tol, v_opts.format == "json");
    });

    auto* exa = app.add_subcommand("exact", "near-exact ground-state energy");
    exa->configurable();
    exa->add_option("--beta", e_opts.beta, "mass ratio m1/m2 (> 0)")->required();
    exa->add_option("--tol", e_opts.tol, "basis-doubling Cauchy tolerance");
    exa->add_option("--format", e_opts.format, "stdout format")->check(format_check);
    exa->callback(
        [&] { cmd_exact(e_opts.beta, e_opts.tol, e_opts.format == "json"); });

    auto* swp = app.add_subcommand("sweep",
                                   "fig2.csv/fig3.csv over a beta grid");
    swp->configurable();
    swp->add_option("--grid-points", s_opts.grid_points,
                    "number of beta grid points (>= 2)");
    swp->add_option("--tol", s_opts.tol, "ground-state tolerance");
    swp->add_option("--output-dir", s_opts.out_dir, "output directory")
        ->envname("CMSEP_OUTPUT_DIR");
    swp->add_flag("--emit-plots", s_opts.emit_plots, "also write SVG charts");
    swp->add_option("--format", s_opts.format, "stdout format")->check(format_check);
    swp->callback([&] {
        cmd_sweep(s_opts.grid_points, s_opts.tol, s_opts.out_dir,
                  s_opts.emit_plots, s_opts.format == "json");
    });

    auto* mol = app.add_subcommand(
        "molecules", "table1.csv/fig1.csv and the 1/mass_number fit");
    mol->configurable();
    mol->add_option("--input", m_opts.input,
                    "delimited molecule table (default: built-in dataset)");
    mol->add_option("--output-dir", m_opts.out_dir, "output directory")
        ->envname("CMSEP_OUTPUT_DIR");
    mol->add_flag("--emit-plots", m_opts.emit_plots, "also write SVG chart");
    mol->add_option("--format", m_opts.format, "stdout format")->check(format_check);
    mol->callback([&] {
        cmd_molecules(m_opts.input, m_opts.out_dir, m_opts.emit_plots,
                      m_opts.format == "json");
    });

    auto* rep = app.add_subcommand("report",
                                   "single deterministic reproduction report");
    rep->configurable();
    rep->add_option("--tol", r_opts.tol, "ground-state tolerance");
    rep->add_option("--grid-points", r_opts.grid_points,
                    "beta grid size for the ordering check (>= 2)");
    rep->add_option("--output-dir", r_opts.out_dir, "output directory")
        ->envname("CMSEP_OUTPUT_DIR");
    rep->add_option("--format", r_opts.format, "stdout format")->check(format_check);
    rep->callback([&] {
        cmd_report(r_opts.tol, r_opts.grid_points, r_opts.out_dir,
                   r_opts.format == "json");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
