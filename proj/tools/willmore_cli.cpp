#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "willmore/geometry.hpp"
#include "willmore/io.hpp"
#include "willmore/numeric.hpp"

using namespace willmore;
using nlohmann::json;

namespace {

struct CommonOptions {
    std::string surface;
    std::string output;
    int order = 0;  // 0 = file default
    std::string backend = "exact";
    bool summary = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_surface = true) {
    if (needs_surface) cmd->add_option("surface", opt.surface, "surface file or corpus name")->required();
    cmd->add_option("-o,--output", opt.output, "write the JSON report to this file");
    cmd->add_option("-N,--order", opt.order, "override the expansion order");
    cmd->add_option("--backend", opt.backend, "coefficient backend")->check(CLI::IsMember({"exact", "approx"}));
    cmd->add_flag("--summary", opt.summary, "print a human-readable table");
}

SurfaceModel build_model(const CommonOptions& opt, SurfaceSpec* spec_out = nullptr) {
    SurfaceSpec spec = load_surface_file(resolve_surface_path(opt.surface));
    if (opt.order > 0) spec.order = opt.order;
    if (spec_out) *spec_out = spec;
    Backend be = opt.backend == "approx" ? Backend::approx : Backend::exact;
    return weierstrass_immersion(spec.data, spec.order, be);
}

void emit(const json& report, const CommonOptions& opt) {
    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        if (!out) throw ConfigError("cannot write report to " + opt.output);
        out << report.dump(2) << "\n";
    } else if (!opt.summary) {
        std::cout << report.dump(2) << "\n";
    }
}

double vector_defect(const VectorSeries& v) {
    double worst = 0.0;
    for (const auto& s : v) worst = std::max(worst, s.max_abs_coeff());
    return worst;
}

struct CheckTable {
    json rows = json::array();
    bool all_ok = true;

    void add(const std::string& name, bool ok, double value = 0.0) {
        rows.push_back(json{{"check", name}, {"ok", ok}, {"defect", value}});
        all_ok = all_ok && ok;
    }
};

int run_verify(const CommonOptions& opt, double radius, int samples, double tolerance) {
    SurfaceSpec spec;
    SurfaceModel m = build_model(opt, &spec);
    CheckTable table;

    table.add("conformality", conformality_defect(m).is_zero_below_trunc());
    table.add("minimality", is_zero_below_trunc(m.mean));
    table.add("codazzi", is_zero_below_trunc(codazzi_defect(m)));
    table.add("liouville", liouville_defect(m).is_zero_below_trunc());

    ResidueSet r = residues(m);
    table.add("currents_closed", r.radius_independent, r.closedness_max_defect);
    bool minimal_residues = true;
    for (const auto& c : r.gamma0) minimal_residues = minimal_residues && c.is_zero();
    for (const auto& c : r.gamma1) minimal_residues = minimal_residues && c.is_zero();
    minimal_residues = minimal_residues && r.gamma2.is_zero();
    for (size_t k = 0; k < r.gamma3.size(); ++k)
        minimal_residues = minimal_residues && (r.gamma3[k] - r.flux.at(k)).is_zero();
    table.add("minimal_residue_table", minimal_residues);

    SurfaceModel inv = invert_immersion(m);
    table.add("inverted_conformality", conformality_defect(inv).is_zero_below_trunc());
    table.add("inverted_willmore", is_zero_below_trunc(willmore_residual(inv)),
              vector_defect(willmore_residual(inv)));
    CorrespondenceReport corr = correspondence_check(m);
    table.add("residue_correspondence", corr.ok, corr.max_difference);
    FormReport q = bryant_quartic(inv);
    table.add("inverted_quartic_vanishes", q.form.scalar().is_zero_below_trunc(),
              q.form.scalar().max_abs_coeff());

    Current t = noether_current(inv, CurrentKind::translation);
    auto quad = quad_residue(t, radius, samples);
    double worst = 0.0;
    for (size_t k = 0; k < quad.size(); ++k)
        worst = std::max(worst, std::abs(quad[k] - residues(inv).gamma0[k].to_complex().real()));
    table.add("quadrature_vs_symbolic", worst <= tolerance, worst);

    SurfaceModel twice = invert_immersion(inv);
    bool involution = true;
    for (size_t k = 0; k < m.phi.size(); ++k)
        involution = involution &&
                     m.phi[k].agrees_below(twice.phi[k], std::min(m.phi[k].trunc(), twice.phi[k].trunc()));
    table.add("double_inversion_identity", involution);

    json report{{"surface", spec.name}, {"order", spec.order}, {"checks", table.rows}, {"ok", table.all_ok}};
    emit(report, opt);
    if (opt.summary) {
        for (const auto& row : table.rows)
            std::cout << (row["ok"].get<bool>() ? "  [ok]   " : "  [FAIL] ") << row["check"].get<std::string>()
                      << "\n";
        std::cout << (table.all_ok ? "all checks passed" : "verification FAILED") << " for " << spec.name << "\n";
    }
    return table.all_ok ? 0 : 1;
}

json geometry_summary(const SurfaceSpec& spec, const SurfaceModel& m) {
    json j;
    j["surface"] = spec.name;
    j["order"] = spec.order;
    j["ambient"] = m.ambient_dim;
    j["kind"] = m.kind == PointKind::minimal_end      ? "minimal_end"
                : m.kind == PointKind::willmore_branch ? "willmore_branch"
                                                       : "regular";
    j["theta0"] = m.theta0;
    j["conformality_defect"] = conformality_defect(m).max_abs_coeff();
    j["mean_curvature_defect"] = vector_defect(m.mean);
    j["conformal_factor"] = to_json(conformal_factor(m));
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic toolkit for minimal surfaces, their inversions and Willmore invariants"};
    app.require_subcommand(1);

    CommonOptions opt;
    double radius = 0.5, tolerance = 1e-9;
    int samples = 256;
    std::string energy_name;

    CLI::App* cmd_build = app.add_subcommand("build", "expand the immersion and report its geometry");
    add_common(cmd_build, opt);

    CLI::App* cmd_invert = app.add_subcommand("invert", "geometry report of the inverted immersion");
    add_common(cmd_invert, opt);

    CLI::App* cmd_res = app.add_subcommand("residues", "Noether residues and flux");
    add_common(cmd_res, opt);
    cmd_res->add_flag("--inverted", "compute for the inverted immersion");

    CLI::App* cmd_forms = app.add_subcommand("forms", "quartic/cubic/octic form reports of the inversion");
    add_common(cmd_forms, opt);

    CLI::App* cmd_branch = app.add_subcommand("branch", "branch expansion and cancellation report");
    add_common(cmd_branch, opt);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the full invariant suite; nonzero exit on failure");
    add_common(cmd_verify, opt);
    cmd_verify->add_option("--radius", radius, "quadrature contour radius");
    cmd_verify->add_option("--samples", samples, "quadrature sample count");
    cmd_verify->add_option("--tolerance", tolerance, "quadrature agreement tolerance");

    CLI::App* cmd_energy = app.add_subcommand("energy", "numeric Willmore energy from closed forms");
    cmd_energy->add_option("surface", energy_name, "inverted_catenoid | inverted_enneper | round_sphere, or a corpus name")
        ->required();
    cmd_energy->add_option("-o,--output", opt.output, "write the JSON report to this file");
    cmd_energy->add_option("--samples", samples, "angular samples");
    cmd_energy->add_option("--tolerance", tolerance, "window convergence tolerance");
    cmd_energy->add_flag("--summary", opt.summary, "print a human-readable line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_build->parsed()) {
            SurfaceSpec spec;
            SurfaceModel m = build_model(opt, &spec);
            json j = geometry_summary(spec, m);
            emit(j, opt);
            if (opt.summary)
                std::cout << spec.name << ": " << j["kind"].get<std::string>() << ", theta0 " << m.theta0
                          << ", order " << spec.order << "\n";
        } else if (cmd_invert->parsed()) {
            SurfaceSpec spec;
            SurfaceModel inv = invert_immersion(build_model(opt, &spec));
            json j = geometry_summary(spec, inv);
            j["surface"] = spec.name + " (inverted)";
            emit(j, opt);
            if (opt.summary)
                std::cout << spec.name << " inverted: " << j["kind"].get<std::string>() << ", theta0 "
                          << inv.theta0 << "\n";
        } else if (cmd_res->parsed()) {
            SurfaceSpec spec;
            SurfaceModel m = build_model(opt, &spec);
            if (cmd_res->count("--inverted")) m = invert_immersion(m);
            json j = residue_report(residues(m));
            j["surface"] = spec.name;
            emit(j, opt);
            if (opt.summary) std::cout << j.dump(2) << "\n";
        } else if (cmd_forms->parsed()) {
            SurfaceSpec spec;
            SurfaceModel inv = invert_immersion(build_model(opt, &spec));
            json j;
            j["surface"] = spec.name + " (inverted)";
            j["quartic"] = form_report_json(bryant_quartic(inv));
            if (inv.ambient_dim == 3) {
                SurfaceModel padded = pad_to_r4(inv);
                j["cubic"] = form_report_json(montiel_cubic(padded));
                OcticPair oc = montiel_octic(padded);
                j["octic"] = form_report_json(oc.direct);
                j["octic_routes_agree"] = oc.agree;
            }
            emit(j, opt);
            if (opt.summary)
                std::cout << spec.name << ": quartic holomorphic = " << j["quartic"]["holomorphic"].dump()
                          << "\n";
        } else if (cmd_branch->parsed()) {
            if (opt.backend == "approx")
                throw ConfigError("branch cancellation checks need the exact backend");
            SurfaceSpec spec;
            if (opt.order > 0 && opt.order < 6)
                throw ConfigError("branch extraction needs order at least 6");
            SurfaceModel inv = invert_immersion(build_model(opt, &spec));
            BranchExpansion e = extract_expansion(inv);
            PairingReport p = cancellation_check(e);
            json j = expansion_report(e, p);
            j["surface"] = spec.name + " (inverted)";
            j["second_residue"] = second_residue(inv);
            emit(j, opt);
            if (opt.summary)
                std::cout << spec.name << ": theta0 " << e.theta0 << ", second residue "
                          << j["second_residue"].get<int>() << ", cancellations "
                          << (p.all_required_zero ? "hold" : "FAIL") << "\n";
        } else if (cmd_verify->parsed()) {
            return run_verify(opt, radius, samples, tolerance);
        } else if (cmd_energy->parsed()) {
            std::string name = energy_name;
            if (name == "catenoid") name = "inverted_catenoid";
            if (name == "enneper" || name == "enneper_end") name = "inverted_enneper";
            EnergyResult r = willmore_energy(name, samples, 0.03125, std::min(tolerance, 1e-6));
            json j{{"surface", name},
                   {"energy", r.value},
                   {"energy_over_4pi", r.value / (4.0 * M_PI)},
                   {"levels", r.levels},
                   {"converged", r.converged}};
            emit(j, opt);
            if (opt.summary)
                std::cout << name << ": W = " << r.value << " = " << r.value / (4.0 * M_PI) << " * 4pi\n";
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
