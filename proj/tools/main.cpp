#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nessdrag/asymptotics.hpp"
#include "nessdrag/config.hpp"
#include "nessdrag/constants.hpp"
#include "nessdrag/friction.hpp"
#include "nessdrag/orientation.hpp"
#include "nessdrag/params.hpp"
#include "nessdrag/quadrature.hpp"
#include "nessdrag/response.hpp"

namespace {

using namespace nessdrag;

std::string fmt9(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct CommonOpts {
    std::string config_path;
    double Z = -1.0, xi_a = -1.0, eta = -1.0, alpha_sp = -1.0;
    std::string dipole;
    std::string material;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--config", config_path, "key = value parameter file");
        cmd->add_option("--Z", Z, "separation z_a omega_sp / c");
        cmd->add_option("--xi-a", xi_a, "oscillator frequency omega_a / omega_sp");
        cmd->add_option("--eta", eta, "damping Gamma / omega_sp");
        cmd->add_option("--alpha-sp", alpha_sp, "coupling 3 alpha0 omega_sp^3 / (eps0 c^3)");
        cmd->add_option("--dipole", dipole, "dipole direction x,y,z (normalized)");
        cmd->add_option("--material", material, "drude | ohmic");
    }

    RunConfig resolve() const
    {
        RunConfig cfg = default_config();
        if (!config_path.empty())
            cfg = config_from_entries(read_key_values(config_path), cfg);

        std::map<std::string, std::string> overrides;
        if (Z > 0.0) overrides["Z"] = fmt9(Z);
        if (xi_a > 0.0) overrides["xi_a"] = fmt9(xi_a);
        if (eta > 0.0) overrides["eta"] = fmt9(eta);
        if (alpha_sp > 0.0) overrides["alpha_sp"] = fmt9(alpha_sp);
        if (!dipole.empty()) overrides["dipole"] = dipole;
        if (!material.empty()) overrides["material"] = material;
        if (!overrides.empty()) cfg = config_from_entries(overrides, cfg);
        return cfg;
    }
};

std::ostream& open_sink(const std::string& path, std::ofstream& file)
{
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    return file;
}

int run_sweep(const RunConfig& cfg)
{
    const auto grid = make_grid(cfg);
    const auto rows = sweep(cfg.params, cfg.model, grid);

    std::ofstream file;
    std::ostream& out = open_sink(cfg.out_path, file);

    if (cfg.format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& r : rows) {
            doc.push_back({{"V", r.V},
                           {"F_full", r.f_full},
                           {"F_lte", r.f_lte},
                           {"F_j", r.f_j},
                           {"rel_diff_lte", r.rel_diff_lte},
                           {"rel_diff_full", r.rel_diff_full},
                           {"F_asym_low", r.f_asym_low},
                           {"F_asym_high", r.f_asym_high},
                           {"err_full", r.err_full},
                           {"converged", r.converged}});
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "V,F_full,F_lte,F_j,rel_diff_lte,rel_diff_full,F_asym_low,F_asym_high,err_full\n";
        for (const auto& r : rows) {
            out << fmt9(r.V) << ',' << fmt9(r.f_full) << ',' << fmt9(r.f_lte) << ','
                << fmt9(r.f_j) << ',' << fmt9(r.rel_diff_lte) << ',' << fmt9(r.rel_diff_full)
                << ',' << fmt9(r.f_asym_low) << ',' << fmt9(r.f_asym_high) << ','
                << fmt9(r.err_full) << '\n';
        }
    }

    int bad = 0;
    for (const auto& r : rows) {
        if (!r.converged) {
            std::cerr << "non-converged row at V = " << fmt9(r.V) << "\n";
            ++bad;
        }
    }
    return bad == 0 ? 0 : 3;
}

int run_point(const RunConfig& cfg, double V)
{
    const auto ctx = make_context(cfg.params, cfg.model, V);
    std::printf("V = %s\n", fmt9(V).c_str());
    bool ok = true;
    for (const auto& mode_name : cfg.modes) {
        ForceMode mode = ForceMode::full;
        if (mode_name == "lte") mode = ForceMode::lte;
        else if (mode_name == "j") mode = ForceMode::j;
        else if (mode_name != "full")
            throw std::invalid_argument("unknown mode '" + mode_name + "'");
        const auto r = force(ctx, V, mode);
        std::printf("F_%s/F0 = %s  (err %s)\n", mode_name.c_str(), fmt9(r.f_over_f0).c_str(),
                    fmt9(r.error_estimate).c_str());
        ok = ok && r.converged;
        if (cfg.norm && mode == ForceMode::full)
            std::printf("F_full_SI = %s N\n", fmt9(to_si(*cfg.norm, r.f_over_f0)).c_str());
    }
    std::printf("F_asym_low/F0 = %s\n", fmt9(asymptotics::total_low_v(ctx, V)).c_str());
    std::printf("F_asym_high/F0 = %s\n", fmt9(asymptotics::high_v(ctx, V)).c_str());
    return ok ? 0 : 3;
}

int run_spectrum(const RunConfig& cfg, double V, double xi_min, double xi_max, int points)
{
    if (points < 2 || !(xi_min < xi_max))
        throw std::invalid_argument("spectrum: need xi_min < xi_max and points >= 2");
    const auto ctx = make_context(cfg.params, cfg.model, V);

    std::ofstream file;
    std::ostream& out = open_sink(cfg.out_path, file);
    out << "xi,S\n";
    for (int i = 0; i < points; ++i) {
        const double xi = xi_min + (xi_max - xi_min) * i / (points - 1);
        out << fmt9(xi) << ',' << fmt9(power_spectrum(ctx, xi)) << '\n';
    }
    return 0;
}

int run_asymptotics(const RunConfig& cfg, double V, bool include_shift)
{
    const auto ctx = make_context(cfg.params, cfg.model, V);
    asymptotics::LowVOptions opt;
    opt.include_shift = include_shift;
    std::printf("V = %s\n", fmt9(V).c_str());
    std::printf("lte_low_v = %s\n", fmt9(asymptotics::lte_low_v(ctx, V, opt)).c_str());
    std::printf("j_low_v = %s\n", fmt9(asymptotics::j_low_v(ctx, V, opt)).c_str());
    std::printf("total_low_v = %s\n", fmt9(asymptotics::total_low_v(ctx, V, opt)).c_str());
    opt.averaged = true;
    std::printf("total_low_v_averaged = %s\n", fmt9(asymptotics::total_low_v(ctx, V, opt)).c_str());
    std::printf("gamma_form = %s\n", fmt9(asymptotics::gamma_form(ctx, V)).c_str());
    bool underflow = false;
    const double hv = asymptotics::high_v(ctx, V, &underflow);
    std::printf("high_v = %s%s\n", fmt9(hv).c_str(), underflow ? "  (underflow)" : "");
    try {
        std::printf("crossover_V = %s\n", fmt9(asymptotics::crossover_velocity(ctx)).c_str());
    } catch (const std::domain_error& e) {
        std::printf("crossover_V = n/a (%s)\n", e.what());
    }
    return 0;
}

int run_average(int order)
{
    const double lte = sphere_average(
        [](const AngularFactors& f) { return derived_factors(f).a_lte; }, order);
    const double j = sphere_average(
        [](const AngularFactors& f) { return derived_factors(f).a_j; }, order);
    std::printf("A_lte_avg = %s  (21/20 = %s)\n", fmt9(lte).c_str(), fmt9(21.0 / 20.0).c_str());
    std::printf("A_j_avg = %s  (87/80 = %s)\n", fmt9(j).c_str(), fmt9(87.0 / 80.0).c_str());
    return 0;
}

int run_check(const RunConfig& cfg)
{
    int failures = 0;
    const auto report = [&](const char* name, bool ok) {
        std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", name);
        if (!ok) ++failures;
    };

    // Reflection reality and passivity, both materials.
    {
        bool ok = true;
        const SurfaceModel models[] = {SurfaceModel::drude(cfg.params.eta),
                                       SurfaceModel::linear_ohmic(1.0, cfg.params.eta)};
        for (const auto& m : models) {
            for (int i = 1; i <= 60; ++i) {
                const double xi = 0.05 * i;
                const auto r = reflection(m, xi);
                const auto rm = reflection(m, -xi);
                ok = ok && std::abs(rm - std::conj(r)) == 0.0;
                ok = ok && reflection_im(m, xi) > 0.0;
            }
        }
        report("reflection reality / passivity", ok);
    }

    // Kernel positivity and evenness.
    {
        bool ok = true;
        const auto f = angular_factors(cfg.params.dipole);
        for (int i = 1; i <= 100; ++i) {
            const double w = 0.5 * i;
            ok = ok && kernel_K(w, f) > 0.0;
            ok = ok && kernel_K(-w, f) == kernel_K(w, f);
        }
        report("kernel positivity / evenness", ok);
    }

    // Orientation averages against the exact fractions.
    {
        const double lte = sphere_average(
            [](const AngularFactors& f) { return derived_factors(f).a_lte; }, 32);
        const double j = sphere_average(
            [](const AngularFactors& f) { return derived_factors(f).a_j; }, 32);
        report("sphere averages 21/20 and 87/80",
               std::abs(lte - 21.0 / 20.0) < 1e-9 && std::abs(j - 87.0 / 80.0) < 1e-9);
    }

    // Static response closed form.
    {
        const auto ctx = make_context(cfg.params, cfg.model, 0.0);
        const double g0 = bigG(ctx, 0.0, false).real();
        const double expect =
            static_reflection(cfg.model) * ctx.derived.a_zero / (24.0 * constants::pi);
        report("G(0,0) closed form", std::abs(g0 - expect) < 1e-12);
    }

    // Spectrum positivity on a coarse grid at V = 1e-3.
    {
        bool ok = true;
        const auto ctx = make_context(cfg.params, cfg.model, 1e-3);
        for (int i = 0; i < 50; ++i) {
            const double xi = -0.3 + 1.5 * i / 49.0;
            ok = ok && power_spectrum(ctx, xi) >= 0.0;
        }
        report("power spectrum non-negative", ok);
    }

    // Force decomposition at a cheap velocity.
    {
        const double V = 1e-4;
        const auto ctx = make_context(cfg.params, cfg.model, V);
        const auto full = force(ctx, V, ForceMode::full);
        const auto lte = force(ctx, V, ForceMode::lte);
        const auto j = force(ctx, V, ForceMode::j);
        const double gap = std::abs(full.f_over_f0 - lte.f_over_f0 - j.f_over_f0);
        const double budget =
            2.0 * (full.error_estimate + lte.error_estimate + j.error_estimate);
        report("force decomposition full = lte + j", gap <= budget);
    }

    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"quantum drag on a dipole moving above an Ohmic surface"};
    app.require_subcommand(1);

    CommonOpts common;

    auto* cmd_sweep = app.add_subcommand("sweep", "velocity sweep, CSV/JSON output");
    common.attach(cmd_sweep);
    double v_min = 1e-6, v_max = 1e-2;
    int points = 48;
    bool log_flag = true, linear_flag = false;
    std::string out_path, format = "csv", modes = "full,lte,j";
    cmd_sweep->add_option("--v-min", v_min, "lowest v/c");
    cmd_sweep->add_option("--v-max", v_max, "highest v/c");
    cmd_sweep->add_option("--points", points, "grid size");
    cmd_sweep->add_flag("--log", log_flag, "log-spaced grid (default)");
    cmd_sweep->add_flag("--linear", linear_flag, "linearly spaced grid");
    cmd_sweep->add_option("--out", out_path, "output path (default stdout)");
    cmd_sweep->add_option("--format", format, "csv | json");

    auto* cmd_point = app.add_subcommand("point", "single-velocity evaluation");
    common.attach(cmd_point);
    double point_v = 0.0;
    std::string point_modes = "full,lte,j";
    cmd_point->add_option("--V", point_v, "velocity v/c")->required();
    cmd_point->add_option("--mode", point_modes, "comma list of full,lte,j");

    auto* cmd_spectrum = app.add_subcommand("spectrum", "dipole power spectrum on a grid");
    common.attach(cmd_spectrum);
    double spec_v = 1e-3, xi_min = -0.5, xi_max = 1.5;
    int spec_points = 200;
    cmd_spectrum->add_option("--V", spec_v, "velocity v/c");
    cmd_spectrum->add_option("--xi-min", xi_min, "lowest xi");
    cmd_spectrum->add_option("--xi-max", xi_max, "highest xi");
    cmd_spectrum->add_option("--points", spec_points, "grid size");
    cmd_spectrum->add_option("--out", out_path, "output path (default stdout)");

    auto* cmd_asym = app.add_subcommand("asymptotics", "closed-form laws at a velocity");
    common.attach(cmd_asym);
    double asym_v = 1e-5;
    bool include_shift = false;
    cmd_asym->add_option("--V", asym_v, "velocity v/c");
    cmd_asym->add_flag("--include-shift", include_shift, "divide by the shift denominator");

    auto* cmd_avg = app.add_subcommand("average", "orientation averages of the angular factors");
    int order = 32;
    cmd_avg->add_option("--order", order, "quadrature order");

    auto* cmd_check = app.add_subcommand("check", "run the invariant suite");
    common.attach(cmd_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_sweep->parsed()) {
            RunConfig cfg = common.resolve();
            cfg.v_min = v_min;
            cfg.v_max = v_max;
            cfg.points = points;
            cfg.log_grid = !linear_flag;
            cfg.out_path = out_path;
            cfg.format = format;
            if (format != "csv" && format != "json")
                throw std::invalid_argument("format must be csv or json");
            return run_sweep(cfg);
        }
        if (cmd_point->parsed()) {
            RunConfig cfg = common.resolve();
            cfg.modes.clear();
            std::stringstream ss(point_modes);
            std::string m;
            while (std::getline(ss, m, ',')) cfg.modes.push_back(m);
            if (!(point_v > 0.0))
                throw std::domain_error("point: --V must be > 0");
            return run_point(cfg, point_v);
        }
        if (cmd_spectrum->parsed()) {
            RunConfig cfg = common.resolve();
            cfg.out_path = out_path;
            return run_spectrum(cfg, spec_v, xi_min, xi_max, spec_points);
        }
        if (cmd_asym->parsed()) return run_asymptotics(common.resolve(), asym_v, include_shift);
        if (cmd_avg->parsed()) return run_average(order);
        if (cmd_check->parsed()) return run_check(common.resolve());
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
