#include "nessdrag/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nessdrag/constants.hpp"

namespace nessdrag {

RunConfig default_config()
{
    RunConfig cfg;
    cfg.params.xi_a = 0.2;
    cfg.params.Z = 0.1;
    cfg.params.eta = 0.1;
    cfg.params.alpha_sp = 5.97e-5;
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    cfg.params.dipole = {inv_sqrt3, inv_sqrt3, inv_sqrt3};
    cfg.model = SurfaceModel::drude(cfg.params.eta);
    return cfg;
}

namespace {

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& value)
{
    try {
        size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for '" + key + "': " + value);
    }
}

std::array<double, 3> parse_dipole(const std::string& value)
{
    std::array<double, 3> d{};
    std::string v = value;
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
        v = v.substr(1, v.size() - 2);
    std::stringstream ss(v);
    std::string part;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, part, ','))
            throw std::invalid_argument("config: dipole needs three comma-separated components");
        d[i] = to_double("dipole", trim(part));
    }
    if (std::getline(ss, part, ','))
        throw std::invalid_argument("config: dipole needs exactly three components");
    const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    if (!(n > 0.0))
        throw std::invalid_argument("config: dipole must be non-zero");
    for (auto& c : d) c /= n;
    return d;
}

} // namespace

std::map<std::string, std::string> read_key_values(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path + "'");
    std::map<std::string, std::string> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(line_no)
                                        + " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config: line " + std::to_string(line_no)
                                        + " is missing a key or value");
        entries[key] = value;
    }
    return entries;
}

RunConfig config_from_entries(const std::map<std::string, std::string>& entries, RunConfig base)
{
    static const char* known[] = {"alpha0_Fm2",   "omega_p_eV", "Gamma_over_omega_sp",
                                  "Z",            "xi_a",       "eta",
                                  "alpha_sp",     "dipole",     "material"};
    for (const auto& [key, value] : entries) {
        (void)value;
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok)
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }

    RunConfig cfg = base;
    const auto get = [&](const char* key) -> const std::string* {
        const auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };

    // SI group first: alpha0 + omega_p fix omega_sp, alpha_sp and F0.
    const std::string* alpha0 = get("alpha0_Fm2");
    const std::string* omega_p = get("omega_p_eV");
    const std::string* gamma_rel = get("Gamma_over_omega_sp");
    if (alpha0 || omega_p || gamma_rel) {
        if (!alpha0 || !omega_p || !gamma_rel)
            throw std::invalid_argument(
                "config: the SI group needs alpha0_Fm2, omega_p_eV and Gamma_over_omega_sp together");
        const double a0 = to_double("alpha0_Fm2", *alpha0);
        const double wp = ev_to_rad_s(to_double("omega_p_eV", *omega_p));
        const double g_rel = to_double("Gamma_over_omega_sp", *gamma_rel);
        const double omega_sp = wp / std::sqrt(2.0);
        SIInputs si;
        si.alpha0 = a0;
        si.omega_p = wp;
        si.Gamma = g_rel * omega_sp;
        // xi_a / Z stay as configured; pick placeholders for the conversion.
        si.omega_a = cfg.params.xi_a * omega_sp;
        si.z_a = cfg.params.Z * constants::c_light / omega_sp;
        si.v = 1.0;
        const auto bundle = from_si(si);
        cfg.params.eta = bundle.params.eta;
        cfg.params.alpha_sp = bundle.params.alpha_sp;
        cfg.norm = bundle.norm;
    }

    // Dimensionless keys override the SI-derived values.
    if (const auto* v = get("Z")) cfg.params.Z = to_double("Z", *v);
    if (const auto* v = get("xi_a")) cfg.params.xi_a = to_double("xi_a", *v);
    if (const auto* v = get("eta")) cfg.params.eta = to_double("eta", *v);
    if (const auto* v = get("alpha_sp")) cfg.params.alpha_sp = to_double("alpha_sp", *v);
    if (const auto* v = get("dipole")) cfg.params.dipole = parse_dipole(*v);

    std::string material = cfg.model.kind == SurfaceModel::Kind::drude ? "drude" : "ohmic";
    if (const auto* v = get("material")) material = *v;
    if (material == "drude")
        cfg.model = SurfaceModel::drude(cfg.params.eta);
    else if (material == "ohmic")
        cfg.model = SurfaceModel::linear_ohmic(1.0, cfg.params.eta);
    else
        throw std::invalid_argument("config: material must be 'drude' or 'ohmic'");

    validate(cfg.params);
    return cfg;
}

std::vector<double> make_grid(const RunConfig& cfg)
{
    if (cfg.points < 1)
        throw std::invalid_argument("config: points must be >= 1");
    if (!(cfg.v_min > 0.0) || !(cfg.v_max >= cfg.v_min))
        throw std::invalid_argument("config: need 0 < v_min <= v_max");
    std::vector<double> grid(cfg.points);
    if (cfg.points == 1) {
        grid[0] = cfg.v_min;
        return grid;
    }
    for (int i = 0; i < cfg.points; ++i) {
        const double t = static_cast<double>(i) / (cfg.points - 1);
        grid[i] = cfg.log_grid ? cfg.v_min * std::pow(cfg.v_max / cfg.v_min, t)
                               : cfg.v_min + (cfg.v_max - cfg.v_min) * t;
    }
    return grid;
}

} // namespace nessdrag
