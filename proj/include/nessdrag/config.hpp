#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nessdrag/material.hpp"
#include "nessdrag/params.hpp"

namespace nessdrag {

// Merged view of config file plus command-line overrides. Dimensionless keys
// win over the SI group when both are present.
struct RunConfig {
    SystemParams params; // defaults reproduce the reference velocity sweep
    SurfaceModel model = SurfaceModel::drude(0.1);
    std::optional<NormalizationInfo> norm; // present when SI inputs were given

    double v_min = 1e-6;
    double v_max = 1e-2;
    int points = 48;
    bool log_grid = true;

    std::string out_path;           // empty = stdout
    std::string format = "csv";     // csv | json
    std::vector<std::string> modes{"full", "lte", "j"};
};

RunConfig default_config();

// Flat `key = value` file; '#' starts a comment. Recognized keys:
//   alpha0_Fm2, omega_p_eV, Gamma_over_omega_sp   (SI group)
//   Z, xi_a, eta, alpha_sp, dipole = "x,y,z", material = drude|ohmic
// Unknown keys raise std::invalid_argument.
std::map<std::string, std::string> read_key_values(const std::string& path);

RunConfig config_from_entries(const std::map<std::string, std::string>& entries,
                              RunConfig base = default_config());

std::vector<double> make_grid(const RunConfig& cfg);

} // namespace nessdrag
