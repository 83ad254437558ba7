#pragma once

#include <string>

#include "redspec/theorems.hpp"

namespace redspec {

// Flat JSON configuration. Keys:
//   tol_c0 tol_erg tol_bohr tol_uc tol_match tol_analytic tol_tail
//   tol_conv tol_transform tol_ode tol_wiener         (all > 0)
//   grid ("min:max:step")  a_seq  delta_seq  eps_seq  seed
//   blowup_thresh  bandpass_width  output_step  window  eps_div  evolution_instances
struct Config {
  SuiteOptions suite;
};

FrequencyGrid parse_grid(const std::string& s);

// Applies the keys of j on top of base; unknown keys and invalid values are parse errors.
Config apply_config(const ojson& j, Config base = {});
Config load_config(const std::string& path, Config base = {});
ojson config_to_json(const Config& c);

}  // namespace redspec
