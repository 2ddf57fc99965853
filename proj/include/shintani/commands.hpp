#pragma once

#include <string>

#include "shintani/config.hpp"

namespace shintani {

Json cmd_field(const RunConfig& cfg);
Json cmd_decompose(const RunConfig& cfg);
Json cmd_zeta0(const RunConfig& cfg);
Json cmd_lvalue(const RunConfig& cfg);
Json cmd_measure(const RunConfig& cfg);
Json cmd_lp(const RunConfig& cfg);
// suite: cocycle, psi, fourier, subdivision or refinement.
Json cmd_verify(const RunConfig& cfg, const std::string& suite);

Json run_command(const std::string& name, const RunConfig& cfg, const std::string& suite = "");

} // namespace shintani
