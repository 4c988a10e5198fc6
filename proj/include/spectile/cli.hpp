#pragma once

#include <string>
#include <vector>

namespace spectile::cli {

// Runs one subcommand (ft-eval, autocorr, verify-tiling, verify-spectrum,
// certify, analyze). Exit code 0: verified / certificate issued; 2: math
// verdict negative (refuted or refused), witness in the report; 1: usage or
// input errors.
int run_command(const std::vector<std::string>& args);

}  // namespace spectile::cli
